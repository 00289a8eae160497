#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cifkit/token.hpp"

namespace cifkit {

/// Reserved atom used when a fresh truth token has to be invented.
inline const std::string kReservedTruthName = "#T";

/// One entailment tuple X -> a. For frames the witness token is kept
/// alongside in the per-stage map.
struct Entailment {
  TokenSet from;
  Token to;

  auto operator<=>(const Entailment&) const = default;
};

/// Continuous information frame: per-token consistency families Con_i and
/// per-token entailment relations, all stored extensionally.
struct Frame {
  TokenSet tokens;
  std::map<Token, std::vector<TokenSet>> con;
  std::map<Token, std::vector<Entailment>> entails;
  std::optional<Token> truth;

  bool operator==(const Frame&) const = default;

  const std::vector<TokenSet>& con_of(const Token& i) const;
  const std::vector<Entailment>& entails_of(const Token& i) const;
  bool consistent_at(const Token& i, const TokenSet& x) const;
  bool entails_at(const Token& i, const TokenSet& x, const Token& a) const;

  void canonicalize();
};

/// Continuous information system: one global consistency family and one
/// entailment relation.
struct InfoSystem {
  TokenSet tokens;
  std::vector<TokenSet> con;
  std::vector<Entailment> entails;
  bool simplified = false;

  bool operator==(const InfoSystem&) const = default;

  bool consistent(const TokenSet& x) const;
  bool entails_pair(const TokenSet& x, const Token& a) const;

  void canonicalize();
};

enum class MorphismKind { mapping, family, global };

std::string_view morphism_kind_name(MorphismKind k);

/// Relation tuple of a morphism. `stage` is absent for plain approximable
/// mappings and carries the witness token for families and global relations.
struct RelTriple {
  std::optional<Token> stage;
  TokenSet from;
  Token to;

  auto operator<=>(const RelTriple&) const = default;
};

/// Relation table typed as approximable mapping, approximable family, or
/// global consequence relation. Endpoints are referenced by document path;
/// in-memory composites may leave the paths empty.
struct Morphism {
  MorphismKind kind = MorphismKind::mapping;
  std::string source;
  std::string target;
  std::vector<RelTriple> rel;

  bool operator==(const Morphism&) const = default;

  bool has(const std::optional<Token>& stage, const TokenSet& x, const Token& b) const;

  void canonicalize();
};

using Structure = std::variant<Frame, InfoSystem, Morphism>;

/// Checks the declared-universe and domain invariants of a frame; throws
/// Errc::unknown_token / Errc::ent_domain / Errc::duplicate_set on violation.
void validate_wellformed(const Frame& f);
void validate_wellformed(const InfoSystem& s);

/// Morphism well-formedness against its endpoints (X in source family,
/// targets in target universe, stages present exactly when the kind needs
/// them).
void validate_morphism(const Morphism& m, const Structure& source, const Structure& target);

}  // namespace cifkit
