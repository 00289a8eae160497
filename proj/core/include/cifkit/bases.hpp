#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cifkit/report.hpp"
#include "cifkit/structures.hpp"

namespace cifkit {

/// Set with a transitive relation satisfying the interpolation law. The
/// M = ∅ instance is included, so every element needs a predecessor.
struct AbstractBasis {
  TokenSet carrier;
  std::vector<std::pair<Token, Token>> prec;

  bool operator==(const AbstractBasis&) const = default;

  bool prec_has(const Token& u, const Token& v) const;
  TokenSet predecessors(const Token& v) const;

  void canonicalize();
};

/// Rounded-ideal completion of a finite abstract basis. Elements are the
/// ideals, leq is set inclusion by index, way_below the approximation
/// relation computed from its directed-set definition.
struct FinitePoset {
  std::vector<TokenSet> elements;
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  std::vector<std::pair<std::size_t, std::size_t>> way_below;

  bool leq_has(std::size_t a, std::size_t b) const;
  bool way_below_has(std::size_t a, std::size_t b) const;
};

/// Basis of a simplified continuous information system: carrier = consistent
/// sets, X ≺ Y iff Y entails every member of X. Transitivity follows from
/// cut; interpolation is verified and Errc::interp_fail carries the first
/// failing (M, x).
AbstractBasis extract_basis(const InfoSystem& s);

/// Axiom ids: prec-transitivity, prec-interpolation.
Report check_abstract_basis(const AbstractBasis& b, const CheckOptions& opts = {});

/// The four approximable-relation conditions for r between b and c. Axiom
/// ids: ar(1) .. ar(4).
Report check_approx_relation(const std::vector<std::pair<Token, Token>>& r,
                             const AbstractBasis& b, const AbstractBasis& c,
                             const CheckOptions& opts = {});

/// All nonempty down-closed directed subsets, ordered by inclusion. Carrier
/// size is hard-capped at 14.
FinitePoset complete(const AbstractBasis& b);

/// DOT digraph of the Hasse reduction of leq; way-below pairs drawn dashed
/// when annotated. Deterministic node naming from ideal contents.
std::string export_dot(const FinitePoset& p, bool annotate_way_below);

}  // namespace cifkit
