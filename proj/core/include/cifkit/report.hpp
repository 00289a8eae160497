#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cifkit/token.hpp"

namespace cifkit {

using WitnessPart = std::variant<Token, TokenSet>;

/// One falsified axiom instance: the axiom id, the instantiation of its
/// quantifiers, and a human-readable message.
struct Violation {
  std::string axiom;
  std::vector<WitnessPart> witness;
  std::string message;

  bool operator<(const Violation& other) const;
  bool operator==(const Violation& other) const;
};

struct Report {
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  bool names(const std::string& axiom) const;
  std::vector<std::string> axiom_ids() const;

  void add(std::string axiom, std::vector<WitnessPart> witness, std::string message);
  void merge(const Report& other);
  /// Sorts by (axiom, witness); with keep_all=false keeps the first witness
  /// per axiom id.
  void finalize(bool keep_all);

  std::string to_text() const;
};

std::string witness_text(const std::vector<WitnessPart>& parts);

/// Options shared by the axiom checkers.
struct CheckOptions {
  bool all_witnesses = false;
  long long budget = 1'000'000;
};

}  // namespace cifkit
