#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cifkit/report.hpp"
#include "cifkit/structures.hpp"

namespace cifkit {

using Object = std::variant<Frame, InfoSystem>;

const TokenSet& object_tokens(const Object& o);

/// The entailment relation of s, retyped as a morphism s -> s. Mapping kind
/// for systems, family kind for frames.
Morphism identity_of(const InfoSystem& s);
Morphism identity_of(const Frame& f);
Morphism identity_of(const Object& o);

/// Diagrammatic composition g;h through the given middle object. Mapping
/// composition runs through the middle consistency family, family and global
/// composition through the middle frame's witnessed families.
Morphism compose(const Morphism& g, const Morphism& h, const Object& middle,
                 const CheckOptions& opts = {});

/// Exact equality of canonicalized relation tables. Requires equal kinds.
bool rel_equal(const Morphism& g, const Morphism& h);

struct DiagramMorphism {
  Morphism m;
  std::size_t src = 0;
  std::size_t dst = 0;
};

struct CategoryLawReport {
  bool assoc_ok = true;
  bool left_id_ok = true;
  bool right_id_ok = true;
  std::optional<std::string> counterexample;

  bool ok() const { return assoc_ok && left_id_ok && right_id_ok; }
};

/// Left/right identity and associativity over every composable pair and
/// triple of the finite diagram, decided by rel_equal.
CategoryLawReport check_category_laws(const std::vector<Object>& objects,
                                      const std::vector<DiagramMorphism>& morphisms,
                                      const CheckOptions& opts = {});

}  // namespace cifkit
