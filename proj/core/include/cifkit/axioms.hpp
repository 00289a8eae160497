#pragma once

#include <utility>
#include <vector>

#include "cifkit/report.hpp"
#include "cifkit/structures.hpp"

namespace cifkit {

enum class SystemLevel { scis, cis };

/// Verifies the defining conditions of a (simplified) continuous information
/// system. Axiom ids: sys(1), sys(2) [cis only], sys(3), sys(4), sys(5),
/// sys(6). All universally quantified set conditions are checked at the
/// maximal entailed set.
Report check_system(const InfoSystem& s, SystemLevel level, const CheckOptions& opts = {});

/// Verifies the eight frame conditions, plus (S) when require_strong and (T)
/// when require_truth. Axiom ids: self-consistency, consistency-preservation,
/// soundness, weakening, cut, consistency-transfer, entailment-transfer,
/// interpolation, (S), (T).
Report check_frame(const Frame& f, bool require_strong, bool require_truth,
                   const CheckOptions& opts = {});

/// The relation iRj <=> {i} in Con_j, materialized.
struct DerivedR {
  std::vector<std::pair<Token, Token>> pairs;

  bool has(const Token& i, const Token& j) const;
};

DerivedR derived_R(const Frame& f);

/// Approximable-mapping conditions between systems that pass check_system at
/// level scis. Axiom ids: map(1), map(2), map(3), map(4a), map(4b), map(5).
Report check_mapping(const Morphism& h, const InfoSystem& src, const InfoSystem& dst,
                     const CheckOptions& opts = {});

/// Approximable-family conditions between frames, plus truth respect on
/// demand. Axiom ids: fam(a), fam(b), fam(c), fam(d), fam(e1), fam(e2),
/// fam(T).
Report check_family(const Morphism& h, const Frame& src, const Frame& dst,
                    bool require_truth_respect, const CheckOptions& opts = {});

/// Executable consequences of the frame axioms: m1 (entailed tokens are
/// R-related), m2 (strengthened cut), m3a/m3b (local interpolation). These
/// hold on every frame passing check_frame; a failure flags a checker bug or
/// an invalid input.
Report verify_metatheorems(const Frame& f, const CheckOptions& opts = {});

}  // namespace cifkit
