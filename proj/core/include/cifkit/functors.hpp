#pragma once

#include <string>
#include <vector>

#include "cifkit/category.hpp"
#include "cifkit/report.hpp"
#include "cifkit/structures.hpp"

namespace cifkit {

enum class FunctorTag { F, S, T, W };

struct FunctorOptions {
  /// Largest admitted consistency family per token in F and T images. The
  /// construction fails loudly instead of truncating.
  std::size_t family_limit = 4096;
  /// Name of the invented truth atom for W.
  std::string truth_name = kReservedTruthName;
  long long budget = 1'000'000;
};

/// F: simplified continuous information systems to strong frames. Tokens of
/// the image are the consistent sets; each family is {{X}} together with the
/// powerset of the sets entailed by X.
Frame apply_F(const InfoSystem& s, const FunctorOptions& opts = {});
Morphism apply_F(const Morphism& h, const InfoSystem& src, const InfoSystem& dst,
                 const FunctorOptions& opts = {});

/// S: strong frames to continuous information systems, adding the consistency
/// witness to each consistent set. Entailment is the union over all valid
/// decompositions X = X̄ ∪ {a}.
InfoSystem apply_S(const Frame& f);
Morphism apply_S(const Morphism& h, const Frame& src, const Frame& dst);

/// T: frames to strong frames over pair tokens (a, X) with X in Con_a.
Frame apply_T(const Frame& f, const FunctorOptions& opts = {});
Morphism apply_T(const Morphism& h, const Frame& src, const Frame& dst,
                 const FunctorOptions& opts = {});

/// W: adjoins a fresh truth token to a frame.
Frame apply_W(const Frame& f, const FunctorOptions& opts = {});
Morphism apply_W(const Morphism& h, const Frame& src, const Frame& dst,
                 const FunctorOptions& opts = {});

enum class WitnessPairId { PQ, ST, MN, JL };

WitnessPairId witness_pair_from_name(const std::string& name);
std::string_view witness_pair_name(WitnessPairId id);

/// The natural-isomorphism witness tables for one object of the pair's source
/// class. forward: object -> transformed, backward: transformed -> object.
struct WitnessPair {
  WitnessPairId id = WitnessPairId::PQ;
  Morphism forward;
  Morphism backward;
  /// The transformed object (F'(S(A)), S(F'(S)), T(A), or W(A)).
  Object transformed;
};

WitnessPair witness(WitnessPairId id, const Object& obj, const FunctorOptions& opts = {});

/// The transformed object and morphism action of the pair's round trip
/// (object -> same class), used by the naturality squares.
Object equivalence_image(WitnessPairId id, const Object& obj, const FunctorOptions& opts = {});
Morphism equivalence_image(WitnessPairId id, const Morphism& h, const Object& src,
                           const Object& dst, const FunctorOptions& opts = {});

/// For every object: both witness composites equal identities. For every
/// morphism H: src -> dst over the object list: the pair's naturality square
/// commutes exactly. Axiom ids: <pair>.forward-backward, <pair>.backward-forward,
/// <pair>.naturality.
Report verify_equivalence(WitnessPairId id, const std::vector<Object>& objects,
                          const std::vector<DiagramMorphism>& morphisms,
                          const FunctorOptions& opts = {});

}  // namespace cifkit
