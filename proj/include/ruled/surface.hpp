#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ruled/bundle.hpp"
#include "ruled/curve.hpp"

namespace ruled {

/// The real structures a ruled surface P(L + L_0) can carry over (B, c_B):
/// the direct-sum lift c_L + c_{L_0} when L has a real lift, and the two
/// signed switch structures c+ / c- when c_B^*(L) = L*.
enum class RealStructureTag { DirectSum, CPlus, CMinus };

/// One conjugacy class of real structures; `proved` records whether the
/// grouping is a theorem of the engine or only an undecided merge.
struct ConjugacyClass {
  std::vector<RealStructureTag> tags;
  bool proved = true;
  bool operator==(const ConjugacyClass&) const = default;
};

using ConjugacyTable = std::vector<ConjugacyClass>;

enum class ConjugacyAnswer { Conjugate, NotConjugate, Unknown };

/// A claimed conjugating map between c- and c+: either the diagonal form
/// diag(g, 1) (case A) or the antidiagonal form with entry h (case B), each
/// valid exactly under its function-field hypothesis with sign -1.
enum class WitnessCase { A, B };

struct ConjugationWitness {
  WitnessCase kind = WitnessCase::A;
  int hyp_sign = -1;
};

struct WitnessValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Decides whether c+ and c- are conjugate. NotConjugate when L is trivial
/// or the number of real base components is odd; Conjugate only when a
/// witness validates symbolically (an invalid witness throws); Unknown
/// otherwise.
ConjugacyAnswer cplus_cminus_conjugate(
    const BundleClass& b, const CurveType& ct,
    const std::optional<ConjugationWitness>& witness = std::nullopt);

/// Conjugacy classes of real structures on P(L + L_0) lifting c_B.
ConjugacyTable classify_real_structures(
    const BundleClass& b, const CurveType& ct,
    const std::optional<ConjugationWitness>& witness = std::nullopt);

/// Whether the tag names an actual real structure for this bundle class.
bool tag_admissible(const BundleClass& b, const CurveType& ct, RealStructureTag tag);

/// Connected components of the real part, by homeomorphism type.
struct RealPart {
  int tori = 0;
  int klein = 0;
  bool operator==(const RealPart&) const = default;
};

/// Real part of c+ or c-: tori over one side of the bundle's partition,
/// never Klein bottles. Throws for the DirectSum tag (its topology is
/// computed by recipe normalization); returns (0, 0) when mu = 0.
RealPart real_part(const BundleClass& b, const CurveType& ct, RealStructureTag tag);

/// Shape of a fiber-preserving automorphism of P(L + L_0) over the identity
/// of B: upper-triangular, or the factor switch phi_lambda.
struct AutDescriptor {
  bool swaps_factors = false;
  bool operator==(const AutDescriptor&) const = default;
};

/// Whether the automorphism lifts to the rank-2 bundle L + L_0: always,
/// except for the switch when L = L* but L is not trivial.
bool automorphism_lifts(const BundleClass& b, const AutDescriptor& phi);

}  // namespace ruled
