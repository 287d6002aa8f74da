#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ruled/bundle.hpp"
#include "ruled/curve.hpp"
#include "ruled/surface.hpp"

namespace ruled {

/// Topological type of a real ruled surface: component counts of the real
/// part plus the base curve's type.
struct Quintuple {
  int t = 0;    // torus components
  int k = 0;    // Klein-bottle components
  int g = 0;    // base genus
  int mu = 0;   // real base components
  int eps = 0;  // dividing flag
  auto operator<=>(const Quintuple&) const = default;
};

/// t, k >= 0, t + k <= mu, g >= 1 and (g, mu, eps) a valid curve type.
bool is_allowable(const Quintuple& q);

/// One elementary transformation: at a real point of the fiber over the given
/// real base component, or at a pair of conjugate imaginary points.
struct TransformSite {
  bool real_point = true;
  int component = 0;  // 1-based real base component; 0 for conjugate pairs
  auto operator<=>(const TransformSite&) const = default;
};

/// A constructible real ruled surface: P(L + L_0) with a chosen real
/// structure, modified by elementary transformations. For direct-sum
/// structures with nonzero-degree L, `divisor_sites` lists the real base
/// components carrying the real points of D+ and D- (one entry per point),
/// which reduce to transformations of the product surface.
struct SurfaceRecipe {
  CurveType curve;
  BundleClass bundle;
  RealStructureTag tag = RealStructureTag::CPlus;
  std::vector<TransformSite> transforms;
  std::vector<int> divisor_sites;
};

/// Throws std::invalid_argument unless the recipe is internally consistent.
void check_recipe(const SurfaceRecipe& r);

struct DeformationClass {
  Quintuple q;
  std::optional<bool> spin;  // present iff mu = 0
  auto operator<=>(const DeformationClass&) const = default;
};

/// Builds a recipe realizing the quintuple; spin must be supplied iff mu = 0.
SurfaceRecipe realize(const Quintuple& q, std::optional<bool> spin = std::nullopt);

/// The (t, k, g, mu, eps) of the recipe's real part: components over the
/// structure's real locus, each flipped to a Klein bottle when it carries an
/// odd number of real-point modifications.
Quintuple topological_type(const SurfaceRecipe& r);

/// Appends a transformation site after validating it against the recipe.
SurfaceRecipe elementary_transform(const SurfaceRecipe& r, const TransformSite& site);

/// Normal form of the recipe under the deformation moves: the quintuple plus
/// the spin bit of the quotient when mu = 0.
DeformationClass normalize(const SurfaceRecipe& r);

/// Deformation equivalence, decided by normal-form equality. Requires g >= 1.
bool same_deformation_class(const SurfaceRecipe& a, const SurfaceRecipe& b);

/// All deformation classes over a fixed curve type, sorted by (t, k, spin).
std::vector<DeformationClass> enumerate_classes(const CurveType& ct);

/// The fixed classification over a rational base.
struct RationalClass {
  std::string real_part;                  // "torus", "sphere" or "empty"
  bool fibered_over_base = true;          // real part fibers over a real structure of P1
  std::optional<bool> quotient_spin;      // distinguishes the two empty classes
  bool operator==(const RationalClass&) const = default;
};

std::vector<RationalClass> rational_classes();

}  // namespace ruled
