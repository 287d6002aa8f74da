#include "ruled/classify.hpp"

#include <algorithm>
#include <numeric>

namespace ruled {

bool is_allowable(const Quintuple& q) {
  return q.t >= 0 && q.k >= 0 && q.g >= 1 && is_valid_curve_type(q.g, q.mu, q.eps) &&
         q.t + q.k <= q.mu;
}

namespace {

/// Real base components over which the recipe's structure has real points.
std::vector<int> effective_side(const SurfaceRecipe& r) {
  std::vector<int> out;
  if (r.curve.mu == 0) return out;
  switch (r.tag) {
    case RealStructureTag::DirectSum: {
      out.resize(r.curve.mu);
      std::iota(out.begin(), out.end(), 1);
      return out;
    }
    case RealStructureTag::CPlus:
      return r.bundle.jac_component->partition().side();
    case RealStructureTag::CMinus:
      return r.bundle.jac_component->partition().complement();
  }
  throw std::logic_error("unreachable");
}

}  // namespace

void check_recipe(const SurfaceRecipe& r) {
  if (r.curve.g < 1)
    throw std::invalid_argument("rational bases are classified by the rational table");
  check_consistent(r.bundle, r.curve);
  if (!tag_admissible(r.bundle, r.curve, r.tag))
    throw std::invalid_argument("structure tag not admissible for this bundle class");
  const std::vector<int> side = effective_side(r);
  for (const TransformSite& s : r.transforms) {
    if (!s.real_point) {
      if (s.component != 0)
        throw std::invalid_argument("conjugate-pair sites carry no component index");
      continue;
    }
    if (std::find(side.begin(), side.end(), s.component) == side.end())
      throw std::invalid_argument("real-point site must lie over a real component of the structure");
  }
  if (!r.divisor_sites.empty() && r.tag != RealStructureTag::DirectSum)
    throw std::invalid_argument("divisor sites only describe direct-sum structures");
  for (int c : r.divisor_sites)
    if (c < 1 || c > r.curve.mu)
      throw std::invalid_argument("divisor site out of range");
}

Quintuple topological_type(const SurfaceRecipe& r) {
  check_recipe(r);
  Quintuple q{0, 0, r.curve.g, r.curve.mu, r.curve.eps};
  for (int c : effective_side(r)) {
    int flips = 0;
    for (const TransformSite& s : r.transforms)
      if (s.real_point && s.component == c) ++flips;
    for (int d : r.divisor_sites)
      if (d == c) ++flips;
    (flips % 2 == 0 ? q.t : q.k) += 1;
  }
  return q;
}

SurfaceRecipe elementary_transform(const SurfaceRecipe& r, const TransformSite& site) {
  SurfaceRecipe out = r;
  out.transforms.push_back(site);
  check_recipe(out);
  return out;
}

namespace {

bool spin_bit(const SurfaceRecipe& r) {
  // mu = 0 only: quotient spin flag of X/c_X
  if (r.tag == RealStructureTag::DirectSum) return true;
  const bool trivial_component =
      !r.bundle.jac_component->is_partition() &&
      r.bundle.jac_component->flag() == EmptyRealPartFlag::Trivial;
  if (r.curve.g % 2 == 0)
    return trivial_component && r.tag == RealStructureTag::CPlus;
  return trivial_component;  // odd genus: the sign does not matter
}

}  // namespace

DeformationClass normalize(const SurfaceRecipe& r) {
  DeformationClass out{topological_type(r), std::nullopt};
  if (r.curve.mu == 0) out.spin = spin_bit(r);
  return out;
}

bool same_deformation_class(const SurfaceRecipe& a, const SurfaceRecipe& b) {
  return normalize(a) == normalize(b);
}

SurfaceRecipe realize(const Quintuple& q, std::optional<bool> spin) {
  if (!is_allowable(q)) throw std::invalid_argument("quintuple is not allowable");
  if (spin.has_value() != (q.mu == 0))
    throw std::invalid_argument("spin bit required exactly when mu = 0");
  const CurveType ct{q.g, q.mu, q.eps};
  SurfaceRecipe r;
  r.curve = ct;
  if (q.mu == 0) {
    if (*spin) {
      r.bundle = make_bundle(0, BundleRelation::Trivial, ct);
      r.tag = RealStructureTag::CPlus;
    } else if (q.g % 2 == 0) {
      r.bundle = make_bundle(0, BundleRelation::Trivial, ct);
      r.tag = RealStructureTag::CMinus;
    } else {
      r.bundle = make_bundle(0, BundleRelation::AntiReal, ct, std::nullopt,
                             JacComponent::empty_real_part(ct, EmptyRealPartFlag::Nontrivial));
      r.tag = RealStructureTag::CPlus;
    }
    return r;
  }
  const int n = q.t + q.k;
  std::vector<int> side(n > 0 ? n : q.mu);
  std::iota(side.begin(), side.end(), 1);
  r.bundle = make_bundle(0, BundleRelation::AntiReal, ct, std::nullopt,
                         JacComponent::partition_component(ct, Partition(q.mu, side)));
  // with an empty target the complement of the full side realizes zero components
  r.tag = n > 0 ? RealStructureTag::CPlus : RealStructureTag::CMinus;
  for (int c = 1; c <= q.k; ++c) r.transforms.push_back({true, c});
  check_recipe(r);
  return r;
}

std::vector<DeformationClass> enumerate_classes(const CurveType& ct) {
  if (!is_valid_curve_type(ct)) throw std::invalid_argument("invalid curve type");
  if (ct.g < 1)
    throw std::invalid_argument("rational bases are classified by the rational table");
  std::vector<DeformationClass> out;
  if (ct.mu == 0) {
    out.push_back({{0, 0, ct.g, 0, ct.eps}, false});
    out.push_back({{0, 0, ct.g, 0, ct.eps}, true});
    return out;
  }
  for (int t = 0; t <= ct.mu; ++t)
    for (int k = 0; t + k <= ct.mu; ++k)
      out.push_back({{t, k, ct.g, ct.mu, ct.eps}, std::nullopt});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RationalClass> rational_classes() {
  return {
      {"torus", true, std::nullopt},
      {"sphere", false, std::nullopt},
      {"empty", true, true},
      {"empty", true, false},
  };
}

}  // namespace ruled
