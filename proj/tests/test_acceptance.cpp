// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ruled/classify.hpp"
#include "ruled/json_io.hpp"
#include "ruled/verify.hpp"

using namespace ruled;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  std::string detail;
  try {
    ok = body();
  } catch (const std::exception& e) {
    detail = std::string(" (") + e.what() + ")";
  }
  std::printf("%s %s%s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

BundleClass antireal_bundle(const CurveType& ct, std::vector<int> side) {
  return make_bundle(0, BundleRelation::AntiReal, ct, std::nullopt,
                     JacComponent::partition_component(ct, Partition(ct.mu, std::move(side))));
}

bool jacobian_component_counts() {
  for (int mu = 1; mu <= 10; ++mu)
    if (jac_real_component_count({mu, mu, 0}) != (1LL << (mu - 1))) return false;
  for (int g = 1; g <= 10; ++g)
    if (jac_real_component_count({g, 0, 0}) != (g % 2 == 0 ? 1 : 2)) return false;
  return true;
}

bool partition_bijection() {
  for (int mu = 1; mu <= 10; ++mu) {
    const CurveType ct{mu, mu, 0};
    const auto parts = all_partitions(mu);
    if ((long long)parts.size() != jac_real_component_count(ct)) return false;
    std::set<std::vector<int>> images;
    for (const Partition& p : parts) {
      auto [it, fresh] = images.insert(component_of_partition(ct, p).partition().side());
      (void)it;
      if (!fresh) return false;  // injectivity
    }
  }
  return true;
}

bool real_part_formula() {
  for (int mu = 1; mu <= 8; ++mu) {
    const CurveType ct{mu, mu, 0};
    for (const Partition& p : all_partitions(mu)) {
      const BundleClass b = antireal_bundle(ct, p.side());
      const RealPart plus = real_part(b, ct, RealStructureTag::CPlus);
      const RealPart minus = real_part(b, ct, RealStructureTag::CMinus);
      if (plus.klein != 0 || minus.klein != 0) return false;
      if (plus.tori != (int)p.side().size()) return false;
      if (plus.tori + minus.tori != mu) return false;
    }
  }
  return true;
}

bool conjugacy_table_matrix() {
  using Tag = RealStructureTag;
  const ConjugacyClass d{{Tag::DirectSum}, true};
  const ConjugacyClass cp{{Tag::CPlus}, true};
  const ConjugacyClass cm{{Tag::CMinus}, true};
  const ConjugacyClass merged_proved{{Tag::CPlus, Tag::CMinus}, true};
  const ConjugacyClass merged_unknown{{Tag::CPlus, Tag::CMinus}, false};

  const CurveType c33{3, 3, 0}, c22{2, 2, 0}, c32{3, 2, 0}, c20{2, 0, 0}, c30{3, 0, 0};
  const auto nontrivial30 =
      make_bundle(0, BundleRelation::AntiReal, c30, std::nullopt,
                  JacComponent::empty_real_part(c30, EmptyRealPartFlag::Nontrivial));
  const ConjugationWitness witness{WitnessCase::A, -1};

  struct Case {
    CurveType ct;
    BundleClass bundle;
    std::optional<ConjugationWitness> w;
    ConjugacyTable expected;
  };
  const std::vector<Case> cases = {
      // case 1: only the direct-sum lift
      {c33, make_bundle(3, BundleRelation::Real, c33), {}, {d}},
      {c22, make_bundle(2, BundleRelation::Real, c22), {}, {d}},
      {c20, make_bundle(2, BundleRelation::Real, c20, 1), {}, {d}},
      // no structure at all
      {c20, make_bundle(2, BundleRelation::Real, c20, -1), {}, {}},
      {c32, BundleClass{3, BundleRelation::None, {}, {}}, {}, {}},
      // case 2: the two switch structures, split / undecided / proved merge
      {c33, antireal_bundle(c33, {1, 2}), {}, {cp, cm}},
      {c32, antireal_bundle(c32, {1}), {}, {merged_unknown}},
      {c30, nontrivial30, {}, {merged_unknown}},
      {c30, nontrivial30, witness, {merged_proved}},
      {c22, make_bundle(0, BundleRelation::Trivial, c22), {}, {d, cp, cm}},
      {c20, make_bundle(0, BundleRelation::Trivial, c20), {}, {d, cp, cm}},
      // case 3: self-dual non-trivial classes
      {c33,
       make_bundle(0, BundleRelation::Both, c33, std::nullopt,
                   JacComponent::partition_component(c33, Partition(3, {1}))),
       {},
       {d, cp, cm}},
      {c30,
       make_bundle(0, BundleRelation::Both, c30, 1,
                   JacComponent::empty_real_part(c30, EmptyRealPartFlag::Nontrivial)),
       {},
       {d, merged_unknown}},
      {c20,
       make_bundle(0, BundleRelation::Both, c20, -1,
                   JacComponent::empty_real_part(c20, EmptyRealPartFlag::Trivial)),
       {},
       {merged_unknown}},
  };
  for (const Case& c : cases)
    if (classify_real_structures(c.bundle, c.ct, c.w) != c.expected) return false;
  return true;
}

bool symbolic_identity_suite() {
  const auto checks = verify::run_symbolic_suite(RULED_FIXTURES_DIR "/identities.json");
  return checks.size() == 10 && verify::all_pass(checks);
}

bool elliptic_model_suite() {
  const auto checks = verify::run_elliptic_suite();
  return checks.size() >= 7 && verify::all_pass(checks);
}

bool realization_round_trip() {
  for (int g = 1; g <= 6; ++g)
    for (int eps = 0; eps <= 1; ++eps)
      for (int mu = 0; mu <= g + 1; ++mu) {
        const CurveType ct{g, mu, eps};
        if (!is_valid_curve_type(ct)) continue;
        const auto classes = enumerate_classes(ct);
        const size_t want = mu == 0 ? 2 : (size_t)((mu + 1) * (mu + 2) / 2);
        if (classes.size() != want) return false;
        for (const auto& dc : classes) {
          if (!is_allowable(dc.q)) return false;
          const SurfaceRecipe r = realize(dc.q, dc.spin);
          if (topological_type(r) != dc.q) return false;
          if (normalize(r) != dc) return false;
        }
      }
  return true;
}

bool deformation_move_invariance() {
  std::mt19937 rng(20260823);
  std::vector<DeformationClass> starts;
  for (int g = 1; g <= 4; ++g)
    for (int eps = 0; eps <= 1; ++eps)
      for (int mu = 0; mu <= 4 && mu <= g + 1; ++mu) {
        const CurveType ct{g, mu, eps};
        if (!is_valid_curve_type(ct)) continue;
        for (const auto& dc : enumerate_classes(ct)) starts.push_back(dc);
      }
  std::uniform_int_distribution<size_t> pick_start(0, starts.size() - 1);
  std::uniform_int_distribution<int> move_count(1, 20), coin(0, 1);
  for (int trial = 0; trial < 1200; ++trial) {
    const DeformationClass start = starts[pick_start(rng)];
    SurfaceRecipe r = realize(start.q, start.spin);
    // real-point sites live over the side the recipe's structure selects
    std::vector<int> side;
    if (start.q.mu > 0) {
      const Partition& p = r.bundle.jac_component->partition();
      side = r.tag == RealStructureTag::CPlus ? p.side() : p.complement();
    }
    std::vector<int> parity(side.size(), 0);
    for (size_t i = 0; i < side.size() && (int)i < start.q.k; ++i) parity[i] = 1;
    const int moves = move_count(rng);
    for (int m = 0; m < moves; ++m) {
      if (side.empty() || coin(rng) == 0) {
        r = elementary_transform(r, {false, 0});  // conjugate pair: neutral
      } else {
        std::uniform_int_distribution<size_t> pick_side(0, side.size() - 1);
        const size_t i = pick_side(rng);
        r = elementary_transform(r, {true, side[i]});
        parity[i] ^= 1;  // the only allowed effect: one parity flip
      }
      DeformationClass expected = start;
      expected.q.t = expected.q.k = 0;
      for (int b : parity) (b ? expected.q.k : expected.q.t) += 1;
      if (normalize(r) != expected) return false;
    }
  }
  return true;
}

bool rational_table() {
  const auto table = rational_classes();
  if (table.size() != 4) return false;
  if (table[1].real_part != "sphere" || table[1].fibered_over_base) return false;
  if (table[2].real_part != "empty" || table[3].real_part != "empty") return false;
  if (!table[2].quotient_spin || !table[3].quotient_spin) return false;
  return *table[2].quotient_spin != *table[3].quotient_spin;
}

}  // namespace

int main() {
  criterion("1-jacobian-component-counts", jacobian_component_counts);
  criterion("2-partition-bijection", partition_bijection);
  criterion("3-real-part-formula", real_part_formula);
  criterion("4-conjugacy-table-matrix", conjugacy_table_matrix);
  criterion("5-symbolic-identities", symbolic_identity_suite);
  criterion("6-elliptic-model-suite", elliptic_model_suite);
  criterion("7-realization-round-trip", realization_round_trip);
  criterion("8-deformation-move-invariance", deformation_move_invariance);
  criterion("9-rational-table", rational_table);
  return g_failures == 0 ? 0 : 1;
}
