#include <doctest.h>

#include "ruled/classify.hpp"

using namespace ruled;

TEST_CASE("allowability of quintuples") {
  CHECK(is_allowable({2, 1, 3, 3, 0}));
  CHECK_FALSE(is_allowable({1, 1, 2, 1, 0}));  // t+k > mu
  CHECK_FALSE(is_allowable({0, 0, 1, 0, 1}));  // invalid curve type
  CHECK_FALSE(is_allowable({-1, 0, 2, 1, 0}));
  CHECK_FALSE(is_allowable({0, 0, 0, 0, 0}));  // rational base
}

TEST_CASE("realize produces the requested type") {
  const SurfaceRecipe r = realize({1, 1, 1, 2, 1});
  CHECK(r.curve == CurveType{1, 2, 1});
  CHECK(r.bundle.jac_component->partition().side().size() == 2);
  CHECK(r.tag == RealStructureTag::CPlus);
  CHECK(r.transforms.size() == 1);
  CHECK(topological_type(r) == Quintuple{1, 1, 1, 2, 1});

  CHECK_THROWS_AS(realize({1, 1, 2, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(realize({1, 0, 2, 1, 0}, true), std::invalid_argument);  // extraneous spin
  CHECK_THROWS_AS(realize({0, 0, 2, 0, 0}), std::invalid_argument);        // missing spin
}

TEST_CASE("empty-real-part realizations follow the spin table") {
  const SurfaceRecipe spin_even = realize({0, 0, 2, 0, 0}, true);
  CHECK(spin_even.bundle.relation == BundleRelation::Trivial);
  CHECK(spin_even.tag == RealStructureTag::CPlus);
  CHECK(normalize(spin_even).spin == true);

  const SurfaceRecipe nonspin_even = realize({0, 0, 2, 0, 0}, false);
  CHECK(nonspin_even.tag == RealStructureTag::CMinus);
  CHECK(normalize(nonspin_even).spin == false);

  const SurfaceRecipe nonspin_odd = realize({0, 0, 3, 0, 0}, false);
  CHECK(nonspin_odd.bundle.jac_component->flag() == EmptyRealPartFlag::Nontrivial);
  CHECK(normalize(nonspin_odd).spin == false);
  CHECK(normalize(realize({0, 0, 3, 0, 0}, true)).spin == true);
}

TEST_CASE("odd genus: the sign does not affect the spin bit") {
  SurfaceRecipe plus = realize({0, 0, 3, 0, 0}, false);
  SurfaceRecipe minus = plus;
  minus.tag = RealStructureTag::CMinus;
  CHECK(normalize(plus) == normalize(minus));
  SurfaceRecipe tplus = realize({0, 0, 3, 0, 0}, true);
  SurfaceRecipe tminus = tplus;
  tminus.tag = RealStructureTag::CMinus;
  CHECK(normalize(tplus) == normalize(tminus));
}

TEST_CASE("transform parity rules") {
  const SurfaceRecipe base = realize({2, 0, 1, 2, 1});
  const Quintuple q0 = topological_type(base);
  CHECK(q0 == Quintuple{2, 0, 1, 2, 1});

  const SurfaceRecipe once = elementary_transform(base, {true, 1});
  CHECK(topological_type(once) == Quintuple{1, 1, 1, 2, 1});
  const SurfaceRecipe twice = elementary_transform(once, {true, 1});
  CHECK(topological_type(twice) == q0);  // pair cancellation
  const SurfaceRecipe pair = elementary_transform(base, {false, 0});
  CHECK(topological_type(pair) == q0);  // conjugate pairs are neutral
  CHECK(same_deformation_class(base, pair));
  CHECK(same_deformation_class(base, twice));
  CHECK_FALSE(same_deformation_class(base, once));

  // a real-point site must lie over the structure's real locus
  CHECK_THROWS_AS(elementary_transform(base, {true, 5}), std::invalid_argument);
  CHECK_THROWS_AS(elementary_transform(base, {false, 1}), std::invalid_argument);
}

TEST_CASE("direct-sum recipes reduce divisor points to transform sites") {
  const CurveType ct{2, 2, 0};
  SurfaceRecipe r;
  r.curve = ct;
  r.bundle = make_bundle(2, BundleRelation::Real, ct);
  r.tag = RealStructureTag::DirectSum;
  CHECK(topological_type(r) == Quintuple{2, 0, 2, 2, 0});
  r.divisor_sites = {1, 2, 2};  // one real point on 1, two on 2
  CHECK(topological_type(r) == Quintuple{1, 1, 2, 2, 0});
  r.tag = RealStructureTag::CPlus;
  CHECK_THROWS_AS(check_recipe(r), std::invalid_argument);
}

TEST_CASE("class enumeration") {
  CHECK(enumerate_classes({1, 2, 1}).size() == 6);
  CHECK(enumerate_classes({1, 1, 0}).size() == 3);
  const auto empty_case = enumerate_classes({2, 0, 0});
  REQUIRE(empty_case.size() == 2);
  CHECK(empty_case[0].spin == false);
  CHECK(empty_case[1].spin == true);
  for (int g = 1; g <= 6; ++g)
    for (int mu = 1; mu <= g; ++mu)
      CHECK((int)enumerate_classes({g, mu, 0}).size() == (mu + 1) * (mu + 2) / 2);
  CHECK_THROWS_AS(enumerate_classes({0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_classes({2, 3, 0}), std::invalid_argument);
}

TEST_CASE("enumeration is sorted and every class is realizable") {
  const auto classes = enumerate_classes({3, 2, 1});
  for (size_t i = 1; i < classes.size(); ++i) CHECK(classes[i - 1] < classes[i]);
  for (const auto& d : classes) {
    const SurfaceRecipe r = realize(d.q, d.spin);
    CHECK(normalize(r) == d);
  }
}

TEST_CASE("same_deformation_class is an equivalence relation on samples") {
  std::vector<SurfaceRecipe> pool;
  for (const auto& d : enumerate_classes({2, 2, 0})) pool.push_back(realize(d.q, d.spin));
  for (const auto& d : enumerate_classes({2, 0, 0})) pool.push_back(realize(d.q, d.spin));
  for (const auto& a : pool) {
    CHECK(same_deformation_class(a, a));
    for (const auto& b : pool) {
      CHECK(same_deformation_class(a, b) == same_deformation_class(b, a));
      for (const auto& c : pool)
        if (same_deformation_class(a, b) && same_deformation_class(b, c))
          CHECK(same_deformation_class(a, c));
    }
  }
}

TEST_CASE("the rational table") {
  const auto table = rational_classes();
  REQUIRE(table.size() == 4);
  CHECK(table[0].real_part == "torus");
  CHECK(table[1].real_part == "sphere");
  CHECK_FALSE(table[1].fibered_over_base);
  CHECK(table[2].real_part == "empty");
  CHECK(table[3].real_part == "empty");
  REQUIRE(table[2].quotient_spin.has_value());
  REQUIRE(table[3].quotient_spin.has_value());
  CHECK(*table[2].quotient_spin != *table[3].quotient_spin);
  RationalClass a = table[2], b = table[3];
  a.quotient_spin.reset();
  b.quotient_spin.reset();
  CHECK(a == b);  // the two empty entries differ only in the spin flag
}
