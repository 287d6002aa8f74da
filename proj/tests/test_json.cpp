#include <doctest.h>

#include "ruled/json_io.hpp"

using namespace ruled;
using namespace ruled::io;

TEST_CASE("curve and quintuple round trips") {
  const CurveType ct{3, 2, 0};
  CHECK(curve_from_json(curve_to_json(ct)) == ct);
  CHECK(curve_to_json(ct).dump() == R"({"g":3,"mu":2,"eps":0})");
  const Quintuple q{2, 1, 3, 3, 0};
  CHECK(quintuple_from_json(quintuple_to_json(q)) == q);
}

TEST_CASE("bundle round trips through the documented schema") {
  const CurveType ct{3, 2, 0};
  const auto b = make_bundle(0, BundleRelation::AntiReal, ct, std::nullopt,
                             JacComponent::partition_component(ct, Partition(2, {1})));
  const auto j = bundle_to_json(b);
  CHECK(j.at("relation") == "antireal");
  CHECK(j.at("obstruction").is_null());
  CHECK(j.at("jac_component").at("side") == nlohmann::json::array({1}));
  const auto back = bundle_from_json(ct, j);
  CHECK(bundle_to_json(back).dump() == j.dump());

  const CurveType mu0{3, 0, 0};
  const auto b2 = make_bundle(2, BundleRelation::Real, mu0, -1);
  CHECK(bundle_to_json(bundle_from_json(mu0, bundle_to_json(b2))).dump() ==
        bundle_to_json(b2).dump());
}

TEST_CASE("recipe round trips byte for byte") {
  for (const auto& d : enumerate_classes({2, 3, 1})) {
    const SurfaceRecipe r = realize(d.q, d.spin);
    const auto j = recipe_to_json(r);
    CHECK(recipe_to_json(recipe_from_json(j)).dump() == j.dump());
  }
  for (const auto& d : enumerate_classes({3, 0, 0})) {
    const SurfaceRecipe r = realize(d.q, d.spin);
    const auto j = recipe_to_json(r);
    CHECK(recipe_to_json(recipe_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("deformation class serialization") {
  const DeformationClass with_spin{{0, 0, 2, 0, 0}, true};
  const auto j = deformation_class_to_json(with_spin);
  CHECK(j.at("spin") == true);
  CHECK(deformation_class_from_json(j) == with_spin);
  const DeformationClass no_spin{{1, 0, 2, 1, 0}, std::nullopt};
  CHECK(deformation_class_to_json(no_spin).at("spin").is_null());
  CHECK(deformation_class_from_json(deformation_class_to_json(no_spin)) == no_spin);
}

TEST_CASE("conjugacy table serialization") {
  const CurveType ct{3, 3, 0};
  const auto both = make_bundle(0, BundleRelation::Both, ct, std::nullopt,
                                JacComponent::partition_component(ct, Partition(3, {1})));
  const auto j = conjugacy_table_to_json(classify_real_structures(both, ct));
  REQUIRE(j.size() == 3);
  CHECK(j[0].at("class") == nlohmann::json::array({"direct_sum"}));
  for (const auto& row : j) CHECK(row.at("status") == "proved");
}

TEST_CASE("torus point serialization uses exact fractions") {
  const ell::TorusPoint p{ell::Rat(1, 2), ell::Rat(0)};
  const auto j = torus_point_to_json(p);
  CHECK(j.at("x") == "1/2");
  CHECK(j.at("y") == "0");
  CHECK(torus_point_from_json(j) == p);
  CHECK(torus_point_from_json(nlohmann::json{{"x", "7/3"}, {"y", "-1/4"}}) ==
        ell::TorusPoint{ell::Rat(1, 3), ell::Rat(3, 4)});
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS(relation_from_name("weird"));
  CHECK_THROWS(tag_from_name("weird"));
  CHECK_THROWS(recipe_from_json(nlohmann::json{{"curve", {{"g", 2}, {"mu", 1}, {"eps", 0}}}}));
}
