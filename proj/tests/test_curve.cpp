#include <doctest.h>

#include <set>

#include "ruled/curve.hpp"

using namespace ruled;

TEST_CASE("curve type validity") {
  CHECK(is_valid_curve_type(3, 3, 0));
  CHECK(is_valid_curve_type(3, 0, 0));
  CHECK(is_valid_curve_type(2, 3, 1));  // mu = g + 1
  CHECK(is_valid_curve_type(2, 1, 1));  // mu = g - 1, right parity
  CHECK_FALSE(is_valid_curve_type(2, 2, 1));  // wrong parity for a dividing curve
  CHECK_FALSE(is_valid_curve_type(1, 0, 1));  // dividing needs real points
  CHECK_FALSE(is_valid_curve_type(2, 3, 0));  // mu > g
  CHECK_FALSE(is_valid_curve_type(-1, 0, 0));
  CHECK_FALSE(is_valid_curve_type(2, -1, 0));
  CHECK_FALSE(is_valid_curve_type(2, 2, 2));
}

TEST_CASE("partition canonical form") {
  Partition p(4, {2, 3});
  // the stored side is the element containing component 1
  CHECK(p.side() == std::vector<int>{1, 4});
  CHECK(p == Partition(4, {1, 4}));
  CHECK(p.complement() == std::vector<int>{2, 3});
  CHECK(p.contains(1));
  CHECK_FALSE(p.contains(2));
  CHECK_THROWS_AS(Partition(3, {1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(3, {1, 1}), std::invalid_argument);
}

TEST_CASE("partition counts match component counts") {
  for (int mu = 1; mu <= 10; ++mu) {
    CHECK(count_partitions(mu) == (1LL << (mu - 1)));
    CHECK(jac_real_component_count({mu, mu, 0}) == count_partitions(mu));
  }
  CHECK(jac_real_component_count({2, 0, 0}) == 1);
  CHECK(jac_real_component_count({3, 0, 0}) == 2);
  CHECK(jac_real_component_count({4, 0, 0}) == 1);
}

TEST_CASE("all_partitions is a bijection onto components") {
  for (int mu = 1; mu <= 10; ++mu) {
    const auto parts = all_partitions(mu);
    CHECK((long long)parts.size() == count_partitions(mu));
    std::set<Partition> distinct(parts.begin(), parts.end());
    CHECK(distinct.size() == parts.size());
    const CurveType ct{mu, mu, 0};
    std::set<std::vector<int>> images;
    for (const Partition& p : parts) {
      CHECK(p.contains(1));
      images.insert(component_of_partition(ct, p).partition().side());
    }
    CHECK((long long)images.size() == jac_real_component_count(ct));
  }
}

TEST_CASE("empty-real-part components") {
  const CurveType even{2, 0, 0}, odd{3, 0, 0};
  CHECK_NOTHROW(JacComponent::empty_real_part(even, EmptyRealPartFlag::Trivial));
  CHECK_THROWS_AS(JacComponent::empty_real_part(even, EmptyRealPartFlag::Nontrivial),
                  std::invalid_argument);
  const auto nontrivial = JacComponent::empty_real_part(odd, EmptyRealPartFlag::Nontrivial);
  CHECK_FALSE(nontrivial.is_partition());
  CHECK(nontrivial.flag() == EmptyRealPartFlag::Nontrivial);
  CHECK_THROWS_AS(nontrivial.partition(), std::logic_error);
}

TEST_CASE("curve deformation equivalence is the type equality") {
  CHECK(curves_deformation_equivalent({3, 2, 0}, {3, 2, 0}));
  CHECK_FALSE(curves_deformation_equivalent({3, 2, 0}, {3, 2, 1}));
  CHECK_FALSE(curves_deformation_equivalent({3, 2, 0}, {3, 1, 0}));
  CHECK_THROWS_AS(curves_deformation_equivalent({2, 3, 0}, {2, 3, 0}), std::invalid_argument);
}
