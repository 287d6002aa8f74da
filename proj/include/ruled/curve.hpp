#pragma once

#include <stdexcept>
#include <vector>

namespace ruled {

/// Topological type (g, mu, eps) of a smooth compact irreducible real
/// algebraic curve: genus, number of real components, dividing flag.
struct CurveType {
  int g = 0;
  int mu = 0;
  int eps = 0;  // 1 = dividing, 0 = non-dividing

  bool operator==(const CurveType&) const = default;
};

bool is_valid_curve_type(int g, int mu, int eps);

inline bool is_valid_curve_type(const CurveType& ct) {
  return is_valid_curve_type(ct.g, ct.mu, ct.eps);
}

/// Unordered two-element partition of the real components {1..mu}.
/// Canonical form: the stored side is the element containing component 1
/// (for mu = 0 only the empty partition exists).
class Partition {
 public:
  Partition() = default;
  Partition(int mu, std::vector<int> side);

  int mu() const { return mu_; }
  const std::vector<int>& side() const { return side_; }
  bool contains(int i) const;
  std::vector<int> complement() const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const;

 private:
  int mu_ = 0;
  std::vector<int> side_;  // sorted; contains 1 whenever mu >= 1
};

enum class EmptyRealPartFlag { Trivial, Nontrivial };

/// A connected component of the real part of (Jac(B), -c_B^*): indexed by a
/// partition of RB when mu > 0, by a trivial/nontrivial flag when mu = 0.
class JacComponent {
 public:
  static JacComponent partition_component(const CurveType& ct, const Partition& p);
  static JacComponent empty_real_part(const CurveType& ct, EmptyRealPartFlag flag);

  bool is_partition() const { return has_partition_; }
  const Partition& partition() const;
  EmptyRealPartFlag flag() const;

  bool operator==(const JacComponent&) const = default;

 private:
  JacComponent() = default;
  bool has_partition_ = false;
  Partition p_;
  EmptyRealPartFlag flag_ = EmptyRealPartFlag::Trivial;
};

/// Number of partitions of mu real components in two elements: 2^(mu-1).
long long count_partitions(int mu);

/// Number of connected components of the real part of (Jac(B), -c_B^*).
long long jac_real_component_count(const CurveType& ct);

JacComponent component_of_partition(const CurveType& ct, const Partition& p);

bool curves_deformation_equivalent(const CurveType& a, const CurveType& b);

/// All canonical partitions of {1..mu}, mu >= 1.
std::vector<Partition> all_partitions(int mu);

}  // namespace ruled
