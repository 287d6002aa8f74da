#include "ruled/curve.hpp"

#include <algorithm>
#include <set>

namespace ruled {

bool is_valid_curve_type(int g, int mu, int eps) {
  if (g < 0 || mu < 0) return false;
  if (eps == 0) return mu <= g;
  if (eps == 1) return mu >= 1 && mu <= g + 1 && (mu - (g + 1)) % 2 == 0;
  return false;
}

Partition::Partition(int mu, std::vector<int> side) : mu_(mu) {
  if (mu < 0) throw std::invalid_argument("Partition: mu < 0");
  std::set<int> s(side.begin(), side.end());
  if (s.size() != side.size()) throw std::invalid_argument("Partition: duplicate indices");
  for (int i : s)
    if (i < 1 || i > mu) throw std::invalid_argument("Partition: index out of range");
  if (mu == 0) return;
  if (!s.count(1)) {
    // store the element containing component 1
    std::set<int> comp;
    for (int i = 1; i <= mu; ++i)
      if (!s.count(i)) comp.insert(i);
    s = comp;
  }
  side_.assign(s.begin(), s.end());
}

bool Partition::contains(int i) const {
  return std::binary_search(side_.begin(), side_.end(), i);
}

std::vector<int> Partition::complement() const {
  std::vector<int> out;
  for (int i = 1; i <= mu_; ++i)
    if (!contains(i)) out.push_back(i);
  return out;
}

bool Partition::operator<(const Partition& o) const {
  if (mu_ != o.mu_) return mu_ < o.mu_;
  return side_ < o.side_;
}

JacComponent JacComponent::partition_component(const CurveType& ct, const Partition& p) {
  if (!is_valid_curve_type(ct)) throw std::invalid_argument("invalid curve type");
  if (ct.mu < 1) throw std::invalid_argument("partition component requires mu >= 1");
  if (p.mu() != ct.mu) throw std::invalid_argument("partition mu mismatch");
  JacComponent c;
  c.has_partition_ = true;
  c.p_ = p;
  return c;
}

JacComponent JacComponent::empty_real_part(const CurveType& ct, EmptyRealPartFlag flag) {
  if (!is_valid_curve_type(ct)) throw std::invalid_argument("invalid curve type");
  if (ct.mu != 0) throw std::invalid_argument("empty real part requires mu = 0");
  if (flag == EmptyRealPartFlag::Nontrivial && ct.g % 2 == 0)
    throw std::invalid_argument("nontrivial component exists only for odd genus");
  JacComponent c;
  c.has_partition_ = false;
  c.flag_ = flag;
  return c;
}

const Partition& JacComponent::partition() const {
  if (!has_partition_) throw std::logic_error("JacComponent has no partition");
  return p_;
}

EmptyRealPartFlag JacComponent::flag() const {
  if (has_partition_) throw std::logic_error("JacComponent is a partition component");
  return flag_;
}

long long count_partitions(int mu) {
  if (mu < 1) throw std::invalid_argument("count_partitions requires mu >= 1");
  if (mu > 62) throw std::invalid_argument("count_partitions: mu too large");
  return 1LL << (mu - 1);
}

long long jac_real_component_count(const CurveType& ct) {
  if (!is_valid_curve_type(ct)) throw std::invalid_argument("invalid curve type");
  if (ct.mu > 0) return count_partitions(ct.mu);
  return ct.g % 2 == 0 ? 1 : 2;
}

JacComponent component_of_partition(const CurveType& ct, const Partition& p) {
  return JacComponent::partition_component(ct, p);
}

bool curves_deformation_equivalent(const CurveType& a, const CurveType& b) {
  if (!is_valid_curve_type(a) || !is_valid_curve_type(b))
    throw std::invalid_argument("invalid curve type");
  return a == b;
}

std::vector<Partition> all_partitions(int mu) {
  if (mu < 1) throw std::invalid_argument("all_partitions requires mu >= 1");
  if (mu > 24) throw std::invalid_argument("all_partitions: mu too large");
  std::vector<Partition> out;
  // canonical sides are exactly {1} ∪ S for S ⊆ {2..mu}
  for (unsigned long long mask = 0; mask < (1ULL << (mu - 1)); ++mask) {
    std::vector<int> side{1};
    for (int i = 2; i <= mu; ++i)
      if (mask & (1ULL << (i - 2))) side.push_back(i);
    out.emplace_back(mu, side);
  }
  return out;
}

}  // namespace ruled
