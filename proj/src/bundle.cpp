#include "ruled/bundle.hpp"

#include <numeric>

namespace ruled {

namespace {

bool degree_zero_relation(BundleRelation r) {
  return r == BundleRelation::AntiReal || r == BundleRelation::Both ||
         r == BundleRelation::Trivial;
}

bool trivial_component(const JacComponent& jc, const CurveType& ct) {
  if (ct.mu == 0) return !jc.is_partition() && jc.flag() == EmptyRealPartFlag::Trivial;
  // the component of L_0 is the trivial partition {∅, all}
  return jc.is_partition() && (int)jc.partition().side().size() == ct.mu;
}

}  // namespace

void check_consistent(const BundleClass& b, const CurveType& ct) {
  if (!is_valid_curve_type(ct)) throw std::invalid_argument("invalid curve type");
  if (degree_zero_relation(b.relation) && b.degree != 0)
    throw std::invalid_argument("relation forces degree 0 (deg L = -deg L*)");
  const bool wants_jac = b.degree == 0 && degree_zero_relation(b.relation);
  if (wants_jac != b.jac_component.has_value())
    throw std::invalid_argument("jac_component present iff degree 0 and c_B^*(L) = L*");
  if (b.jac_component) {
    const JacComponent& jc = *b.jac_component;
    if (jc.is_partition()) {
      if (ct.mu < 1 || jc.partition().mu() != ct.mu)
        throw std::invalid_argument("jac_component partition does not match curve");
    } else {
      if (ct.mu != 0) throw std::invalid_argument("empty-real-part component requires mu = 0");
      if (jc.flag() == EmptyRealPartFlag::Nontrivial && ct.g % 2 == 0)
        throw std::invalid_argument("nontrivial component requires odd genus");
    }
    if (b.relation == BundleRelation::Trivial && !trivial_component(jc, ct))
      throw std::invalid_argument("trivial bundle must sit in the component of L_0");
  }
  const bool obstruction_relation =
      b.relation == BundleRelation::Real || b.relation == BundleRelation::Both;
  if (b.obstruction) {
    if (!obstruction_relation)
      throw std::invalid_argument("obstruction only meaningful for c_B^*(L) = L");
    if (*b.obstruction != 1 && *b.obstruction != -1)
      throw std::invalid_argument("obstruction must be +-1");
    if (ct.mu > 0 && *b.obstruction != 1)
      throw std::invalid_argument("obstruction is +1 whenever RB is non-empty");
  } else if (obstruction_relation && ct.mu == 0) {
    throw std::invalid_argument("obstruction required for c_B^*(L) = L with empty RB");
  }
}

BundleClass make_bundle(int degree, BundleRelation rel, const CurveType& ct,
                        std::optional<int> obstruction, std::optional<JacComponent> jac) {
  BundleClass b{degree, rel, obstruction, std::nullopt};
  if (degree == 0 && (rel == BundleRelation::AntiReal || rel == BundleRelation::Both ||
                      rel == BundleRelation::Trivial)) {
    if (jac) {
      b.jac_component = jac;
    } else if (rel == BundleRelation::Trivial) {
      // the component of L_0 is determined
      if (ct.mu > 0) {
        std::vector<int> all(ct.mu);
        std::iota(all.begin(), all.end(), 1);
        b.jac_component = JacComponent::partition_component(ct, Partition(ct.mu, all));
      } else {
        b.jac_component = JacComponent::empty_real_part(ct, EmptyRealPartFlag::Trivial);
      }
    }
  }
  check_consistent(b, ct);
  return b;
}

bool is_self_dual(const BundleClass& b) {
  return b.relation == BundleRelation::Both || b.relation == BundleRelation::Trivial;
}

bool real_lift_exists(const BundleClass& b, const CurveType& ct) {
  check_consistent(b, ct);
  switch (b.relation) {
    case BundleRelation::Trivial:
      return true;  // c_{L_0}
    case BundleRelation::Real:
    case BundleRelation::Both:
      return ct.mu > 0 || *b.obstruction == 1;
    default:
      return false;
  }
}

bool real_structure_exists_on_P(const BundleClass& b, const CurveType& ct) {
  check_consistent(b, ct);
  if (real_lift_exists(b, ct)) return true;
  return b.relation == BundleRelation::AntiReal || b.relation == BundleRelation::Both ||
         b.relation == BundleRelation::Trivial;
}

PointLabel conj_label(const PointLabel& x) {
  switch (x.tag) {
    case OrbitTag::RealPoint:
      return x;
    case OrbitTag::PairFirst:
      return {x.name, OrbitTag::PairSecond};
    case OrbitTag::PairSecond:
      return {x.name, OrbitTag::PairFirst};
  }
  throw std::logic_error("unreachable");
}

void DivisorSymbol::declare(const PointLabel& x) {
  declared_.insert(x);
  declared_.insert(conj_label(x));
}

void DivisorSymbol::add(const PointLabel& x, int coeff) {
  if (!declared(x)) throw std::invalid_argument("unknown point label: " + x.name);
  int& c = terms_[x];
  c += coeff;
  if (c == 0) terms_.erase(x);
}

int DivisorSymbol::coeff(const PointLabel& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? 0 : it->second;
}

int DivisorSymbol::degree() const {
  int d = 0;
  for (const auto& [p, n] : terms_) d += n;
  return d;
}

DivisorSymbol DivisorSymbol::conjugated() const {
  DivisorSymbol out;
  out.declared_ = declared_;
  for (const auto& [p, n] : terms_) out.terms_[conj_label(p)] = n;
  return out;
}

DivisorSymbol twist_by_point(const DivisorSymbol& d, const PointLabel& x) {
  if (!d.declared(x)) throw std::invalid_argument("unknown point label: " + x.name);
  DivisorSymbol out = d;
  out.add(x, 1);
  return out;
}

}  // namespace ruled
