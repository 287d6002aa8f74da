#include "ruled/surface.hpp"

#include "ruled/symbolic.hpp"

namespace ruled {

namespace {

bool switch_structures_exist(const BundleClass& b) {
  return b.degree == 0 &&
         (b.relation == BundleRelation::AntiReal || b.relation == BundleRelation::Both ||
          b.relation == BundleRelation::Trivial);
}

bool witness_verifies(const ConjugationWitness& w) {
  using namespace sym;
  if (w.kind == WitnessCase::A)
    return verify_conjugation(charts::phi_g(), charts::c_minus(), charts::c_plus(),
                              {charts::case_a(w.hyp_sign), charts::f_reality()});
  return verify_conjugation(charts::phi_h(), charts::c_minus(), charts::c_plus(),
                            {charts::case_b(w.hyp_sign), charts::f_reality()});
}

}  // namespace

ConjugacyAnswer cplus_cminus_conjugate(const BundleClass& b, const CurveType& ct,
                                       const std::optional<ConjugationWitness>& witness) {
  check_consistent(b, ct);
  if (!switch_structures_exist(b))
    throw std::invalid_argument("c+/c- require a degree-0 class with c_B^*(L) = L*");
  // real parts differ when the base has real components and L is trivial,
  // and more generally whenever the component count mu is odd
  if (b.relation == BundleRelation::Trivial || ct.mu % 2 == 1)
    return ConjugacyAnswer::NotConjugate;
  if (witness) {
    if (!witness_verifies(*witness))
      throw WitnessValidationError("conjugation witness fails its chart identity");
    return ConjugacyAnswer::Conjugate;
  }
  return ConjugacyAnswer::Unknown;
}

ConjugacyTable classify_real_structures(const BundleClass& b, const CurveType& ct,
                                        const std::optional<ConjugationWitness>& witness) {
  check_consistent(b, ct);
  if (ct.g < 1)
    throw std::invalid_argument("rational bases are classified by the rational table");
  ConjugacyTable out;
  if (real_lift_exists(b, ct))
    out.push_back({{RealStructureTag::DirectSum}, true});
  if (!switch_structures_exist(b)) return out;
  switch (cplus_cminus_conjugate(b, ct, witness)) {
    case ConjugacyAnswer::Conjugate:
      out.push_back({{RealStructureTag::CPlus, RealStructureTag::CMinus}, true});
      break;
    case ConjugacyAnswer::NotConjugate:
      out.push_back({{RealStructureTag::CPlus}, true});
      out.push_back({{RealStructureTag::CMinus}, true});
      break;
    case ConjugacyAnswer::Unknown:
      out.push_back({{RealStructureTag::CPlus, RealStructureTag::CMinus}, false});
      break;
  }
  return out;
}

bool tag_admissible(const BundleClass& b, const CurveType& ct, RealStructureTag tag) {
  check_consistent(b, ct);
  if (tag == RealStructureTag::DirectSum) return real_lift_exists(b, ct);
  return switch_structures_exist(b);
}

RealPart real_part(const BundleClass& b, const CurveType& ct, RealStructureTag tag) {
  if (tag == RealStructureTag::DirectSum)
    throw std::invalid_argument("direct-sum topology is computed by recipe normalization");
  if (!tag_admissible(b, ct, tag))
    throw std::invalid_argument("structure tag not admissible for this bundle class");
  RealPart out;
  if (ct.mu == 0) return out;
  if (!b.jac_component || !b.jac_component->is_partition())
    throw std::invalid_argument("real part needs the partition of the class of L");
  const Partition& p = b.jac_component->partition();
  const int side = static_cast<int>(p.side().size());
  // c+ is real exactly over one side of the partition, c- over the other
  out.tori = tag == RealStructureTag::CPlus ? side : ct.mu - side;
  return out;
}

bool automorphism_lifts(const BundleClass& b, const AutDescriptor& phi) {
  // only the factor switch over a 2-torsion non-trivial class fails to lift
  return !(b.relation == BundleRelation::Both && phi.swaps_factors);
}

}  // namespace ruled
