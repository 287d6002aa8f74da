#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "ruled/curve.hpp"

namespace ruled {

/// Behavior of a line-bundle class under c_B^*.
enum class BundleRelation {
  Real,      // c_B^*(L) = L, L != L*
  AntiReal,  // c_B^*(L) = L*, L != L*
  Both,      // c_B^*(L) = L = L*, L != L_0
  Trivial,   // L = L_0
  None,
};

/// A line-bundle class over (B, c_B), carrying only the data the
/// classification consumes: degree, c_B^*-relation, the +-1 lift obstruction
/// (mu = 0 only) and the Jacobian component for degree-0 anti-self-conjugate
/// classes.
struct BundleClass {
  int degree = 0;
  BundleRelation relation = BundleRelation::None;
  std::optional<int> obstruction;             // +-1; relation in {Real, Both}, mu = 0
  std::optional<JacComponent> jac_component;  // iff degree 0, relation in {AntiReal, Both, Trivial}
};

/// Throws std::invalid_argument unless b satisfies all invariants over ct.
void check_consistent(const BundleClass& b, const CurveType& ct);

BundleClass make_bundle(int degree, BundleRelation rel, const CurveType& ct,
                        std::optional<int> obstruction = std::nullopt,
                        std::optional<JacComponent> jac = std::nullopt);

/// L = L* as classes (2-torsion or trivial).
bool is_self_dual(const BundleClass& b);

/// Lemma-level criterion: a real structure on L lifting c_B exists.
bool real_lift_exists(const BundleClass& b, const CurveType& ct);

/// Existence of a real structure on P(L + L_0) lifting c_B.
bool real_structure_exists_on_P(const BundleClass& b, const CurveType& ct);

// ---------------------------------------------------------------------------
// Formal divisors on abstract point labels.

enum class OrbitTag { RealPoint, PairFirst, PairSecond };

struct PointLabel {
  std::string name;
  OrbitTag tag = OrbitTag::RealPoint;
  auto operator<=>(const PointLabel&) const = default;
};

/// The c_B image of a label: fixes real labels, swaps the two labels of a
/// conjugate pair.
PointLabel conj_label(const PointLabel& x);

/// D = sum n_i p_i over declared labels; c_B acts through conj_label.
class DivisorSymbol {
 public:
  void declare(const PointLabel& x);
  bool declared(const PointLabel& x) const { return declared_.count(x) > 0; }
  void add(const PointLabel& x, int coeff);
  int coeff(const PointLabel& x) const;
  int degree() const;
  const std::map<PointLabel, int>& terms() const { return terms_; }
  const std::set<PointLabel>& labels() const { return declared_; }
  DivisorSymbol conjugated() const;

  bool operator==(const DivisorSymbol& o) const { return terms_ == o.terms_; }

 private:
  std::set<PointLabel> declared_;
  std::map<PointLabel, int> terms_;
};

/// D -> D + x.
DivisorSymbol twist_by_point(const DivisorSymbol& d, const PointLabel& x);

}  // namespace ruled
