#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ruled::sym {

/// Element of the group <c_B, phi>, both generators of order 2 and commuting.
struct GroupWord {
  bool cb = false;
  bool phi = false;

  friend GroupWord operator*(GroupWord a, GroupWord b) {
    return {a.cb != b.cb, a.phi != b.phi};
  }
  bool is_identity() const { return !cb && !phi; }
  auto operator<=>(const GroupWord&) const = default;
};

inline constexpr GroupWord kId{false, false};
inline constexpr GroupWord kCb{true, false};
inline constexpr GroupWord kPhi{false, true};
inline constexpr GroupWord kCbPhi{true, true};

/// A generator precomposed with a group word, optionally conjugated:
/// conj^c (gen ∘ w). Scalar atoms are constants: precomposition is a no-op.
struct Atom {
  std::string gen;
  GroupWord word{};
  bool conj = false;
  bool scalar = false;

  auto operator<=>(const Atom&) const = default;
};

/// Signed Laurent monomial over atoms. The zero expression is excluded; the
/// default-constructed value is the constant 1.
class Expr {
 public:
  Expr() = default;

  static Expr atom(std::string gen, GroupWord w = {}, bool conj = false,
                   bool scalar = false, int exp = 1);
  static Expr constant(int sign);

  Expr operator*(const Expr& o) const;
  Expr operator-() const;
  Expr inverse() const;
  Expr conjugate() const;
  Expr precompose(GroupWord sigma) const;
  Expr pow(int e) const;

  int sign() const { return sign_; }
  const std::map<Atom, int>& powers() const { return pows_; }
  bool is_one() const { return sign_ == 1 && pows_.empty(); }
  int total_degree() const;
  std::string str() const;

  bool operator==(const Expr&) const = default;
  bool operator<(const Expr& o) const;  // term order: degree, then lex, then sign

 private:
  int sign_ = 1;
  std::map<Atom, int> pows_;
};

/// Oriented rewrite rule lhs -> rhs over the free commutative group of atoms.
struct Hypothesis {
  Expr lhs;
  Expr rhs;
  bool operator==(const Hypothesis&) const = default;
};

struct NonTermination : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rewriter for the function-field relations. Hypotheses are closed under the
/// group action and conjugation, oriented by the term order, and applied
/// left-to-right to a fixpoint under a step budget.
class RewriteSystem {
 public:
  explicit RewriteSystem(const std::vector<Hypothesis>& hyps, int step_budget = 10000);
  Expr normal_form(const Expr& e) const;

 private:
  std::vector<Hypothesis> rules_;
  int budget_;
};

/// A projective 2x2 map over the function field: (x, (z1 : z0)) maps to
/// (base(x), M(x) v) with v = (z1, z0), conjugated first when antiholo.
struct ChartMap {
  GroupWord base{};
  bool antiholo = false;
  std::array<std::array<std::optional<Expr>, 2>, 2> m{};

  static ChartMap identity();
  static ChartMap diagonal(Expr a, Expr d, GroupWord base = {}, bool antiholo = false);
  static ChartMap antidiagonal(Expr b, Expr c, GroupWord base = {}, bool antiholo = false);
};

ChartMap compose(const ChartMap& a, const ChartMap& b);
ChartMap inverse(const ChartMap& m);

/// m equals a scalar multiple of the identity after rewriting.
bool is_projective_identity(const ChartMap& m, const std::vector<Hypothesis>& hyps);

/// m and target agree up to one common scalar after rewriting.
bool projectively_equal(const ChartMap& m, const ChartMap& target,
                        const std::vector<Hypothesis>& hyps);

bool verify_involution(const ChartMap& c, const std::vector<Hypothesis>& hyps);

bool verify_conjugation(const ChartMap& phi, const ChartMap& cminus, const ChartMap& cplus,
                        const std::vector<Hypothesis>& hyps);

enum class StructureSign { Plus, Minus };

/// Which of c+/c- the structure c+ ∘ diag(1, d) is conjugated to by
/// diag(1, delta), delta^2 = 1/|d|, for the given sign of the real scalar d.
StructureSign step2_conjugation_target(int d_sign);

/// True iff the step-2 normalization lands on the structure the sign of d
/// dictates (d > 0 -> c+, d < 0 -> c-).
bool verify_step2_normalization(int d_sign);

/// Exponent of the coordinate factor in the U_{p_i} chart of the gluing maps:
/// projective charts use -n_{c_B(p_i)} - n_{p_i}, line-bundle charts
/// n_{c_B(p_i)} - n_{p_i}.
int gluing_exponent(bool projective, int n_i, int n_cb_pi);

// ---------------------------------------------------------------------------
// The paper's chart maps and hypotheses as reusable builders.
namespace charts {

Expr f(GroupWord w = {}, bool conj = false);

ChartMap c_plus();    // [[0,1],[f∘c_B,0]], base c_B, antiholomorphic
ChartMap c_minus();   // [[0,1],[-f∘c_B,0]], base c_B, antiholomorphic
ChartMap phi_g();     // diag(g∘phi, 1), base phi
ChartMap phi_h();     // [[0,1],[h∘phi,0]], base phi
ChartMap phi_lambda();  // [[0, lambda*s],[s, 0]], base id

Hypothesis f_reality();         // f = conj(f∘c_B)
Hypothesis case_a(int sign);    // f∘phi * g∘phi * conj(g∘c_B∘phi) = sign * f
Hypothesis case_b(int sign);    // h∘phi * conj(h∘c_B∘phi) = sign * f * f∘phi

}  // namespace charts

}  // namespace ruled::sym
