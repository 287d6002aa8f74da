#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ruled/bundle.hpp"
#include "ruled/curve.hpp"

namespace ruled::ell {

using Rat = boost::rational<long long>;

Rat mod1(Rat x);

/// Point of the square torus R^2 / Z^2, coordinates reduced mod 1.
struct TorusPoint {
  Rat x{0}, y{0};

  TorusPoint() = default;
  TorusPoint(Rat px, Rat py) : x(mod1(px)), y(mod1(py)) {}

  friend TorusPoint operator+(const TorusPoint& a, const TorusPoint& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend TorusPoint operator-(const TorusPoint& a, const TorusPoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
  std::weak_ordering operator<=>(const TorusPoint&) const = default;
  bool operator==(const TorusPoint&) const = default;
  std::string str() const;
};

/// Affine self-map (x, y) -> (ax*x + tx, ay*y + ty) of the torus, ax, ay = +-1.
struct AffineInvolution {
  int ax = 1, ay = 1;
  Rat tx{0}, ty{0};

  TorusPoint operator()(const TorusPoint& p) const;
  bool is_involution() const;

  /// Fixed-point-free holomorphic translation by (1/2, 0).
  static AffineInvolution translation_half();
  /// Antiholomorphic model (x, y) -> (x + 1/2, -y): fixes no point but
  /// preserves the two horizontal circles y = 0 and y = 1/2.
  static AffineInvolution conj_no_fixed();
  /// Antiholomorphic model (x, y) -> (x, -y): real part is the two circles.
  static AffineInvolution conj_two_circles();
};

struct FixedLocus {
  // y-values of fixed horizontal circles, plus isolated fixed points
  std::vector<Rat> circle_levels;
  std::vector<TorusPoint> isolated;
  bool whole = false;
};

/// Fixed locus of an affine involution of the torus, by case analysis on the
/// linear part.
FixedLocus fixed_locus(const AffineInvolution& s);

// ---------------------------------------------------------------------------
// Divisors supported on torsion points and their classes.

struct TorusDivisor {
  std::map<TorusPoint, int> terms;

  void add(const TorusPoint& p, int n);
  int degree() const;
  /// Abel sum: the class of a degree-0 divisor is sum n_i p_i in the torus.
  TorusPoint abel_sum() const;
  TorusDivisor mapped(const AffineInvolution& s) const;
  friend TorusDivisor operator-(const TorusDivisor& a, const TorusDivisor& b);
};

/// A degree-0 divisor is principal iff its Abel sum vanishes.
bool is_principal(const TorusDivisor& d);

/// The involution induced on degree-0 classes by an antiholomorphic s:
/// [D] -> [s(D)] composed with the dual, which on the torus is s0(p) = -s(p)
/// up to translation; concretely classes transform by p -> (ax x - tx', ...).
/// We expose only what the classification needs: the action p -> bar(p) on
/// class representatives for s = conj_two_circles, namely (x, y) -> (x, -y).
TorusPoint jac_involution(const TorusPoint& cls);

enum class ComponentClass { Trivial, Nontrivial, NotFixed };

/// Locates the class point within the real part of the Jacobian involution:
/// fixed classes form the two circles y = 0 (component of the trivial bundle)
/// and y = 1/2.
ComponentClass jac_component_of_class(const TorusPoint& cls);

/// Genus of the double cover of a genus-g curve branched at `branch` points
/// (branch even): g' = 2g - 1 + branch / 2.
int double_cover_genus(int g, int branch);

// ---------------------------------------------------------------------------
// Pullback of labeled divisors to the double cover.

struct LabeledDivisor {
  DivisorSymbol d;
};

/// Pulls back a formal divisor under a double cover: a ramified label has one
/// preimage with doubled coefficient, an unramified one splits into two sheets.
DivisorSymbol pullback_divisor(const DivisorSymbol& d,
                               const std::vector<PointLabel>& ramified);

// distinguished 2-torsion points of the square torus
TorusPoint p0();  // (0, 0)
TorusPoint q0();  // (1/2, 0)
TorusPoint p1();  // (0, 1/2)
TorusPoint q1();  // (1/2, 1/2)

}  // namespace ruled::ell
