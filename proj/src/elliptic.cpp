#include "ruled/elliptic.hpp"

#include <sstream>

namespace ruled::ell {

Rat mod1(Rat x) {
  long long num = x.numerator(), den = x.denominator();  // den > 0
  long long r = num % den;
  if (r < 0) r += den;
  return Rat(r, den);
}

std::string TorusPoint::str() const {
  std::ostringstream os;
  os << "(" << x.numerator() << "/" << x.denominator() << ", " << y.numerator() << "/"
     << y.denominator() << ")";
  return os.str();
}

TorusPoint AffineInvolution::operator()(const TorusPoint& p) const {
  return {Rat(ax) * p.x + tx, Rat(ay) * p.y + ty};
}

bool AffineInvolution::is_involution() const {
  if ((ax != 1 && ax != -1) || (ay != 1 && ay != -1)) return false;
  // s(s(p)) = (ax^2 x + (ax + 1) tx, ...) = p  iff each coordinate shift dies
  return mod1(Rat(ax + 1) * tx) == Rat(0) && mod1(Rat(ay + 1) * ty) == Rat(0);
}

AffineInvolution AffineInvolution::translation_half() {
  return {1, 1, Rat(1, 2), Rat(0)};
}

AffineInvolution AffineInvolution::conj_no_fixed() {
  return {1, -1, Rat(1, 2), Rat(0)};
}

AffineInvolution AffineInvolution::conj_two_circles() {
  return {1, -1, Rat(0), Rat(0)};
}

FixedLocus fixed_locus(const AffineInvolution& s) {
  if (!s.is_involution()) throw std::invalid_argument("map is not an involution");
  FixedLocus out;
  if (s.ax == 1 && s.ay == 1) {
    if (mod1(s.tx) == Rat(0) && mod1(s.ty) == Rat(0)) out.whole = true;
    return out;  // nontrivial translation: free
  }
  if (s.ax == 1 && s.ay == -1) {
    // fixed iff x + tx = x (so tx = 0) and 2y = ty
    if (mod1(s.tx) != Rat(0)) return out;
    // two horizontal circles y = ty/2 and y = ty/2 + 1/2
    out.circle_levels = {mod1(s.ty / 2), mod1(s.ty / 2 + Rat(1, 2))};
    return out;
  }
  if (s.ax == -1 && s.ay == 1) {
    if (mod1(s.ty) != Rat(0)) return out;
    out.circle_levels = {};  // vertical circles: report as isolated x-levels
    // represent vertical circles via isolated = {(x, 0)} markers
    out.isolated = {{mod1(s.tx / 2), Rat(0)}, {mod1(s.tx / 2 + Rat(1, 2)), Rat(0)}};
    return out;
  }
  // ax = ay = -1: four isolated fixed points
  for (Rat dx : {Rat(0), Rat(1, 2)})
    for (Rat dy : {Rat(0), Rat(1, 2)})
      out.isolated.push_back({mod1(s.tx / 2 + dx), mod1(s.ty / 2 + dy)});
  return out;
}

void TorusDivisor::add(const TorusPoint& p, int n) {
  int& c = terms[p];
  c += n;
  if (c == 0) terms.erase(p);
}

int TorusDivisor::degree() const {
  int d = 0;
  for (const auto& [p, n] : terms) d += n;
  return d;
}

TorusPoint TorusDivisor::abel_sum() const {
  TorusPoint s;
  for (const auto& [p, n] : terms) {
    s.x = mod1(s.x + Rat(n) * p.x);
    s.y = mod1(s.y + Rat(n) * p.y);
  }
  return s;
}

TorusDivisor TorusDivisor::mapped(const AffineInvolution& s) const {
  TorusDivisor out;
  for (const auto& [p, n] : terms) out.add(s(p), n);
  return out;
}

TorusDivisor operator-(const TorusDivisor& a, const TorusDivisor& b) {
  TorusDivisor out = a;
  for (const auto& [p, n] : b.terms) out.add(p, -n);
  return out;
}

bool is_principal(const TorusDivisor& d) {
  if (d.degree() != 0) throw std::invalid_argument("is_principal requires degree 0");
  return d.abel_sum() == TorusPoint{};
}

TorusPoint jac_involution(const TorusPoint& cls) { return {cls.x, -cls.y}; }

ComponentClass jac_component_of_class(const TorusPoint& cls) {
  if (jac_involution(cls) != cls) return ComponentClass::NotFixed;
  if (cls.y == Rat(0)) return ComponentClass::Trivial;
  return ComponentClass::Nontrivial;  // y = 1/2
}

int double_cover_genus(int g, int branch) {
  if (g < 0 || branch < 0 || branch % 2 != 0)
    throw std::invalid_argument("branch count must be even and nonnegative");
  return 2 * g - 1 + branch / 2;
}

DivisorSymbol pullback_divisor(const DivisorSymbol& d,
                               const std::vector<PointLabel>& ramified) {
  std::set<PointLabel> ram(ramified.begin(), ramified.end());
  DivisorSymbol out;
  for (const auto& x : d.labels()) {
    if (ram.count(x)) {
      out.declare({x.name + "~", x.tag});
    } else {
      out.declare({x.name + "+", x.tag});
      out.declare({x.name + "-", x.tag});
    }
  }
  for (const auto& [x, n] : d.terms()) {
    if (ram.count(x)) {
      out.add({x.name + "~", x.tag}, 2 * n);  // single preimage, multiplicity 2
    } else {
      out.add({x.name + "+", x.tag}, n);
      out.add({x.name + "-", x.tag}, n);
    }
  }
  return out;
}

TorusPoint p0() { return {Rat(0), Rat(0)}; }
TorusPoint q0() { return {Rat(1, 2), Rat(0)}; }
TorusPoint p1() { return {Rat(0), Rat(1, 2)}; }
TorusPoint q1() { return {Rat(1, 2), Rat(1, 2)}; }

}  // namespace ruled::ell
