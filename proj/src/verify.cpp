#include "ruled/verify.hpp"

#include <sstream>

#include "ruled/elliptic.hpp"
#include "ruled/symbolic_json.hpp"

namespace ruled::verify {

std::vector<Check> run_symbolic_suite(const std::string& fixtures_path,
                                      const std::optional<std::string>& only,
                                      bool flip_sign) {
  std::vector<Check> out;
  for (const sym::IdentityFixture& fx : sym::load_identities(fixtures_path)) {
    if (only && fx.name != *only) continue;
    if (!only || !flip_sign)
      out.push_back({fx.name, sym::run_identity(fx, false), "identity holds under rewriting"});
    if (!only || flip_sign)
      out.push_back({fx.name + "-negative-control", !sym::run_identity(fx, true),
                     "identity fails once its sign is flipped"});
  }
  if (only && out.empty())
    throw std::invalid_argument("unknown identity: " + *only);
  return out;
}

std::vector<Check> run_elliptic_suite() {
  using namespace ell;
  std::vector<Check> out;
  const AffineInvolution cb = AffineInvolution::conj_no_fixed();
  const AffineInvolution phi = AffineInvolution::translation_half();

  const FixedLocus locus = fixed_locus(cb);
  out.push_back({"base-real-part-empty",
                 locus.circle_levels.empty() && locus.isolated.empty() && !locus.whole,
                 "the base structure fixes no point"});

  bool commute = true;
  for (const TorusPoint& p : {p0(), q0(), p1(), q1(), TorusPoint{Rat(1, 3), Rat(1, 5)}})
    commute = commute && cb(phi(p)) == phi(cb(p));
  out.push_back({"base-maps-commute", commute, "the two involutions of the torus commute"});

  TorusDivisor d;
  d.add(p1(), 1);
  d.add(p0(), -1);
  TorusDivisor d_plus_cbd = d;
  for (const auto& [p, n] : d.mapped(cb).terms) d_plus_cbd.add(p, n);
  out.push_back({"lift-divisor-principal", is_principal(d_plus_cbd),
                 "D + c_B(D) is principal, so f exists"});
  out.push_back({"translate-difference-principal", is_principal(d.mapped(phi) - d),
                 "phi(D) - D is principal, so g exists"});
  TorusDivisor twice;
  twice.add(p1(), 2);
  twice.add(p0(), -2);
  out.push_back({"class-two-torsion", is_principal(twice), "2D is principal: L = L*"});
  out.push_back({"class-nontrivial", !is_principal(d), "D itself is not principal"});
  out.push_back({"class-in-nontrivial-component",
                 jac_component_of_class(d.abel_sum()) == ComponentClass::Nontrivial,
                 "the class of D sits on the y = 1/2 circle"});

  bool genera = true;
  std::ostringstream detail;
  for (int k = 1; k <= 10; ++k) {
    const int got = double_cover_genus(1, 4 * k);
    genera = genera && got == 2 * k + 1;
    if (got != 2 * k + 1) detail << "k=" << k << " gave " << got << " ";
  }
  out.push_back({"double-cover-genera", genera,
                 genera ? "genus(B_k) = 2k + 1 for k = 1..10" : detail.str()});
  return out;
}

}  // namespace ruled::verify
