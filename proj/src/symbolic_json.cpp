#include "ruled/symbolic_json.hpp"

#include <fstream>

namespace ruled::sym {

using nlohmann::json;

GroupWord word_from_json(const json& j) {
  const std::string s = j.get<std::string>();
  if (s.empty() || s == "id") return kId;
  if (s == "cb") return kCb;
  if (s == "phi") return kPhi;
  if (s == "cb.phi" || s == "phi.cb") return kCbPhi;
  throw std::invalid_argument("unknown group word: " + s);
}

Expr expr_from_json(const json& j) {
  Expr e = Expr::constant(j.value("sign", 1));
  for (const auto& a : j.value("atoms", json::array())) {
    e = e * Expr::atom(a.at("gen").get<std::string>(),
                       a.contains("word") ? word_from_json(a.at("word")) : kId,
                       a.value("conj", false), a.value("scalar", false), a.value("exp", 1));
  }
  return e;
}

ChartMap chart_from_json(const json& j) {
  ChartMap m;
  m.base = j.contains("base") ? word_from_json(j.at("base")) : kId;
  m.antiholo = j.value("antiholo", false);
  const json& rows = j.at("matrix");
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      if (!rows.at(i).at(k).is_null()) m.m[i][k] = expr_from_json(rows.at(i).at(k));
  return m;
}

Hypothesis hypothesis_from_json(const json& j) {
  return {expr_from_json(j.at("lhs")), expr_from_json(j.at("rhs"))};
}

IdentityFixture fixture_from_json(const json& j) {
  IdentityFixture fx;
  fx.name = j.at("name").get<std::string>();
  fx.kind = j.at("kind").get<std::string>();
  if (fx.kind == "involution") {
    fx.map = chart_from_json(j.at("map"));
  } else if (fx.kind == "conjugation") {
    fx.phi = chart_from_json(j.at("phi"));
    fx.cminus = chart_from_json(j.at("cminus"));
    fx.cplus = chart_from_json(j.at("cplus"));
  } else if (fx.kind == "step2") {
    fx.d_sign = j.at("d_sign").get<int>();
  } else {
    throw std::invalid_argument("unknown identity kind: " + fx.kind);
  }
  for (const auto& h : j.value("hypotheses", json::array()))
    fx.hypotheses.push_back(hypothesis_from_json(h));
  fx.flip_hypothesis = j.value("flip_hypothesis", -1);
  return fx;
}

std::vector<IdentityFixture> load_identities(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  json j = json::parse(in);
  std::vector<IdentityFixture> out;
  for (const auto& f : j.at("identities")) out.push_back(fixture_from_json(f));
  return out;
}

namespace {

std::vector<Hypothesis> maybe_flipped(const IdentityFixture& fx, bool flipped) {
  std::vector<Hypothesis> hyps = fx.hypotheses;
  if (flipped && fx.flip_hypothesis >= 0) {
    auto& h = hyps.at(static_cast<size_t>(fx.flip_hypothesis));
    h.rhs = -h.rhs;
  }
  return hyps;
}

/// Negate the first populated entry, scanning the second row first so that
/// for the standard antidiagonal structures the f-carrying entry flips.
ChartMap sign_flipped(const ChartMap& m) {
  ChartMap out = m;
  for (int i : {1, 0})
    for (int k = 0; k < 2; ++k)
      if (out.m[i][k]) {
        out.m[i][k] = -*out.m[i][k];
        return out;
      }
  throw std::invalid_argument("cannot flip a sign in an empty matrix");
}

}  // namespace

bool run_identity(const IdentityFixture& fx, bool flipped) {
  if (fx.kind == "involution") {
    auto hyps = maybe_flipped(fx, flipped);
    if (flipped && fx.flip_hypothesis < 0) {
      // structural control: square against a sign-twisted copy
      return is_projective_identity(compose(fx.map, sign_flipped(fx.map)), hyps);
    }
    return verify_involution(fx.map, hyps);
  }
  if (fx.kind == "conjugation") {
    auto hyps = maybe_flipped(fx, flipped);
    ChartMap phi = (flipped && fx.flip_hypothesis < 0) ? sign_flipped(fx.phi) : fx.phi;
    return verify_conjugation(phi, fx.cminus, fx.cplus, hyps);
  }
  if (fx.kind == "step2") {
    StructureSign expected =
        fx.d_sign > 0 ? StructureSign::Plus : StructureSign::Minus;
    if (flipped)
      expected = expected == StructureSign::Plus ? StructureSign::Minus : StructureSign::Plus;
    return step2_conjugation_target(fx.d_sign) == expected;
  }
  throw std::invalid_argument("unknown identity kind: " + fx.kind);
}

}  // namespace ruled::sym
