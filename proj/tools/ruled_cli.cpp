#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ruled/json_io.hpp"
#include "ruled/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

using ruled::io::ojson;

void emit(const ojson& j, bool as_json, const std::string& human) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human << "\n";
}

int run_check_type(int t, int k, int g, int mu, int eps, bool as_json) {
  const ruled::Quintuple q{t, k, g, mu, eps};
  std::string reason;
  if (!ruled::is_valid_curve_type(g, mu, eps))
    reason = "invalid curve type";
  else if (t < 0 || k < 0)
    reason = "negative component count";
  else if (g < 1)
    reason = "rational base: use the rational table";
  else if (t + k > mu)
    reason = "t+k > mu";
  const bool ok = ruled::is_allowable(q);
  ojson j{{"command", "check-type"},
          {"inputs", ruled::io::quintuple_to_json(q)},
          {"allowable", ok}};
  if (!ok) j["reason"] = reason;
  emit(j, as_json,
       ok ? "allowable" : "not allowable: " + reason);
  return ok ? kExitOk : kExitFalse;
}

int run_enumerate(int g, int mu, int eps, bool rational, bool as_json) {
  if (rational) {
    ojson rows = ojson::array();
    for (const auto& rc : ruled::rational_classes())
      rows.push_back(ruled::io::rational_class_to_json(rc));
    ojson j{{"command", "enumerate"}, {"rational", true}, {"count", rows.size()},
            {"classes", rows}};
    std::string human = "4 deformation classes over a rational base:\n";
    for (const auto& rc : ruled::rational_classes()) {
      human += "  real part " + rc.real_part;
      if (!rc.fibered_over_base) human += " (not fibered over a real base structure)";
      if (rc.quotient_spin) human += std::string(" quotient ") + (*rc.quotient_spin ? "spin" : "non-spin");
      human += "\n";
    }
    human.pop_back();
    emit(j, as_json, human);
    return kExitOk;
  }
  const auto classes = ruled::enumerate_classes({g, mu, eps});
  ojson rows = ojson::array();
  std::string human = std::to_string(classes.size()) + " deformation classes:";
  for (const auto& d : classes) {
    rows.push_back(ruled::io::deformation_class_to_json(d));
    human += "\n  (t=" + std::to_string(d.q.t) + ", k=" + std::to_string(d.q.k) + ")";
    if (d.spin) human += *d.spin ? " spin" : " non-spin";
  }
  ojson j{{"command", "enumerate"},
          {"inputs", ruled::io::curve_to_json({g, mu, eps})},
          {"count", classes.size()},
          {"classes", rows}};
  emit(j, as_json, human);
  return kExitOk;
}

int run_realize(int t, int k, int g, int mu, int eps, std::optional<bool> spin, bool as_json) {
  const auto recipe = ruled::realize({t, k, g, mu, eps}, spin);
  const auto back = ruled::io::deformation_class_to_json(ruled::normalize(recipe));
  ojson j{{"command", "realize"}, {"recipe", ruled::io::recipe_to_json(recipe)},
          {"normal_form", back}};
  emit(j, as_json, ruled::io::recipe_to_json(recipe).dump(2));
  return kExitOk;
}

ojson read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return ojson::parse(in);
}

int run_equiv(const std::string& file_a, const std::string& file_b, bool as_json) {
  const auto a = ruled::io::recipe_from_json(read_json_file(file_a));
  const auto b = ruled::io::recipe_from_json(read_json_file(file_b));
  const auto na = ruled::normalize(a);
  const auto nb = ruled::normalize(b);
  const bool eq = na == nb;
  ojson j{{"command", "equiv"},
          {"normal_form_a", ruled::io::deformation_class_to_json(na)},
          {"normal_form_b", ruled::io::deformation_class_to_json(nb)},
          {"equivalent", eq}};
  emit(j, as_json,
       ruled::io::deformation_class_to_json(na).dump() + "\n" +
           ruled::io::deformation_class_to_json(nb).dump() + "\n" +
           (eq ? "equivalent" : "not equivalent"));
  return eq ? kExitOk : kExitFalse;
}

int run_classify(const std::string& file, bool as_json) {
  const ojson in = read_json_file(file);
  const auto ct = ruled::io::curve_from_json(in.at("curve"));
  const auto bundle = ruled::io::bundle_from_json(ct, in.at("bundle"));
  std::optional<ruled::ConjugationWitness> witness;
  if (in.contains("witness") && !in.at("witness").is_null()) {
    const std::string kind = in.at("witness").at("case").get<std::string>();
    if (kind != "a" && kind != "b") throw std::invalid_argument("witness case must be a or b");
    witness = ruled::ConjugationWitness{
        kind == "a" ? ruled::WitnessCase::A : ruled::WitnessCase::B,
        in.at("witness").value("sign", -1)};
  }
  const auto table = ruled::classify_real_structures(bundle, ct, witness);
  ojson j{{"command", "classify-structures"},
          {"inputs", ojson{{"curve", ruled::io::curve_to_json(ct)},
                           {"bundle", ruled::io::bundle_to_json(bundle)}}},
          {"classes", ruled::io::conjugacy_table_to_json(table)}};
  std::string human = std::to_string(table.size()) + " conjugacy classes:";
  for (const auto& c : table) {
    human += "\n  {";
    for (size_t i = 0; i < c.tags.size(); ++i)
      human += (i ? ", " : "") + ruled::io::tag_name(c.tags[i]);
    human += c.proved ? "}" : "} (merge undecided)";
  }
  emit(j, as_json, human);
  return kExitOk;
}

int run_verify(const std::optional<std::string>& identity, bool flip_sign, bool as_json) {
  std::vector<ruled::verify::Check> checks =
      ruled::verify::run_symbolic_suite(RULED_FIXTURES_DIR "/identities.json", identity,
                                        flip_sign);
  if (!identity) {
    const auto elliptic = ruled::verify::run_elliptic_suite();
    checks.insert(checks.end(), elliptic.begin(), elliptic.end());
  }
  ojson rows = ojson::array();
  std::string human;
  bool all = true;
  for (const auto& c : checks) {
    rows.push_back(ojson{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    human += (c.pass ? "PASS " : "FAIL ") + c.name + "\n";
    all = all && c.pass;
  }
  human += all ? "all checks passed" : "some checks FAILED";
  ojson j{{"command", "verify-paper"}, {"checks", rows}, {"all_pass", all}};
  emit(j, as_json, human);
  return all ? kExitOk : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification calculator for real structures on ruled surfaces"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  int t = 0, k = 0, g = 0, mu = 0, eps = 0;
  auto* check = app.add_subcommand("check-type", "test a quintuple for allowability");
  check->add_option("t", t)->required();
  check->add_option("k", k)->required();
  check->add_option("g", g)->required();
  check->add_option("mu", mu)->required();
  check->add_option("eps", eps)->required();

  bool rational = false;
  auto* enumerate = app.add_subcommand("enumerate", "list deformation classes over a curve type");
  enumerate->add_option("g", g)->required();
  enumerate->add_option("mu", mu)->required();
  enumerate->add_option("eps", eps)->required();
  enumerate->add_flag("--rational", rational, "print the fixed rational-base table");

  int spin_flag = -1;
  auto* realize = app.add_subcommand("realize", "construct a recipe with the given type");
  realize->add_option("t", t)->required();
  realize->add_option("k", k)->required();
  realize->add_option("g", g)->required();
  realize->add_option("mu", mu)->required();
  realize->add_option("eps", eps)->required();
  realize->add_option("--spin", spin_flag, "quotient spin bit (0/1), required when mu = 0");

  std::string file_a, file_b;
  auto* equiv = app.add_subcommand("equiv", "decide deformation equivalence of two recipes");
  equiv->add_option("recipe_a", file_a)->required();
  equiv->add_option("recipe_b", file_b)->required();

  std::string classify_file;
  auto* classify = app.add_subcommand("classify-structures",
                                      "conjugacy classes of real structures for a bundle");
  classify->add_option("input", classify_file)->required();

  std::string identity;
  bool flip_sign = false;
  auto* verify = app.add_subcommand("verify-paper", "run the identity and torus-model suites");
  verify->add_option("--identity", identity, "run a single named identity");
  verify->add_flag("--flip-sign", flip_sign, "run the sign-flipped negative control");

  // let --json appear after the subcommand too
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return run_check_type(t, k, g, mu, eps, as_json);
    if (*enumerate) return run_enumerate(g, mu, eps, rational, as_json);
    if (*realize) {
      std::optional<bool> spin;
      if (spin_flag == 0) spin = false;
      if (spin_flag == 1) spin = true;
      return run_realize(t, k, g, mu, eps, spin, as_json);
    }
    if (*equiv) return run_equiv(file_a, file_b, as_json);
    if (*classify) return run_classify(classify_file, as_json);
    if (*verify)
      return run_verify(identity.empty() ? std::nullopt : std::optional(identity), flip_sign,
                        as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
