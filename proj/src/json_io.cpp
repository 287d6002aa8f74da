#include "ruled/json_io.hpp"

#include <sstream>

namespace ruled::io {

using nlohmann::json;

ojson curve_to_json(const CurveType& ct) {
  return ojson{{"g", ct.g}, {"mu", ct.mu}, {"eps", ct.eps}};
}

CurveType curve_from_json(const json& j) {
  return {j.at("g").get<int>(), j.at("mu").get<int>(), j.at("eps").get<int>()};
}

ojson partition_to_json(const Partition& p) { return ojson(p.side()); }

Partition partition_from_json(int mu, const json& j) {
  return Partition(mu, j.get<std::vector<int>>());
}

ojson jac_component_to_json(const JacComponent& c) {
  if (c.is_partition())
    return ojson{{"kind", "partition"},
                 {"mu", c.partition().mu()},
                 {"side", partition_to_json(c.partition())}};
  return ojson{{"kind", "empty_real_part"},
               {"flag", c.flag() == EmptyRealPartFlag::Trivial ? "trivial" : "nontrivial"}};
}

JacComponent jac_component_from_json(const CurveType& ct, const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "partition")
    return JacComponent::partition_component(
        ct, partition_from_json(j.at("mu").get<int>(), j.at("side")));
  if (kind == "empty_real_part") {
    const std::string flag = j.at("flag").get<std::string>();
    if (flag == "trivial") return JacComponent::empty_real_part(ct, EmptyRealPartFlag::Trivial);
    if (flag == "nontrivial")
      return JacComponent::empty_real_part(ct, EmptyRealPartFlag::Nontrivial);
    throw std::invalid_argument("unknown component flag: " + flag);
  }
  throw std::invalid_argument("unknown jac_component kind: " + kind);
}

std::string relation_name(BundleRelation r) {
  switch (r) {
    case BundleRelation::Real: return "real";
    case BundleRelation::AntiReal: return "antireal";
    case BundleRelation::Both: return "both";
    case BundleRelation::Trivial: return "trivial";
    case BundleRelation::None: return "none";
  }
  throw std::logic_error("unreachable");
}

BundleRelation relation_from_name(const std::string& s) {
  if (s == "real") return BundleRelation::Real;
  if (s == "antireal") return BundleRelation::AntiReal;
  if (s == "both") return BundleRelation::Both;
  if (s == "trivial") return BundleRelation::Trivial;
  if (s == "none") return BundleRelation::None;
  throw std::invalid_argument("unknown relation: " + s);
}

ojson bundle_to_json(const BundleClass& b) {
  ojson j{{"degree", b.degree}, {"relation", relation_name(b.relation)}};
  j["obstruction"] = b.obstruction ? ojson(*b.obstruction) : ojson(nullptr);
  j["jac_component"] =
      b.jac_component ? jac_component_to_json(*b.jac_component) : ojson(nullptr);
  return j;
}

BundleClass bundle_from_json(const CurveType& ct, const json& j) {
  std::optional<int> obstruction;
  if (j.contains("obstruction") && !j.at("obstruction").is_null())
    obstruction = j.at("obstruction").get<int>();
  std::optional<JacComponent> jac;
  if (j.contains("jac_component") && !j.at("jac_component").is_null())
    jac = jac_component_from_json(ct, j.at("jac_component"));
  return make_bundle(j.at("degree").get<int>(),
                     relation_from_name(j.at("relation").get<std::string>()), ct, obstruction,
                     jac);
}

std::string tag_name(RealStructureTag t) {
  switch (t) {
    case RealStructureTag::DirectSum: return "direct_sum";
    case RealStructureTag::CPlus: return "c_plus";
    case RealStructureTag::CMinus: return "c_minus";
  }
  throw std::logic_error("unreachable");
}

RealStructureTag tag_from_name(const std::string& s) {
  if (s == "direct_sum") return RealStructureTag::DirectSum;
  if (s == "c_plus") return RealStructureTag::CPlus;
  if (s == "c_minus") return RealStructureTag::CMinus;
  throw std::invalid_argument("unknown structure tag: " + s);
}

ojson conjugacy_table_to_json(const ConjugacyTable& t) {
  ojson out = ojson::array();
  for (const ConjugacyClass& c : t) {
    ojson tags = ojson::array();
    for (RealStructureTag tag : c.tags) tags.push_back(tag_name(tag));
    out.push_back(ojson{{"class", tags}, {"status", c.proved ? "proved" : "unknown"}});
  }
  return out;
}

ojson quintuple_to_json(const Quintuple& q) {
  return ojson{{"t", q.t}, {"k", q.k}, {"g", q.g}, {"mu", q.mu}, {"eps", q.eps}};
}

Quintuple quintuple_from_json(const json& j) {
  return {j.at("t").get<int>(), j.at("k").get<int>(), j.at("g").get<int>(),
          j.at("mu").get<int>(), j.at("eps").get<int>()};
}

ojson deformation_class_to_json(const DeformationClass& d) {
  ojson j = quintuple_to_json(d.q);
  j["spin"] = d.spin ? ojson(*d.spin) : ojson(nullptr);
  return j;
}

DeformationClass deformation_class_from_json(const json& j) {
  DeformationClass d{quintuple_from_json(j), std::nullopt};
  if (j.contains("spin") && !j.at("spin").is_null()) d.spin = j.at("spin").get<bool>();
  return d;
}

ojson recipe_to_json(const SurfaceRecipe& r) {
  ojson transforms = ojson::array();
  for (const TransformSite& s : r.transforms) {
    if (s.real_point)
      transforms.push_back(ojson{{"site", "real_point"}, {"component", s.component}});
    else
      transforms.push_back(ojson{{"site", "conjugate_pair"}});
  }
  return ojson{{"curve", curve_to_json(r.curve)},
               {"bundle", bundle_to_json(r.bundle)},
               {"tag", tag_name(r.tag)},
               {"transforms", transforms},
               {"divisor_sites", r.divisor_sites}};
}

SurfaceRecipe recipe_from_json(const json& j) {
  SurfaceRecipe r;
  r.curve = curve_from_json(j.at("curve"));
  r.bundle = bundle_from_json(r.curve, j.at("bundle"));
  r.tag = tag_from_name(j.at("tag").get<std::string>());
  for (const auto& s : j.value("transforms", json::array())) {
    const std::string site = s.at("site").get<std::string>();
    if (site == "real_point")
      r.transforms.push_back({true, s.at("component").get<int>()});
    else if (site == "conjugate_pair")
      r.transforms.push_back({false, 0});
    else
      throw std::invalid_argument("unknown transform site: " + site);
  }
  if (j.contains("divisor_sites")) r.divisor_sites = j.at("divisor_sites").get<std::vector<int>>();
  check_recipe(r);
  return r;
}

ojson rational_class_to_json(const RationalClass& rc) {
  ojson j{{"real_part", rc.real_part}, {"fibered_over_base", rc.fibered_over_base}};
  j["quotient_spin"] = rc.quotient_spin ? ojson(*rc.quotient_spin) : ojson(nullptr);
  return j;
}

namespace {

std::string rat_str(const ell::Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

ell::Rat rat_parse(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return ell::Rat(std::stoll(s));
  return ell::Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace

ojson torus_point_to_json(const ell::TorusPoint& p) {
  return ojson{{"x", rat_str(p.x)}, {"y", rat_str(p.y)}};
}

ell::TorusPoint torus_point_from_json(const json& j) {
  return {rat_parse(j.at("x").get<std::string>()), rat_parse(j.at("y").get<std::string>())};
}

}  // namespace ruled::io
