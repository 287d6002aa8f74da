#pragma once

#include <json.hpp>

#include "ruled/bundle.hpp"
#include "ruled/classify.hpp"
#include "ruled/curve.hpp"
#include "ruled/elliptic.hpp"
#include "ruled/surface.hpp"

namespace ruled::io {

using ojson = nlohmann::ordered_json;

ojson curve_to_json(const CurveType& ct);
CurveType curve_from_json(const nlohmann::json& j);

ojson partition_to_json(const Partition& p);
Partition partition_from_json(int mu, const nlohmann::json& j);

ojson jac_component_to_json(const JacComponent& c);
JacComponent jac_component_from_json(const CurveType& ct, const nlohmann::json& j);

std::string relation_name(BundleRelation r);
BundleRelation relation_from_name(const std::string& s);

ojson bundle_to_json(const BundleClass& b);
BundleClass bundle_from_json(const CurveType& ct, const nlohmann::json& j);

std::string tag_name(RealStructureTag t);
RealStructureTag tag_from_name(const std::string& s);

ojson conjugacy_table_to_json(const ConjugacyTable& t);

ojson quintuple_to_json(const Quintuple& q);
Quintuple quintuple_from_json(const nlohmann::json& j);

ojson deformation_class_to_json(const DeformationClass& d);
DeformationClass deformation_class_from_json(const nlohmann::json& j);

ojson recipe_to_json(const SurfaceRecipe& r);
SurfaceRecipe recipe_from_json(const nlohmann::json& j);

ojson rational_class_to_json(const RationalClass& rc);

ojson torus_point_to_json(const ell::TorusPoint& p);
ell::TorusPoint torus_point_from_json(const nlohmann::json& j);

}  // namespace ruled::io
