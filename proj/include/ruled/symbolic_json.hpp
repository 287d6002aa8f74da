#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ruled/symbolic.hpp"

namespace ruled::sym {

/// One verifiable identity loaded from the fixture file. `kind` selects the
/// check: "involution" squares `map`, "conjugation" tests
/// phi^-1 cminus phi = cplus, "step2" runs the scalar normalization with
/// `d_sign`. The negative control re-runs the check with either the rhs sign
/// of hypothesis `flip_hypothesis` flipped, or (when -1) with a structural
/// sign flip inside the map itself.
struct IdentityFixture {
  std::string name;
  std::string kind;
  ChartMap map = ChartMap::identity();     // involution
  ChartMap phi = ChartMap::identity();     // conjugation
  ChartMap cminus = ChartMap::identity();  // conjugation
  ChartMap cplus = ChartMap::identity();   // conjugation
  int d_sign = 1;                          // step2
  std::vector<Hypothesis> hypotheses;
  int flip_hypothesis = -1;
};

GroupWord word_from_json(const nlohmann::json& j);
Expr expr_from_json(const nlohmann::json& j);
ChartMap chart_from_json(const nlohmann::json& j);
Hypothesis hypothesis_from_json(const nlohmann::json& j);
IdentityFixture fixture_from_json(const nlohmann::json& j);

std::vector<IdentityFixture> load_identities(const std::string& path);

/// Runs the fixture's check; `flipped` selects the negative-control variant,
/// which is expected to return false.
bool run_identity(const IdentityFixture& fx, bool flipped);

}  // namespace ruled::sym
