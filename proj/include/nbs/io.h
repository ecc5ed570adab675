// Copyright 2026 The nbsroyalty Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and CSV surfaces shared by the command-line tool and the HTTP
// service: model descriptors, solve requests/responses, scenario files and
// report serialization. Both front ends go through these functions, so
// their outputs agree field for field.

#ifndef NBS_IO_H_
#define NBS_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nbs/analysis.h"
#include "nbs/core_model.h"
#include "nbs/weight_models.h"

namespace nbs {

using Json = nlohmann::json;

// {"kind": "case1"} / {"kind": "constant", "alpha": 0.4} / ...
// Throws kValidationError listing every problem found.
WeightModel ModelFromJson(const Json& descriptor);

// Catalog of model kinds with their parameter schemas.
Json ModelCatalog();

struct SolveRequest {
  double d1 = 0.0;
  double d2 = 0.0;
  bool normalized = true;  // false: d1, d2 are money and need financials
  std::optional<WeightModel> model;
  std::optional<FinancialProfile> financials;
  std::optional<double> operating_margin;
  bool strict = false;
};

// Accepts {"d1", "d2", "normalized"?, "alpha" | "model", "financials"?,
// "operating_margin"?, "strict"?}. Also accepts the scenario layout with a
// nested "disagreement" object.
SolveRequest SolveRequestFromJson(const Json& body);

// Solve response:
// {"royalty_share", "royalty_rate"?, "alpha", "d1", "d2", "surplus_share",
//  "model", "profits"?: {"profit_1", "profit_2", "surplus"}, "warnings"}.
// Errors propagate as nbs::Error (kNoDeal, kInvalidWeight, ...).
Json Solve(const SolveRequest& request);

// {"model", "alpha", "d1", "d2", "warnings"}; d1, d2 normalized.
Json EvaluateAlpha(const WeightModel& model, const DisagreementPoint& d, bool strict);

// Note attached to case3 results: the weight pipeline and the closed-form
// royalty expression give different shares.
std::optional<std::string> Case3Discrepancy(const WeightModel& model, const DisagreementPoint& d);

Json ReportToJson(const ParetoReport& report, const std::string& model_name);
std::string ReportToCsv(const ParetoReport& report);
Json FamilyToJson(const std::vector<FamilyCurve>& curves, const std::string& model_name);
std::string FamilyToCsv(const std::vector<FamilyCurve>& curves);

struct Scenario {
  std::string name;
  std::optional<FinancialProfile> financials;
  DisagreementPoint disagreement;  // normalized
  Json model_descriptor;
  WeightModel model = WeightModel::Constant(0.5);
  bool strict = false;

  SolveRequest ToSolveRequest() const;
};

// Accepts a single scenario object, an array of them, or
// {"scenarios": [...]}. Throws kParseError (with line and column) or
// kValidationError (listing every violated invariant).
std::vector<Scenario> ParseScenarios(std::string_view text);
std::vector<Scenario> LoadScenarios(const std::string& path);
const Scenario& FindScenario(const std::vector<Scenario>& scenarios, std::string_view name);

}  // namespace nbs

#endif  // NBS_IO_H_
