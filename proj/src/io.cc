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

#include "nbs/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nbs {

namespace {

// Collects validation problems instead of failing on the first one.
class Problems {
 public:
  explicit Problems(std::string context) : context_(std::move(context)) {}

  void Add(const std::string& what) { items_.push_back(what); }
  bool empty() const { return items_.empty(); }

  std::optional<double> Number(const Json& obj, const char* key, bool required) {
    if (!obj.is_object() || !obj.contains(key)) {
      if (required) Add(std::string("missing field '") + key + "'");
      return std::nullopt;
    }
    const Json& v = obj.at(key);
    if (!v.is_number()) {
      Add(std::string("field '") + key + "' must be a number");
      return std::nullopt;
    }
    return v.get<double>();
  }

  std::optional<bool> Bool(const Json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) return std::nullopt;
    const Json& v = obj.at(key);
    if (!v.is_boolean()) {
      Add(std::string("field '") + key + "' must be a boolean");
      return std::nullopt;
    }
    return v.get<bool>();
  }

  [[noreturn]] void Throw() const {
    std::string msg = context_ + ": ";
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) msg += "; ";
      msg += items_[i];
    }
    throw Error(ErrorCode::kValidationError, msg);
  }

  void ThrowIfAny() const {
    if (!empty()) Throw();
  }

 private:
  std::string context_;
  std::vector<std::string> items_;
};

template <typename Fn>
void Capture(Problems& problems, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    problems.Add(e.what());
  }
}

std::string Fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string Full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json ParamSchema(const char* name, const char* type, std::optional<double> min,
                 std::optional<double> max, std::optional<double> def, const char* doc) {
  Json p = {{"name", name}, {"type", type}, {"description", doc}};
  if (min) p["minimum"] = *min;
  if (max) p["maximum"] = *max;
  if (def) p["default"] = *def;
  return p;
}

}  // namespace

WeightModel ModelFromJson(const Json& descriptor) {
  Problems problems("model descriptor");
  if (!descriptor.is_object()) {
    problems.Add("must be an object with a 'kind' field");
    problems.Throw();
  }
  if (!descriptor.contains("kind") || !descriptor.at("kind").is_string()) {
    problems.Add("missing string field 'kind'");
    problems.Throw();
  }
  const std::string kind = descriptor.at("kind").get<std::string>();

  if (kind == "constant") {
    auto alpha = problems.Number(descriptor, "alpha", true);
    problems.ThrowIfAny();
    std::optional<WeightModel> m;
    Capture(problems, [&] { m = WeightModel::Constant(*alpha); });
    problems.ThrowIfAny();
    return *m;
  }
  if (kind == "perceptions") {
    PerceptionMatrix p;
    auto p11 = problems.Number(descriptor, "p11", true);
    auto p12 = problems.Number(descriptor, "p12", true);
    auto p21 = problems.Number(descriptor, "p21", true);
    auto p22 = problems.Number(descriptor, "p22", true);
    problems.ThrowIfAny();
    p = {*p11, *p12, *p21, *p22};
    for (const auto& [name, v] : {std::pair{"p11", p.p11}, std::pair{"p12", p.p12},
                                  std::pair{"p21", p.p21}, std::pair{"p22", p.p22}}) {
      if (!(v >= 0.0 && v <= 1.0)) problems.Add(std::string(name) + " must lie in [0,1]");
    }
    problems.ThrowIfAny();
    return WeightModel::Perceptions(p);
  }
  if (kind == "case1") return WeightModel::Case(DisagreementCase::kCase1);
  if (kind == "case2") return WeightModel::Case(DisagreementCase::kCase2);
  if (kind == "case3") return WeightModel::Case(DisagreementCase::kCase3);
  if (kind == "violating-demo") return WeightModel::ViolatingDemo();
  if (kind == "composite") {
    if (!descriptor.contains("expression") || !descriptor.at("expression").is_string()) {
      problems.Add("missing string field 'expression'");
      problems.Throw();
    }
    std::optional<WeightModel> m;
    Capture(problems, [&] {
      m = WeightModel::Composite(descriptor.at("expression").get<std::string>());
    });
    problems.ThrowIfAny();
    return *m;
  }
  if (kind == "strengths") {
    StrengthInputs in;
    auto licensors = problems.Number(descriptor, "licensors", true);
    auto licensees = problems.Number(descriptor, "licensees", true);
    auto gain = problems.Number(descriptor, "market_share_gain", true);
    auto desired = problems.Number(descriptor, "market_share_desired", true);
    auto age = problems.Number(descriptor, "patent_age", true);
    auto life = problems.Number(descriptor, "patent_life", true);
    auto p21 = problems.Number(descriptor, "p21", false);
    auto p22 = problems.Number(descriptor, "p22", false);
    problems.ThrowIfAny();
    for (const auto& [name, v] : {std::pair{"licensors", *licensors},
                                  std::pair{"licensees", *licensees}}) {
      if (v < 0 || std::floor(v) != v) problems.Add(std::string(name) + " must be a whole count");
    }
    problems.ThrowIfAny();
    in.licensors = static_cast<long>(*licensors);
    in.licensees = static_cast<long>(*licensees);
    in.market_share_gain = *gain;
    in.market_share_desired = *desired;
    in.patent_age = *age;
    in.patent_life = *life;
    const double q21 = p21.value_or(0.5);
    const double q22 = p22.value_or(2.0 / 3.0);
    Capture(problems, [&] { StrengthCompetitors(in.licensors, in.licensees); });
    Capture(problems, [&] { StrengthMarketShare(in.market_share_gain, in.market_share_desired); });
    Capture(problems, [&] { StrengthPatentLife(in.patent_age, in.patent_life); });
    if (!(q21 >= 0.0 && q21 <= 1.0)) problems.Add("p21 must lie in [0,1]");
    if (!(q22 >= 0.0 && q22 <= 1.0)) problems.Add("p22 must lie in [0,1]");
    problems.ThrowIfAny();
    return WeightModel::Strengths(in, q21, q22);
  }
  problems.Add("unknown model kind '" + kind + "'");
  problems.Throw();
}

Json ModelCatalog() {
  const auto unit = [](const char* name, const char* doc) {
    return ParamSchema(name, "number", 0.0, 1.0, std::nullopt, doc);
  };
  Json models = Json::array();
  models.push_back({{"kind", "constant"},
                    {"description", "fixed bargaining weight"},
                    {"params", {unit("alpha", "party 1 share of the surplus")}}});
  models.push_back({{"kind", "perceptions"},
                    {"description", "alpha = 1/2 + (p11 + p12 - p21 - p22)/4"},
                    {"params",
                     {unit("p11", "party 1 strength as seen by party 1"),
                      unit("p12", "party 1 strength as seen by party 2"),
                      unit("p21", "party 2 strength as seen by party 1"),
                      unit("p22", "party 2 strength as seen by party 2")}}});
  models.push_back({{"kind", "case1"},
                    {"description", "strengths equal the disagreement payoffs"},
                    {"params", Json::array()}});
  models.push_back({{"kind", "case2"},
                    {"description", "strengths equal each party's fraction of d1 + d2"},
                    {"params", Json::array()}});
  models.push_back({{"kind", "case3"},
                    {"description", "party 2's strength derives from party 1's weakness"},
                    {"params", Json::array()}});
  models.push_back({{"kind", "violating-demo"},
                    {"description", "weight that breaks Pareto efficiency near the origin"},
                    {"params", Json::array()}});
  models.push_back(
      {{"kind", "composite"},
       {"description",
        "expression over d1, d2, numbers, + - * /, min, max, competitors(n,m), "
        "market_share(s,S), patent_life(t,T); must stay in [0,1] on the feasible triangle"},
       {"params", {{{"name", "expression"}, {"type", "string"}}}}});
  models.push_back(
      {{"kind", "strengths"},
       {"description", "party 1 weighs competitors and market share; party 2 sees patent life"},
       {"params",
        {ParamSchema("licensors", "integer", 0.0, std::nullopt, std::nullopt,
                     "competing licensors"),
         ParamSchema("licensees", "integer", 1.0, std::nullopt, std::nullopt,
                     "potential licensees"),
         unit("market_share_gain", "share s gained by party 2, 0 <= s <= S"),
         ParamSchema("market_share_desired", "number", 0.0, 1.0, std::nullopt,
                     "share S party 2 desires, S > 0"),
         ParamSchema("patent_age", "number", 0.0, std::nullopt, std::nullopt,
                     "years since issue, t <= T"),
         ParamSchema("patent_life", "number", 0.0, std::nullopt, std::nullopt,
                     "patent life T in years, T > 0"),
         ParamSchema("p21", "number", 0.0, 1.0, 0.5, "party 2 strength as seen by party 1"),
         ParamSchema("p22", "number", 0.0, 1.0, 2.0 / 3.0,
                     "party 2 strength as seen by party 2")}}});
  return {{"models", models}};
}

SolveRequest SolveRequestFromJson(const Json& body) {
  Problems problems("solve request");
  if (!body.is_object()) {
    problems.Add("body must be a JSON object");
    problems.Throw();
  }
  SolveRequest req;
  const Json& where = body.contains("disagreement") ? body.at("disagreement") : body;
  auto d1 = problems.Number(where, "d1", true);
  auto d2 = problems.Number(where, "d2", true);
  if (auto n = problems.Bool(where, "normalized")) req.normalized = *n;
  if (auto s = problems.Bool(body, "strict")) req.strict = *s;
  auto alpha = problems.Number(body, "alpha", false);
  req.operating_margin = problems.Number(body, "operating_margin", false);

  if (body.contains("financials")) {
    const Json& fin = body.at("financials");
    auto revenue = problems.Number(fin, "operating_revenue", true);
    auto cost = problems.Number(fin, "operating_cost", true);
    if (revenue && cost) Capture(problems, [&] { req.financials.emplace(*revenue, *cost); });
  }
  if (alpha && body.contains("model")) problems.Add("give either 'alpha' or 'model', not both");
  if (alpha) {
    Capture(problems, [&] { req.model = WeightModel::Constant(*alpha); });
  } else if (body.contains("model")) {
    Capture(problems, [&] { req.model = ModelFromJson(body.at("model")); });
  } else {
    problems.Add("one of 'alpha' or 'model' is required");
  }
  if (!req.normalized && !req.financials) {
    problems.Add("raw (non-normalized) payoffs require 'financials'");
  }
  if (req.operating_margin && !(*req.operating_margin > 0.0 && *req.operating_margin <= 1.0)) {
    problems.Add("operating_margin must lie in (0,1]");
  }
  problems.ThrowIfAny();
  req.d1 = *d1;
  req.d2 = *d2;
  return req;
}

std::optional<std::string> Case3Discrepancy(const WeightModel& model, const DisagreementPoint& d) {
  const auto* c = std::get_if<CaseWeight>(&model.variant());
  if (c == nullptr || c->which != DisagreementCase::kCase3 || !d.feasible() ||
      (d.d1() == 0.0 && d.d2() == 0.0)) {
    return std::nullopt;
  }
  const double pipeline = CaseRoyalty(DisagreementCase::kCase3, d, RoyaltyRoute::kWeightPipeline);
  const double closed = CaseRoyalty(DisagreementCase::kCase3, d, RoyaltyRoute::kClosedForm);
  return "case3_discrepancy: the averaged case 3 weight gives royalty share " +
         Fixed6(pipeline) + " while the closed-form case 3 royalty expression gives " +
         Fixed6(closed) + " (it corresponds to alpha = (1-d2)/(2-d1-d2))";
}

Json Solve(const SolveRequest& req) {
  if (!req.model) throw Error(ErrorCode::kValidationError, "solve request has no weight model");
  DisagreementPoint d;
  if (req.normalized) {
    d = DisagreementPoint(req.d1, req.d2);
  } else {
    if (!req.financials) {
      throw Error(ErrorCode::kValidationError, "raw payoffs require financials");
    }
    d = NormalizeDisagreement(req.d1, req.d2, *req.financials);
  }
  RequireFeasible(d);

  WeightOptions options;
  options.strict = req.strict;
  AlphaResult alpha = req.model->Evaluate(d, options);
  const double share = SolveRoyaltyShare(d, alpha.alpha);

  Json out;
  out["royalty_share"] = share;
  std::optional<double> margin = req.operating_margin;
  if (req.financials) margin = req.financials->operating_margin();
  if (margin) out["royalty_rate"] = share * *margin;
  out["alpha"] = alpha.alpha;
  out["d1"] = d.d1();
  out["d2"] = d.d2();
  out["surplus_share"] = d.surplus();
  out["model"] = req.model->Name();
  if (req.financials) {
    const BargainOutcome o = PartitionProfits(*req.financials, d, alpha.alpha);
    out["profits"] = {{"profit_1", o.profit_1}, {"profit_2", o.profit_2}, {"surplus", o.surplus}};
  }
  if (auto note = Case3Discrepancy(*req.model, d)) alpha.warnings.push_back(*note);
  out["warnings"] = alpha.warnings;
  return out;
}

Json EvaluateAlpha(const WeightModel& model, const DisagreementPoint& d, bool strict) {
  WeightOptions options;
  options.strict = strict;
  AlphaResult alpha = model.Evaluate(d, options);
  if (auto note = Case3Discrepancy(model, d)) alpha.warnings.push_back(*note);
  return {{"model", model.Name()},
          {"alpha", alpha.alpha},
          {"d1", d.d1()},
          {"d2", d.d2()},
          {"warnings", alpha.warnings}};
}

Json ReportToJson(const ParetoReport& report, const std::string& model_name) {
  Json nodes = Json::array();
  for (const ScanNode& n : report.nodes) {
    Json j = {{"d1", n.d1},
              {"d2", n.d2},
              {"r_share", n.royalty_share},
              {"dr_dd1", n.dr_dd1},
              {"dr_dd2", n.dr_dd2},
              {"class", NodeClassName(n.node_class)}};
    if (n.node_class == NodeClass::kError) j["error"] = n.error;
    nodes.push_back(std::move(j));
  }
  Json violations = Json::array();
  for (const ScanNode& n : report.violations) {
    violations.push_back({n.d1, n.d2, n.dr_dd1, n.dr_dd2});
  }
  Json degenerate = Json::array();
  for (const ScanNode& n : report.degenerate_points) degenerate.push_back({n.d1, n.d2});
  return {{"model", model_name},
          {"grid_step", report.grid_step},
          {"fd_step", report.fd_step},
          {"tol", report.tol},
          {"pass", report.pass},
          {"node_count", report.nodes.size()},
          {"violation_count", report.violations.size()},
          {"degenerate_count", report.degenerate_points.size()},
          {"error_count", report.errors.size()},
          {"violations", violations},
          {"degenerate_points", degenerate},
          {"nodes", nodes}};
}

std::string ReportToCsv(const ParetoReport& report) {
  std::string out = "d1,d2,r_share,dr_dd1,dr_dd2,class\n";
  for (const ScanNode& n : report.nodes) {
    out += Full(n.d1) + "," + Full(n.d2) + "," + Full(n.royalty_share) + "," + Full(n.dr_dd1) +
           "," + Full(n.dr_dd2) + "," + std::string(NodeClassName(n.node_class)) + "\n";
  }
  return out;
}

Json FamilyToJson(const std::vector<FamilyCurve>& curves, const std::string& model_name) {
  Json arr = Json::array();
  for (const FamilyCurve& c : curves) {
    Json points = Json::array();
    for (const FamilyPoint& p : c.points) {
      Json j = {{"d1", p.d1}};
      if (p.error.empty()) {
        j["r_share"] = p.royalty_share;
      } else {
        j["r_share"] = nullptr;
        j["error"] = p.error;
      }
      points.push_back(std::move(j));
    }
    arr.push_back({{"d2_level", c.d2_level}, {"points", points}});
  }
  return {{"model", model_name}, {"curves", arr}};
}

std::string FamilyToCsv(const std::vector<FamilyCurve>& curves) {
  std::string out = "d2_level,d1,r_share\n";
  for (const FamilyCurve& c : curves) {
    for (const FamilyPoint& p : c.points) {
      out += Full(c.d2_level) + "," + Full(p.d1) + "," +
             (p.error.empty() ? Full(p.royalty_share) : std::string("nan")) + "\n";
    }
  }
  return out;
}

SolveRequest Scenario::ToSolveRequest() const {
  SolveRequest req;
  req.d1 = disagreement.d1();
  req.d2 = disagreement.d2();
  req.normalized = true;
  req.model = model;
  req.financials = financials;
  req.strict = strict;
  return req;
}

std::vector<Scenario> ParseScenarios(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::kParseError, "scenario file line " + std::to_string(line) +
                                            ", column " + std::to_string(col) + ": " + e.what());
  }

  Json list;
  if (doc.is_array()) {
    list = doc;
  } else if (doc.is_object() && doc.contains("scenarios")) {
    list = doc.at("scenarios");
  } else {
    list = Json::array({doc});
  }
  if (!list.is_array()) throw Error(ErrorCode::kValidationError, "'scenarios' must be an array");

  Problems problems("scenario file");
  std::vector<Scenario> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Json& s = list.at(k);
    std::string label = "scenario[" + std::to_string(k) + "]";
    if (!s.is_object()) {
      problems.Add(label + ": must be an object");
      continue;
    }
    Scenario sc;
    if (s.contains("name") && s.at("name").is_string()) {
      sc.name = s.at("name").get<std::string>();
      label += " '" + sc.name + "'";
    } else {
      problems.Add(label + ": missing string field 'name'");
    }
    Problems local(label);
    if (s.contains("financials")) {
      auto revenue = local.Number(s.at("financials"), "operating_revenue", true);
      auto cost = local.Number(s.at("financials"), "operating_cost", true);
      if (revenue && cost) Capture(local, [&] { sc.financials.emplace(*revenue, *cost); });
    }
    if (auto strict = local.Bool(s, "strict")) sc.strict = *strict;
    if (!s.contains("disagreement") || !s.at("disagreement").is_object()) {
      local.Add("missing object 'disagreement'");
    } else {
      const Json& dj = s.at("disagreement");
      auto d1 = local.Number(dj, "d1", true);
      auto d2 = local.Number(dj, "d2", true);
      const bool normalized = local.Bool(dj, "normalized").value_or(true);
      if (d1 && d2) {
        if (normalized) {
          Capture(local, [&] { sc.disagreement = DisagreementPoint(*d1, *d2); });
        } else if (!s.contains("financials")) {
          local.Add("raw payoffs require 'financials'");
        } else if (sc.financials) {
          Capture(local, [&] {
            sc.disagreement = NormalizeDisagreement(*d1, *d2, *sc.financials);
          });
        }
      }
    }
    if (!s.contains("model")) {
      local.Add("missing object 'model'");
    } else {
      sc.model_descriptor = s.at("model");
      Capture(local, [&] { sc.model = ModelFromJson(sc.model_descriptor); });
    }
    if (!local.empty()) {
      try {
        local.Throw();
      } catch (const Error& e) {
        problems.Add(e.what());
      }
      continue;
    }
    out.push_back(std::move(sc));
  }
  problems.ThrowIfAny();
  return out;
}

std::vector<Scenario> LoadScenarios(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseScenarios(buf.str());
}

const Scenario& FindScenario(const std::vector<Scenario>& scenarios, std::string_view name) {
  for (const Scenario& s : scenarios) {
    if (s.name == name) return s;
  }
  throw Error(ErrorCode::kInvalidInput, "no scenario named '" + std::string(name) + "'");
}

}  // namespace nbs
