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

#include "nbs/cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "nbs/analysis.h"
#include "nbs/io.h"
#include "nbs/nomograph.h"
#include "nbs/oracles.h"

namespace nbs {

namespace {

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoDeal:
    case ErrorCode::kInfeasible:
      return kExitNoDeal;
    case ErrorCode::kNegativePayoff:
    case ErrorCode::kNormalizedOutOfRange:
    case ErrorCode::kInvalidInput:
    case ErrorCode::kInvalidFinancials:
    case ErrorCode::kInvalidCanvas:
    case ErrorCode::kParseError:
    case ErrorCode::kValidationError:
    case ErrorCode::kGridTooLarge:
      return kExitInvalidArguments;
    case ErrorCode::kInvalidWeight:
    case ErrorCode::kDegenerateOrigin:
    case ErrorCode::kDegenerateLine:
      return kExitModelError;
  }
  return kExitModelError;
}

// Options describing a weight model, shared by several subcommands.
struct ModelArgs {
  std::string model;
  std::optional<double> alpha;
  std::optional<double> p11, p12, p21, p22;
  std::string expression;
  std::optional<double> licensors, licensees, share_gain, share_desired, patent_age, patent_life;
  bool strict = false;
  std::string scenarios_path;
  std::string scenario_name;

  void Register(CLI::App* app) {
    app->add_option("--model", model,
                    "constant, perceptions, case1, case2, case3, violating-demo, composite, "
                    "strengths");
    app->add_option("--alpha", alpha, "constant bargaining weight");
    app->add_option("--p11", p11, "party 1 strength as seen by party 1");
    app->add_option("--p12", p12, "party 1 strength as seen by party 2");
    app->add_option("--p21", p21, "party 2 strength as seen by party 1");
    app->add_option("--p22", p22, "party 2 strength as seen by party 2");
    app->add_option("--expr", expression, "composite weight expression");
    app->add_option("--licensors", licensors, "competing licensors (strengths)");
    app->add_option("--licensees", licensees, "potential licensees (strengths)");
    app->add_option("--share-gain", share_gain, "market share s gained (strengths)");
    app->add_option("--share-desired", share_desired, "market share S desired (strengths)");
    app->add_option("--patent-age", patent_age, "years since issue (strengths)");
    app->add_option("--patent-life", patent_life, "patent life in years (strengths)");
    app->add_flag("--strict", strict, "treat the origin convention of case2/case3 as an error");
    app->add_option("--scenarios", scenarios_path, "scenario JSON file");
    app->add_option("--scenario", scenario_name, "scenario name within --scenarios");
  }

  bool UsesScenario() const { return !scenario_name.empty(); }

  const Scenario& LoadScenario(std::vector<Scenario>& storage) const {
    if (scenarios_path.empty()) {
      throw Error(ErrorCode::kInvalidInput, "--scenario requires --scenarios FILE");
    }
    storage = LoadScenarios(scenarios_path);
    return FindScenario(storage, scenario_name);
  }

  Json Descriptor() const {
    if (model.empty()) {
      if (alpha) return {{"kind", "constant"}, {"alpha", *alpha}};
      throw Error(ErrorCode::kInvalidInput, "give --alpha or --model");
    }
    Json d = {{"kind", model}};
    auto put = [&d](const char* key, const std::optional<double>& v) {
      if (v) d[key] = *v;
    };
    put("alpha", alpha);
    put("p11", p11);
    put("p12", p12);
    put("p21", p21);
    put("p22", p22);
    put("licensors", licensors);
    put("licensees", licensees);
    put("market_share_gain", share_gain);
    put("market_share_desired", share_desired);
    put("patent_age", patent_age);
    put("patent_life", patent_life);
    if (!expression.empty()) d["expression"] = expression;
    return d;
  }

  WeightModel Build() const { return ModelFromJson(Descriptor()); }
};

void PrintRow(std::ostream& out, const std::string& key, double value, int precision) {
  std::ostringstream v;
  v << std::setprecision(precision) << value;
  out << std::left << std::setw(16) << key << v.str() << "\n";
}

void PrintWarnings(std::ostream& out, const Json& warnings) {
  for (const Json& w : warnings) out << "note: " << w.get<std::string>() << "\n";
}

void WriteText(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidInput, "cannot write '" + path + "'");
  f << text;
}

std::vector<double> ParseList(const std::string& text, const char* what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidInput,
                  std::string(what) + ": '" + item + "' is not a number");
    }
  }
  return values;
}

Json NomographCheck(std::uint64_t seed, std::size_t samples) {
  const NomographLayout layout = NomographLayout::Build(800.0, 800.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_read = 0.0;
  double worst_det = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    double u1 = unit(rng);
    double u2 = unit(rng);
    if (u1 + u2 > 1.0) {
      u1 = 1.0 - u1;
      u2 = 1.0 - u2;
    }
    if (u1 + u2 > 1.0 - 1e-6) continue;
    const double alpha = unit(rng);
    const DisagreementPoint d(u1, u2);
    const double share = SolveRoyaltyShare(d, alpha);
    worst_read = std::max(worst_read, std::abs(ReadIsopleth(layout, alpha, d) - share));
    worst_det = std::max(
        worst_det, std::abs(CollinearityDeterminant<double>(
                       UnitAlphaPoint(alpha), UnitGridPoint(u1, u2), UnitResultPoint(share))));
  }
  return Json::array(
      {{{"name", "nomograph_read"}, {"pass", worst_read <= 1e-9}, {"worst", worst_read},
        {"tolerance", 1e-9}, {"cases", samples}},
       {{"name", "nomograph_collinearity"}, {"pass", worst_det <= 1e-9}, {"worst", worst_det},
        {"tolerance", 1e-9}, {"cases", samples}}});
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Royalty determination with the asymmetric Nash bargaining solution", "nbs"};
  app.require_subcommand(1);

  // solve
  CLI::App* solve = app.add_subcommand("solve", "royalty share and rate for a disagreement point");
  ModelArgs solve_model;
  solve_model.Register(solve);
  std::optional<double> solve_d1, solve_d2, margin, revenue, cost;
  bool raw = false;
  bool solve_json = false;
  int precision = 6;
  solve->add_option("--d1", solve_d1, "party 1 disagreement payoff");
  solve->add_option("--d2", solve_d2, "party 2 disagreement payoff");
  solve->add_flag("--raw", raw, "payoffs are money amounts; needs --revenue and --cost");
  solve->add_option("--revenue", revenue, "operating revenue");
  solve->add_option("--cost", cost, "operating cost");
  solve->add_option("--operating-margin", margin, "operating margin, for the royalty rate");
  solve->add_flag("--json", solve_json, "JSON output");
  solve->add_option("--precision", precision, "significant digits")->check(CLI::Range(1, 17));

  // alpha
  CLI::App* alpha_cmd = app.add_subcommand("alpha", "evaluate a bargaining-weight model");
  ModelArgs alpha_model;
  alpha_model.Register(alpha_cmd);
  std::optional<double> alpha_d1, alpha_d2;
  bool alpha_json = false;
  int alpha_precision = 6;
  alpha_cmd->add_option("--d1", alpha_d1, "normalized party 1 disagreement payoff");
  alpha_cmd->add_option("--d2", alpha_d2, "normalized party 2 disagreement payoff");
  alpha_cmd->add_flag("--json", alpha_json, "JSON output");
  alpha_cmd->add_option("--precision", alpha_precision, "significant digits")
      ->check(CLI::Range(1, 17));

  // scan
  CLI::App* scan = app.add_subcommand("scan", "Pareto-efficiency scan of a model");
  ModelArgs scan_model;
  scan_model.Register(scan);
  ScanOptions scan_opt;
  std::string scan_format = "csv";
  std::string scan_out;
  scan->add_option("--grid-step", scan_opt.grid_step, "grid spacing")->capture_default_str();
  scan->add_option("--fd-step", scan_opt.fd_step, "finite-difference step")->capture_default_str();
  scan->add_option("--tol", scan_opt.tol, "classification tolerance")->capture_default_str();
  scan->add_option("--threads", scan_opt.threads, "worker threads (0 = all cores)");
  scan->add_option("--format", scan_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--out", scan_out, "output file (default stdout)");

  // family
  CLI::App* family = app.add_subcommand("family", "solution-family curves");
  ModelArgs family_model;
  family_model.Register(family);
  std::string levels_text = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  double d1_step = 0.01;
  std::string family_format = "csv";
  std::string family_out;
  family->add_option("--levels", levels_text, "comma-separated d2 levels")->capture_default_str();
  family->add_option("--d1-step", d1_step, "d1 sampling step")->capture_default_str();
  family->add_option("--format", family_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  family->add_option("--out", family_out, "output file (default stdout)");

  // nomograph
  CLI::App* nomo = app.add_subcommand("nomograph", "render the alignment chart as SVG");
  std::string overlay_text;
  std::string nomo_out;
  double width = 800.0;
  double height = 800.0;
  double tick = 0.1;
  nomo->add_option("--overlay", overlay_text, "isopleth alpha,d1,d2");
  nomo->add_option("--out", nomo_out, "SVG output file")->required();
  nomo->add_option("--width", width, "canvas width")->capture_default_str();
  nomo->add_option("--height", height, "canvas height")->capture_default_str();
  nomo->add_option("--tick", tick, "tick step on every scale")->capture_default_str();

  // verify
  CLI::App* verify = app.add_subcommand("verify", "run the numeric oracles");
  VerifyOptions verify_opt;
  std::string verify_out;
  verify->add_option("--instances", verify_opt.instances, "random instances")
      ->capture_default_str();
  verify->add_option("--seed", verify_opt.seed, "generator seed")->capture_default_str();
  verify->add_option("--out", verify_out, "report file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArguments;
  }

  try {
    if (solve->parsed()) {
      SolveRequest req;
      std::vector<Scenario> storage;
      if (solve_model.UsesScenario()) {
        req = solve_model.LoadScenario(storage).ToSolveRequest();
        if (margin) req.operating_margin = margin;
      } else {
        if (!solve_d1 || !solve_d2) throw Error(ErrorCode::kInvalidInput, "--d1 and --d2 are required");
        Json body = {{"d1", *solve_d1}, {"d2", *solve_d2}, {"normalized", !raw}};
        const Json descriptor = solve_model.Descriptor();
        if (descriptor.at("kind") == "constant" && solve_model.model.empty()) {
          body["alpha"] = descriptor.at("alpha");
        } else {
          body["model"] = descriptor;
        }
        if (revenue || cost) {
          if (!revenue || !cost) throw Error(ErrorCode::kInvalidInput, "give both --revenue and --cost");
          body["financials"] = {{"operating_revenue", *revenue}, {"operating_cost", *cost}};
        }
        if (margin) body["operating_margin"] = *margin;
        if (solve_model.strict) body["strict"] = true;
        req = SolveRequestFromJson(body);
      }
      const Json result = Solve(req);
      if (solve_json) {
        out << result.dump() << "\n";
      } else {
        out << std::left << std::setw(16) << "model" << result.at("model").get<std::string>()
            << "\n";
        for (const char* key : {"d1", "d2", "alpha", "surplus_share", "royalty_share"}) {
          PrintRow(out, key, result.at(key).get<double>(), precision);
        }
        if (result.contains("royalty_rate")) {
          PrintRow(out, "royalty_rate", result.at("royalty_rate").get<double>(), precision);
        }
        if (result.contains("profits")) {
          for (const char* key : {"profit_1", "profit_2", "surplus"}) {
            PrintRow(out, key, result.at("profits").at(key).get<double>(), precision);
          }
        }
        PrintWarnings(out, result.at("warnings"));
      }
      return kExitOk;
    }

    if (alpha_cmd->parsed()) {
      std::vector<Scenario> storage;
      std::optional<WeightModel> model;
      DisagreementPoint d;
      bool strict = alpha_model.strict;
      if (alpha_model.UsesScenario()) {
        const Scenario& s = alpha_model.LoadScenario(storage);
        model = s.model;
        d = s.disagreement;
        strict = strict || s.strict;
      } else {
        model = alpha_model.Build();
        if (model->DependsOnDisagreement() && (!alpha_d1 || !alpha_d2)) {
          throw Error(ErrorCode::kInvalidInput, "--d1 and --d2 are required for this model");
        }
        d = DisagreementPoint(alpha_d1.value_or(0.0), alpha_d2.value_or(0.0));
      }
      const Json result = EvaluateAlpha(*model, d, strict);
      if (alpha_json) {
        out << result.dump() << "\n";
      } else {
        out << std::left << std::setw(16) << "model" << result.at("model").get<std::string>()
            << "\n";
        PrintRow(out, "alpha", result.at("alpha").get<double>(), alpha_precision);
        PrintWarnings(out, result.at("warnings"));
      }
      return kExitOk;
    }

    if (scan->parsed()) {
      std::vector<Scenario> storage;
      const WeightModel model = scan_model.UsesScenario() ? scan_model.LoadScenario(storage).model
                                                          : scan_model.Build();
      const ParetoReport report = ParetoScan(model, scan_opt);
      WriteText(scan_out,
                scan_format == "json" ? ReportToJson(report, model.Name()).dump() + "\n"
                                      : ReportToCsv(report),
                out);
      err << "scan " << model.Name() << ": " << report.nodes.size() << " nodes, "
          << report.violations.size() << " violations, " << report.degenerate_points.size()
          << " degenerate, " << report.errors.size() << " errors; "
          << (report.pass ? "PASS" : "FAIL") << "\n";
      return kExitOk;
    }

    if (family->parsed()) {
      std::vector<Scenario> storage;
      const WeightModel model = family_model.UsesScenario()
                                    ? family_model.LoadScenario(storage).model
                                    : family_model.Build();
      const std::vector<double> levels = ParseList(levels_text, "--levels");
      const auto curves = SolutionFamily(model, levels, d1_step);
      WriteText(family_out,
                family_format == "json" ? FamilyToJson(curves, model.Name()).dump() + "\n"
                                        : FamilyToCsv(curves),
                out);
      return kExitOk;
    }

    if (nomo->parsed()) {
      const NomographLayout layout =
          NomographLayout::Build(width, height, TickSteps{tick, tick, tick, tick});
      std::optional<Isopleth> overlay;
      if (!overlay_text.empty()) {
        const std::vector<double> v = ParseList(overlay_text, "--overlay");
        if (v.size() != 3) throw Error(ErrorCode::kInvalidInput, "--overlay takes alpha,d1,d2");
        overlay = MakeIsopleth(layout, v[0], DisagreementPoint(v[1], v[2]));
        err << "isopleth reads r/O_M = " << std::setprecision(precision) << overlay->read_result
            << "\n";
      }
      WriteText(nomo_out, RenderSvg(layout, overlay), out);
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto checks = RunOracleSuite(verify_opt);
      Json list = Json::array();
      bool pass = true;
      for (const OracleCheck& c : checks) {
        list.push_back({{"name", c.name},
                        {"pass", c.pass},
                        {"worst", c.worst},
                        {"tolerance", c.tolerance},
                        {"cases", c.cases}});
        pass = pass && c.pass;
      }
      for (const Json& c : NomographCheck(verify_opt.seed, 500)) {
        pass = pass && c.at("pass").get<bool>();
        list.push_back(c);
      }
      const Json report = {{"pass", pass},
                           {"seed", verify_opt.seed},
                           {"instances", verify_opt.instances},
                           {"checks", list}};
      WriteText(verify_out, report.dump(2) + "\n", out);
      return pass ? kExitOk : kExitModelError;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitModelError;
  }
  return kExitInvalidArguments;
}

}  // namespace nbs
