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

#include "nbs/service.h"

#include <cmath>
#include <cstdlib>
#include <vector>

#include "nbs/analysis.h"
#include "nbs/io.h"
#include "nbs/nomograph.h"

namespace nbs {

namespace {

HttpResponse JsonResponse(int status, const Json& body) {
  return {status, "application/json", body.dump()};
}

HttpResponse ErrorResponse(int status, std::string_view code, const std::string& message) {
  return JsonResponse(status, {{"code", code}, {"message", message}});
}

double NumberOr(const Json& body, const char* key, double fallback) {
  if (!body.contains(key)) return fallback;
  if (!body.at(key).is_number()) {
    throw Error(ErrorCode::kValidationError, std::string("field '") + key + "' must be a number");
  }
  return body.at(key).get<double>();
}

const Json& RequireModel(const Json& body) {
  if (!body.is_object() || !body.contains("model")) {
    throw Error(ErrorCode::kValidationError, "missing object 'model'");
  }
  return body.at("model");
}

HttpResponse HandleSolve(const Json& body) {
  return JsonResponse(200, Solve(SolveRequestFromJson(body)));
}

HttpResponse HandleAlpha(const Json& body) {
  const SolveRequest req = SolveRequestFromJson(body);
  const DisagreementPoint d = req.normalized
                                  ? DisagreementPoint(req.d1, req.d2)
                                  : NormalizeDisagreement(req.d1, req.d2, *req.financials);
  return JsonResponse(200, EvaluateAlpha(*req.model, d, req.strict));
}

HttpResponse HandleScan(const Json& body) {
  const WeightModel model = ModelFromJson(RequireModel(body));
  ScanOptions opt;
  opt.grid_step = NumberOr(body, "grid_step", opt.grid_step);
  opt.fd_step = NumberOr(body, "fd_step", opt.fd_step);
  opt.tol = NumberOr(body, "tol", opt.tol);
  if (!(opt.grid_step > 0.0 && opt.grid_step <= 1.0)) {
    throw Error(ErrorCode::kValidationError, "grid_step must lie in (0,1]");
  }
  const double n = std::floor(1.0 / opt.grid_step + 1e-9);
  if ((n + 1.0) * (n + 2.0) / 2.0 > static_cast<double>(kMaxScanNodes)) {
    return ErrorResponse(400, ErrorCodeName(ErrorCode::kGridTooLarge),
                         "scan grid exceeds " + std::to_string(kMaxScanNodes) + " nodes");
  }
  return JsonResponse(200, ReportToJson(ParetoScan(model, opt), model.Name()));
}

HttpResponse HandleFamily(const Json& body) {
  const WeightModel model = ModelFromJson(RequireModel(body));
  std::vector<double> levels;
  if (!body.contains("levels") || !body.at("levels").is_array()) {
    throw Error(ErrorCode::kValidationError, "missing array 'levels'");
  }
  for (const Json& v : body.at("levels")) {
    if (!v.is_number()) throw Error(ErrorCode::kValidationError, "levels must be numbers");
    levels.push_back(v.get<double>());
  }
  const double step = NumberOr(body, "d1_step", 0.01);
  if (!(step >= 1e-6)) throw Error(ErrorCode::kValidationError, "d1_step must be >= 1e-6");
  return JsonResponse(200, FamilyToJson(SolutionFamily(model, levels, step), model.Name()));
}

double QueryNumber(const std::map<std::string, std::string>& q, const std::string& key) {
  const std::string& text = q.at(key);
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::kValidationError, "query parameter '" + key + "' must be a number");
  }
  return v;
}

HttpResponse HandleNomograph(const HttpRequest& req) {
  const auto& q = req.query;
  const double width = q.count("width") ? QueryNumber(q, "width") : 800.0;
  const double height = q.count("height") ? QueryNumber(q, "height") : 800.0;
  const NomographLayout layout = NomographLayout::Build(width, height);
  const int given = static_cast<int>(q.count("alpha") + q.count("d1") + q.count("d2"));
  std::optional<Isopleth> overlay;
  if (given == 3) {
    overlay = MakeIsopleth(layout, QueryNumber(q, "alpha"),
                           DisagreementPoint(QueryNumber(q, "d1"), QueryNumber(q, "d2")));
  } else if (given != 0) {
    throw Error(ErrorCode::kValidationError, "overlay needs all of alpha, d1 and d2");
  }
  return {200, "image/svg+xml", RenderSvg(layout, overlay)};
}

}  // namespace

HttpResponse HandleRequest(const HttpRequest& req) {
  struct Route {
    const char* method;
    const char* path;
  };
  static const std::vector<Route> kRoutes = {
      {"POST", "/api/solve"},  {"POST", "/api/alpha"},         {"POST", "/api/scan"},
      {"POST", "/api/family"}, {"GET", "/api/nomograph.svg"}, {"GET", "/api/models"},
      {"GET", "/api/health"}};

  bool path_known = false;
  for (const Route& r : kRoutes) {
    if (req.path != r.path) continue;
    path_known = true;
    if (req.method != r.method) continue;
    try {
      if (req.path == "/api/health") {
        return JsonResponse(200, {{"status", "ok"}, {"version", kVersion}});
      }
      if (req.path == "/api/models") return JsonResponse(200, ModelCatalog());
      if (req.path == "/api/nomograph.svg") return HandleNomograph(req);

      Json body;
      try {
        body = Json::parse(req.body);
      } catch (const Json::parse_error& e) {
        return ErrorResponse(400, ErrorCodeName(ErrorCode::kParseError), e.what());
      }
      if (req.path == "/api/solve") return HandleSolve(body);
      if (req.path == "/api/alpha") return HandleAlpha(body);
      if (req.path == "/api/scan") return HandleScan(body);
      return HandleFamily(body);
    } catch (const Error& e) {
      return ErrorResponse(400, ErrorCodeName(e.code()), e.what());
    } catch (const Json::exception& e) {
      return ErrorResponse(400, ErrorCodeName(ErrorCode::kValidationError), e.what());
    } catch (const std::exception& e) {
      return ErrorResponse(500, "internal", e.what());
    }
  }
  if (path_known) return ErrorResponse(405, "method_not_allowed", req.method + " " + req.path);
  return ErrorResponse(404, "not_found", "no route for " + req.method + " " + req.path);
}

}  // namespace nbs
