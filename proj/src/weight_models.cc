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

#include "nbs/weight_models.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nbs {

namespace {

constexpr double kRangeSlack = 1e-12;

std::string OriginWarning() {
  return "degenerate_origin: weight undefined at d1=d2=0; symmetric-limit "
         "convention alpha=0.5 applied";
}

bool AtOrigin(const DisagreementPoint& d) { return d.d1() == 0.0 && d.d2() == 0.0; }

void RequireUnit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput,
                std::string(what) + " must lie in [0,1], got " + internal::Str(v));
  }
}

}  // namespace

void PerceptionMatrix::Validate() const {
  RequireUnit(p11, "p11");
  RequireUnit(p12, "p12");
  RequireUnit(p21, "p21");
  RequireUnit(p22, "p22");
}

double AlphaFromPerceptions(const PerceptionMatrix& p) {
  p.Validate();
  return 0.5 + 0.25 * (p.p11 + p.p12 - p.p21 - p.p22);
}

double StrengthCompetitors(long licensors, long licensees) {
  if (licensees < 1) throw Error(ErrorCode::kInvalidInput, "licensees must be at least 1");
  if (licensors < 0) throw Error(ErrorCode::kInvalidInput, "licensors must be non-negative");
  if (licensors >= licensees) return 0.0;
  return 1.0 - static_cast<double>(licensors) / static_cast<double>(licensees);
}

double StrengthMarketShare(double gain, double desired) {
  if (!(desired > 0.0 && desired <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "desired market share S must lie in (0,1]");
  }
  if (!(gain >= 0.0 && gain <= desired)) {
    throw Error(ErrorCode::kInvalidInput, "market share gain s must lie in [0,S]");
  }
  return gain / desired;
}

double StrengthPatentLife(double age, double life) {
  if (!(life > 0.0)) throw Error(ErrorCode::kInvalidInput, "patent life T must be positive");
  if (!(age >= 0.0 && age <= life)) {
    throw Error(ErrorCode::kInvalidInput, "patent age t must lie in [0,T]");
  }
  return 1.0 - age / life;
}

double ExampleAlpha(const StrengthInputs& in, double p21, double p22) {
  const double competitors = StrengthCompetitors(in.licensors, in.licensees);
  const double share = StrengthMarketShare(in.market_share_gain, in.market_share_desired);
  const double life = StrengthPatentLife(in.patent_age, in.patent_life);
  PerceptionMatrix p{(competitors + share) / 2.0, life, p21, p22};
  return AlphaFromPerceptions(p);
}

AlphaResult CaseAlpha(DisagreementCase which, const DisagreementPoint& d,
                      const WeightOptions& options) {
  RequireFeasible(d);
  const double d1 = d.d1();
  const double d2 = d.d2();
  AlphaResult out;
  switch (which) {
    case DisagreementCase::kCase1:
      out.alpha = 0.5 + (d1 - d2) / 2.0;
      return out;
    case DisagreementCase::kCase2:
    case DisagreementCase::kCase3:
      break;
  }
  if (AtOrigin(d)) {
    if (options.strict) {
      throw Error(ErrorCode::kDegenerateOrigin,
                  "case " + std::to_string(static_cast<int>(which)) +
                      " weight is undefined at d1=d2=0");
    }
    out.alpha = 0.5;
    out.warnings.push_back(OriginWarning());
    return out;
  }
  if (which == DisagreementCase::kCase2) {
    out.alpha = d1 / (d1 + d2);
  } else {
    // Tabulated rational form; equals the average of d1/(d1+d2) and
    // 1 - (1-d1)/(2-d1-d2).
    const double num = d1 * d1 + (2.0 * d2 - 3.0) * d1 + d2 * d2 - d2;
    const double den = 2.0 * (d1 + d2) * (-2.0 + d1 + d2);
    out.alpha = num / den;
  }
  return out;
}

double CaseRoyalty(DisagreementCase which, const DisagreementPoint& d, RoyaltyRoute route,
                   const WeightOptions& options) {
  if (route == RoyaltyRoute::kWeightPipeline) {
    return SolveRoyaltyShare(d, CaseAlpha(which, d, options).alpha);
  }
  RequireFeasible(d);
  const double d1 = d.d1();
  const double d2 = d.d2();
  switch (which) {
    case DisagreementCase::kCase1:
      return (d2 * d2 - d1 * d1 + 2.0 * (d1 - d2) + 1.0) / 2.0;
    case DisagreementCase::kCase2:
      if (AtOrigin(d)) return SolveRoyaltyShare(d, CaseAlpha(which, d, options).alpha);
      return d1 / (d1 + d2);
    case DisagreementCase::kCase3:
      return (d2 * d2 - d1 * d1 - 2.0 * d2 + d1 + 1.0) / (2.0 - d1 - d2);
  }
  return 0.0;
}

double ViolatingDemoAlpha(const DisagreementPoint& d) {
  if (AtOrigin(d)) {
    throw Error(ErrorCode::kDegenerateOrigin, "violating-demo weight is undefined at d1=d2=0");
  }
  const double d1 = d.d1();
  const double d2 = d.d2();
  return 0.5 + 0.25 * (d1 + 1.0 / 3.0 - d1 / (d1 + d2) - (1.0 - d1));
}

WeightModel WeightModel::Constant(double alpha) {
  RequireWeight(alpha);
  return WeightModel(ConstantWeight{alpha});
}

WeightModel WeightModel::Perceptions(const PerceptionMatrix& p) {
  p.Validate();
  return WeightModel(PerceptionWeight{p});
}

WeightModel WeightModel::Case(DisagreementCase which) { return WeightModel(CaseWeight{which}); }

WeightModel WeightModel::ViolatingDemo() { return WeightModel(ViolatingDemoWeight{}); }

WeightModel WeightModel::Strengths(const StrengthInputs& inputs, double p21, double p22) {
  ExampleAlpha(inputs, p21, p22);  // validates
  return WeightModel(StrengthWeight{inputs, p21, p22});
}

WeightModel WeightModel::Composite(std::string_view expression, double sample_step) {
  if (!(sample_step > 0.0 && sample_step <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "sample step must lie in (0,1]");
  }
  Expression expr = Expression::Parse(expression);

  const long n = static_cast<long>(std::floor(1.0 / sample_step + 1e-9));
  std::vector<std::string> problems;
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; i + j <= n; ++j) {
      const double d1 = static_cast<double>(i) * sample_step;
      const double d2 = static_cast<double>(j) * sample_step;
      std::ostringstream where;
      where << "(" << d1 << ", " << d2 << ")";
      double v = 0.0;
      try {
        v = expr.Evaluate(d1, d2);
      } catch (const Error& e) {
        problems.push_back(where.str() + ": " + e.what());
        continue;
      }
      if (!std::isfinite(v)) {
        if (i == 0 && j == 0) continue;
        problems.push_back(where.str() + ": not finite");
      } else if (v < -kRangeSlack || v > 1.0 + kRangeSlack) {
        problems.push_back(where.str() + ": alpha=" + internal::Str(v) + " outside [0,1]");
      }
    }
  }
  if (!problems.empty()) {
    std::string msg = "composite weight '" + std::string(expression) + "' fails on " +
                      std::to_string(problems.size()) + " sampled point(s)";
    const std::size_t shown = std::min<std::size_t>(problems.size(), 5);
    for (std::size_t k = 0; k < shown; ++k) msg += "; " + problems[k];
    throw Error(ErrorCode::kValidationError, msg);
  }
  return WeightModel(CompositeWeight{std::move(expr)});
}

std::string WeightModel::Name() const {
  struct Namer {
    std::string operator()(const ConstantWeight&) const { return "constant"; }
    std::string operator()(const PerceptionWeight&) const { return "perceptions"; }
    std::string operator()(const CaseWeight& c) const {
      return "case" + std::to_string(static_cast<int>(c.which));
    }
    std::string operator()(const ViolatingDemoWeight&) const { return "violating-demo"; }
    std::string operator()(const CompositeWeight&) const { return "composite"; }
    std::string operator()(const StrengthWeight&) const { return "strengths"; }
  };
  return std::visit(Namer{}, variant_);
}

bool WeightModel::DependsOnDisagreement() const {
  return std::holds_alternative<CaseWeight>(variant_) ||
         std::holds_alternative<ViolatingDemoWeight>(variant_) ||
         std::holds_alternative<CompositeWeight>(variant_);
}

AlphaResult WeightModel::Evaluate(const DisagreementPoint& d, const WeightOptions& options) const {
  struct Evaluator {
    const DisagreementPoint& d;
    const WeightOptions& options;

    AlphaResult operator()(const ConstantWeight& w) const { return {w.alpha, {}}; }
    AlphaResult operator()(const PerceptionWeight& w) const {
      return {AlphaFromPerceptions(w.matrix), {}};
    }
    AlphaResult operator()(const CaseWeight& w) const { return CaseAlpha(w.which, d, options); }
    AlphaResult operator()(const ViolatingDemoWeight&) const { return {ViolatingDemoAlpha(d), {}}; }
    AlphaResult operator()(const StrengthWeight& w) const {
      return {ExampleAlpha(w.inputs, w.p21, w.p22), {}};
    }
    AlphaResult operator()(const CompositeWeight& w) const {
      const double v = w.expression.Evaluate(d.d1(), d.d2());
      if (!std::isfinite(v)) {
        if (d.d1() == 0.0 && d.d2() == 0.0) {
          throw Error(ErrorCode::kDegenerateOrigin,
                      "composite weight is undefined at d1=d2=0");
        }
        throw Error(ErrorCode::kInvalidWeight, "composite weight is not finite at (" +
                                                   internal::Str(d.d1()) + ", " +
                                                   internal::Str(d.d2()) + ")");
      }
      if (v < 0.0 && v >= -kRangeSlack) return {0.0, {}};
      if (v > 1.0 && v <= 1.0 + kRangeSlack) return {1.0, {}};
      return {v, {}};
    }
  };
  AlphaResult r = std::visit(Evaluator{d, options}, variant_);
  RequireWeight(r.alpha);
  return r;
}

double WeightModel::RoyaltyShare(const DisagreementPoint& d, const WeightOptions& options) const {
  return SolveRoyaltyShare(d, Evaluate(d, options).alpha);
}

const std::vector<std::string>& KnownModelNames() {
  static const std::vector<std::string> names = {
      "constant", "perceptions", "case1",     "case2",
      "case3",    "violating-demo", "composite", "strengths"};
  return names;
}

}  // namespace nbs
