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

// Bargaining-weight estimation.
//
// A weight alpha is party 1's share of the surplus. It is built from four
// perceived strengths P(m,n) = party m's strength as seen by party n, each in
// [0,1]:
//
//   alpha = 1/2 + (P11 + P12 - P21 - P22) / 4
//
// Strengths can be constants, simple market sub-models (competitors, market
// share, patent life), or functions of the disagreement point itself.

#ifndef NBS_WEIGHT_MODELS_H_
#define NBS_WEIGHT_MODELS_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nbs/core_model.h"
#include "nbs/expression.h"

namespace nbs {

struct PerceptionMatrix {
  double p11 = 0.5;  // party 1 as seen by party 1
  double p12 = 0.5;  // party 1 as seen by party 2
  double p21 = 0.5;  // party 2 as seen by party 1
  double p22 = 0.5;  // party 2 as seen by party 2

  // Throws kInvalidInput unless every entry is in [0,1].
  void Validate() const;
};

struct StrengthInputs {
  long licensors = 0;
  long licensees = 1;
  double market_share_gain = 0.0;     // s
  double market_share_desired = 1.0;  // S
  double patent_age = 0.0;            // t, years since issue
  double patent_life = 20.0;          // T, years
};

double AlphaFromPerceptions(const PerceptionMatrix& p);

// 1 - min(1, licensors / licensees).
double StrengthCompetitors(long licensors, long licensees);
// s / S.
double StrengthMarketShare(double gain, double desired);
// 1 - t / T.
double StrengthPatentLife(double age, double life);

// Party 1 weighs competitors and market share equally in its own view; party 2
// sees only the remaining patent life. p21 and p22 are party 2's strength as
// perceived by party 1 and by party 2.
double ExampleAlpha(const StrengthInputs& inputs, double p21 = 0.5, double p22 = 2.0 / 3.0);

// Symmetric weights driven by the disagreement payoffs alone.
enum class DisagreementCase {
  kCase1 = 1,  // strengths equal the payoffs
  kCase2 = 2,  // strengths equal each party's fraction of d1 + d2
  kCase3 = 3,  // party 2's strength derives from party 1's weakness
};

// How a case royalty is produced. kWeightPipeline feeds the case weight into
// SolveRoyaltyShare. kClosedForm evaluates the tabulated closed-form royalty
// for the case. The two agree for cases 1 and 2; for case 3 the closed form
// corresponds to alpha = (1-d2)/(2-d1-d2) rather than the averaged weight, so
// the values differ (0.41667 vs 0.43333 at (0.2, 0.3)).
enum class RoyaltyRoute { kWeightPipeline, kClosedForm };

struct WeightOptions {
  // Treat the symmetric-limit convention at the origin as an error.
  bool strict = false;
};

struct AlphaResult {
  double alpha = 0.5;
  std::vector<std::string> warnings;
};

AlphaResult CaseAlpha(DisagreementCase which, const DisagreementPoint& d,
                      const WeightOptions& options = {});

double CaseRoyalty(DisagreementCase which, const DisagreementPoint& d,
                   RoyaltyRoute route = RoyaltyRoute::kWeightPipeline,
                   const WeightOptions& options = {});

// A deliberately non-Pareto-efficient weight:
//   1/2 + (d1 + 1/3 - d1/(d1+d2) - (1-d1)) / 4
// Throws kDegenerateOrigin at (0,0).
double ViolatingDemoAlpha(const DisagreementPoint& d);

struct ConstantWeight {
  double alpha = 0.5;
};
struct PerceptionWeight {
  PerceptionMatrix matrix;
};
struct CaseWeight {
  DisagreementCase which = DisagreementCase::kCase1;
};
struct ViolatingDemoWeight {};
struct StrengthWeight {
  StrengthInputs inputs;
  double p21 = 0.5;
  double p22 = 2.0 / 3.0;
};
struct CompositeWeight {
  Expression expression;
};

// A bargaining-weight rule, identified in the CLI and service by Name():
// "constant", "perceptions", "case1", "case2", "case3", "violating-demo",
// "composite" or "strengths".
class WeightModel {
 public:
  using Variant = std::variant<ConstantWeight, PerceptionWeight, CaseWeight,
                               ViolatingDemoWeight, CompositeWeight, StrengthWeight>;

  static WeightModel Constant(double alpha);
  static WeightModel Perceptions(const PerceptionMatrix& p);
  static WeightModel Case(DisagreementCase which);
  static WeightModel ViolatingDemo();
  static WeightModel Strengths(const StrengthInputs& inputs, double p21 = 0.5,
                               double p22 = 2.0 / 3.0);
  // Parses and range-checks the expression on a 0.005 grid of the feasible
  // triangle. Throws kParseError or kValidationError.
  static WeightModel Composite(std::string_view expression, double sample_step = 0.005);

  std::string Name() const;
  const Variant& variant() const { return variant_; }

  // Weight at d. Errors: kInvalidWeight when a rule leaves [0,1],
  // kDegenerateOrigin where a rule is undefined at (0,0).
  AlphaResult Evaluate(const DisagreementPoint& d, const WeightOptions& options = {}) const;

  // r/O_M under this model (always the weight pipeline).
  double RoyaltyShare(const DisagreementPoint& d, const WeightOptions& options = {}) const;

  // Whether alpha depends on the disagreement point.
  bool DependsOnDisagreement() const;

 private:
  explicit WeightModel(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

// Known model identifiers, in catalog order.
const std::vector<std::string>& KnownModelNames();

}  // namespace nbs

#endif  // NBS_WEIGHT_MODELS_H_
