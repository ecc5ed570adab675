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

// Independent numeric checks of the closed forms.
//
// MaximizeNashProduct solves the bargaining problem directly: it maximizes
// (p1 - d1)^alpha (p2 - d2)^(1-alpha) along the frontier p1 + p2 = O_I
// without using the closed-form partition. RubinsteinShare evaluates the
// subgame-perfect alternating-offers split whose short-interval limit is
// d1/(d1+d2).

#ifndef NBS_ORACLES_H_
#define NBS_ORACLES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nbs/core_model.h"

namespace nbs {

struct MaximizerResult {
  double pi1_star = 0.0;
  double pi2_star = 0.0;
  // Nash product of the normalized gains ((p1-d1)/O_I)^a ((p2-d2)/O_I)^(1-a).
  double nash_product_value = 0.0;
  int iterations = 0;
};

struct MaximizerOptions {
  int coarse_points = 10001;
  double relative_width = 1e-10;  // golden-section stop, relative to O_I
};

// Throws kInfeasible if d1 + d2 > O_I, kInvalidWeight for alpha outside
// [0,1], kInvalidInput for non-positive O_I or negative payoffs.
MaximizerResult MaximizeNashProduct(double operating_income, double d1, double d2, double alpha,
                                    const MaximizerOptions& options = {});

// Nash product of normalized gains at a frontier point; 0 outside the
// individually rational interval.
double NashProduct(double operating_income, double d1, double d2, double alpha, double pi1);

struct RubinsteinParams {
  double discount_rate_1 = 1.0;  // r_A, party 1
  double discount_rate_2 = 1.0;  // r_B, party 2
  double offer_interval = 1.0;   // delta

  void Validate() const;
};

// First proposer's (party 1's) subgame-perfect share
// (1 - dB) / (1 - dA dB), with d_i = exp(-r_i delta).
double RubinsteinFirstProposerShare(const RubinsteinParams& params);

// Rates mapped from the impasse point: r_B = k*d1, r_A = k*d2. Converges to
// d1/(d1+d2) as delta -> 0. Throws kDegenerateOrigin at (0,0).
double RubinsteinLimitShare(const DisagreementPoint& d, double delta, double rate_scale = 1.0);

struct OracleCheck {
  std::string name;
  bool pass = false;
  double worst = 0.0;      // worst observed error
  double tolerance = 0.0;
  std::size_t cases = 0;
};

struct VerifyOptions {
  std::size_t instances = 1000;
  std::uint64_t seed = 20260101;
};

// Seeded random agreement suite: maximizer vs closed form, first-order
// condition, local maximality, Rubinstein limit and convergence order, and
// scale invariance of the rate mapping.
std::vector<OracleCheck> RunOracleSuite(const VerifyOptions& options = {});

}  // namespace nbs

#endif  // NBS_ORACLES_H_
