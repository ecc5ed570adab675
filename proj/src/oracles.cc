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

#include "nbs/oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace nbs {

namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // 1/golden ratio

// alpha*log(p1 - d1) + (1-alpha)*log(p2 - d2) on the frontier.
double LogNashProduct(double income, double d1, double d2, double alpha, double pi1) {
  const double g1 = pi1 - d1;
  const double g2 = income - pi1 - d2;
  if (!(g1 > 0.0) || !(g2 > 0.0)) return -std::numeric_limits<double>::infinity();
  return alpha * std::log(g1) + (1.0 - alpha) * std::log(g2);
}

}  // namespace

double NashProduct(double income, double d1, double d2, double alpha, double pi1) {
  const double g1 = (pi1 - d1) / income;
  const double g2 = (income - pi1 - d2) / income;
  if (g1 < 0.0 || g2 < 0.0) return 0.0;
  return std::pow(g1, alpha) * std::pow(g2, 1.0 - alpha);
}

MaximizerResult MaximizeNashProduct(double income, double d1, double d2, double alpha,
                                    const MaximizerOptions& options) {
  if (!(income > 0.0)) throw Error(ErrorCode::kInvalidInput, "operating income must be positive");
  if (!(d1 >= 0.0) || !(d2 >= 0.0)) {
    throw Error(ErrorCode::kNegativePayoff, "disagreement payoffs must be non-negative");
  }
  RequireWeight(alpha);
  if (d1 + d2 > income) {
    throw Error(ErrorCode::kInfeasible, "infeasible: d1 + d2 exceeds operating income");
  }
  if (options.coarse_points < 3) throw Error(ErrorCode::kInvalidInput, "need >= 3 grid points");

  const double lo = d1;
  const double hi = income - d2;
  MaximizerResult out;
  auto finish = [&](double pi1) {
    out.pi1_star = pi1;
    out.pi2_star = income - pi1;
    out.nash_product_value = NashProduct(income, d1, d2, alpha, pi1);
    return out;
  };

  // Boundary weights and the zero-surplus edge put the maximum on an
  // endpoint, where the log form diverges.
  if (!(hi > lo)) return finish(lo);
  if (alpha == 0.0) return finish(lo);
  if (alpha == 1.0) return finish(hi);

  const int n = options.coarse_points;
  const double width = hi - lo;
  int best = 1;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int k = 1; k < n - 1; ++k) {
    const double x = lo + width * static_cast<double>(k) / static_cast<double>(n - 1);
    const double v = LogNashProduct(income, d1, d2, alpha, x);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  out.iterations = n;

  const double cell_lo = lo + width * static_cast<double>(best - 1) / static_cast<double>(n - 1);
  const double cell_hi = lo + width * static_cast<double>(best + 1) / static_cast<double>(n - 1);
  double a = cell_lo;
  double b = cell_hi;
  const double stop = options.relative_width * income;
  double c = b - kInvPhi * (b - a);
  double e = a + kInvPhi * (b - a);
  double fc = LogNashProduct(income, d1, d2, alpha, c);
  double fe = LogNashProduct(income, d1, d2, alpha, e);
  while (b - a > stop) {
    if (fc >= fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - kInvPhi * (b - a);
      fc = LogNashProduct(income, d1, d2, alpha, c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + kInvPhi * (b - a);
      fe = LogNashProduct(income, d1, d2, alpha, e);
    }
    ++out.iterations;
    // Interval stops shrinking once it reaches the spacing of doubles.
    if (!(c > a) || !(e < b)) break;
  }
  // Values are flat near the peak, so golden section stalls around sqrt(eps).
  // The log objective is concave; bisect on the sign of its slope instead,
  // near the golden-section answer when the slope brackets it there.
  auto slope = [&](double x) { return alpha / (x - d1) - (1.0 - alpha) / (hi - x); };
  const double pad = 1e-6 * width;
  a = std::max({a - pad, cell_lo, std::nextafter(lo, hi)});
  b = std::min({b + pad, cell_hi, std::nextafter(hi, lo)});
  if (!(slope(a) > 0.0) || !(slope(b) < 0.0)) {
    a = std::max(cell_lo, std::nextafter(lo, hi));
    b = std::min(cell_hi, std::nextafter(hi, lo));
  }
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (a + b);
    if (!(mid > a) || !(mid < b)) break;
    (slope(mid) > 0.0 ? a : b) = mid;
    ++out.iterations;
  }
  return finish(0.5 * (a + b));
}

void RubinsteinParams::Validate() const {
  if (!(discount_rate_1 > 0.0) || !(discount_rate_2 > 0.0) || !(offer_interval > 0.0)) {
    throw Error(ErrorCode::kInvalidInput,
                "discount rates and offer interval must all be positive");
  }
}

double RubinsteinFirstProposerShare(const RubinsteinParams& p) {
  p.Validate();
  // 1 - exp(-x) via expm1 keeps precision for short intervals.
  const double one_minus_db = -std::expm1(-p.discount_rate_2 * p.offer_interval);
  const double one_minus_dadb =
      -std::expm1(-(p.discount_rate_1 + p.discount_rate_2) * p.offer_interval);
  return one_minus_db / one_minus_dadb;
}

double RubinsteinLimitShare(const DisagreementPoint& d, double delta, double rate_scale) {
  if (d.d1() == 0.0 && d.d2() == 0.0) {
    throw Error(ErrorCode::kDegenerateOrigin, "Rubinstein rates are undefined at d1=d2=0");
  }
  if (!(delta > 0.0) || !(rate_scale > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "offer interval and rate scale must be positive");
  }
  // A zero rate means a perfectly patient party; handle the limits directly.
  if (d.d1() == 0.0) return 0.0;
  if (d.d2() == 0.0) return 1.0;
  RubinsteinParams p;
  p.discount_rate_1 = rate_scale * d.d2();
  p.discount_rate_2 = rate_scale * d.d1();
  p.offer_interval = delta;
  return RubinsteinFirstProposerShare(p);
}

std::vector<OracleCheck> RunOracleSuite(const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  OracleCheck agreement{"nash_product_agreement", true, 0.0, 1e-6, 0};
  OracleCheck foc{"first_order_condition", true, 0.0, 1e-6, 0};
  OracleCheck local{"local_maximum", true, 0.0, 0.0, 0};

  for (std::size_t k = 0; k < options.instances; ++k) {
    const double income = 1.0 + unit(rng) * (1e6 - 1.0);
    double u1 = unit(rng);
    double u2 = unit(rng);
    if (u1 + u2 > 1.0) {
      u1 = 1.0 - u1;
      u2 = 1.0 - u2;
    }
    const double alpha = unit(rng);
    const double d1 = u1 * income;
    const double d2 = u2 * income;

    const MaximizerResult m = MaximizeNashProduct(income, d1, d2, alpha);
    const FinancialProfile fin(income, 0.0);
    const BargainOutcome closed =
        PartitionProfits(fin, NormalizeDisagreement(d1, d2, fin), alpha);

    const double err = std::abs(m.pi1_star - closed.profit_1) / income;
    agreement.worst = std::max(agreement.worst, err);
    ++agreement.cases;

    const double foc_err =
        std::abs((1.0 - alpha) * (m.pi1_star - d1) - alpha * (m.pi2_star - d2)) / income;
    foc.worst = std::max(foc.worst, foc_err);
    ++foc.cases;

    const double v = m.nash_product_value;
    const double probe = 1e-6 * income;
    const double slack = 1e-14;
    double deficit = 0.0;
    for (double x : {d1, income - d2, m.pi1_star - probe, m.pi1_star + probe}) {
      deficit = std::max(deficit, NashProduct(income, d1, d2, alpha, x) - v - slack);
    }
    local.worst = std::max(local.worst, deficit);
    ++local.cases;
  }
  agreement.pass = agreement.worst <= agreement.tolerance;
  foc.pass = foc.worst <= foc.tolerance;
  local.pass = local.worst <= 0.0;

  OracleCheck limit{"rubinstein_limit", true, 0.0, 1e-4, 0};
  OracleCheck scaled{"rubinstein_limit_scale_10", true, 0.0, 1e-4, 0};
  OracleCheck order{"rubinstein_linear_order", true, 0.0, 0.1, 0};
  for (int k = 0; k < 100; ++k) {
    double u1 = 0.001 + 0.998 * unit(rng);
    double u2 = 0.001 + 0.998 * unit(rng);
    if (u1 + u2 >= 1.0) {
      u1 = 1.0 - u1;
      u2 = 1.0 - u2;
    }
    const DisagreementPoint d(u1, u2);
    const double target = u1 / (u1 + u2);
    limit.worst = std::max(limit.worst, std::abs(RubinsteinLimitShare(d, 1e-6) - target));
    scaled.worst =
        std::max(scaled.worst, std::abs(RubinsteinLimitShare(d, 1e-6, 10.0) - target));
    // Halving the interval halves the error when convergence is first order.
    const double e1 = RubinsteinLimitShare(d, 1e-3) - target;
    const double e2 = RubinsteinLimitShare(d, 5e-4) - target;
    order.worst = std::max(order.worst, std::abs(e1 / e2 - 2.0));
    ++limit.cases;
    ++scaled.cases;
    ++order.cases;
  }
  limit.pass = limit.worst <= limit.tolerance;
  scaled.pass = scaled.worst <= scaled.tolerance;
  order.pass = order.worst <= order.tolerance;

  return {agreement, foc, local, limit, scaled, order};
}

}  // namespace nbs
