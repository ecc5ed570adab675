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

// Financial domain types and the closed-form normalized asymmetric Nash
// bargaining solution. Everything here is expressed as a fraction of the
// licensed product's operating income, so the party-1 payoff is the royalty
// share r/O_M and the royalty rate on revenue follows from the margin.
//
// The types are templated on the scalar so the same formulas can be run in
// extended precision (long double) for cross-checks; the double aliases at
// the bottom are what the rest of the library uses.

#ifndef NBS_CORE_MODEL_H_
#define NBS_CORE_MODEL_H_

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <system_error>
#include <type_traits>

#include "nbs/error.h"

namespace nbs {

namespace internal {

// Shortest text that reads back to the same value.
template <typename Scalar>
std::string Str(Scalar v) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec == std::errc()) return std::string(buf, res.ptr);
  }
  std::ostringstream os;
  os.precision(std::numeric_limits<Scalar>::max_digits10);
  os << v;
  return os.str();
}

}  // namespace internal

// Operating revenue and cost of the licensed product. Income and margin are
// derived and a profile only exists when both are strictly positive.
template <typename Scalar>
class FinancialProfileT {
 public:
  FinancialProfileT(Scalar operating_revenue, Scalar operating_cost)
      : revenue_(operating_revenue),
        cost_(operating_cost),
        income_(operating_revenue - operating_cost) {
    if (!(revenue_ >= 0) || !(cost_ >= 0)) {
      throw Error(ErrorCode::kInvalidFinancials,
                  "operating revenue and cost must be non-negative");
    }
    if (!(revenue_ > 0) || !(income_ > 0)) {
      throw Error(ErrorCode::kInvalidFinancials,
                  "operating income must be positive (revenue " +
                      internal::Str(revenue_) + ", cost " +
                      internal::Str(cost_) + ")");
    }
    margin_ = income_ / revenue_;
  }

  Scalar operating_revenue() const { return revenue_; }
  Scalar operating_cost() const { return cost_; }
  Scalar operating_income() const { return income_; }
  Scalar operating_margin() const { return margin_; }

 private:
  Scalar revenue_;
  Scalar cost_;
  Scalar income_;
  Scalar margin_{};
};

// Disagreement payoffs as fractions of operating income. Each coordinate is
// in [0,1]; the joint constraint d1 + d2 <= 1 is checked when solving, where
// its violation means no deal is possible.
template <typename Scalar>
class DisagreementPointT {
 public:
  DisagreementPointT() = default;
  DisagreementPointT(Scalar d1_norm, Scalar d2_norm) : d1_(d1_norm), d2_(d2_norm) {
    if (!(d1_ >= 0) || !(d2_ >= 0)) {
      throw Error(ErrorCode::kNegativePayoff,
                  "normalized disagreement payoffs must be non-negative");
    }
    if (!(d1_ <= 1) || !(d2_ <= 1)) {
      throw Error(ErrorCode::kNormalizedOutOfRange,
                  "normalized disagreement payoff exceeds 1 (d1=" +
                      internal::Str(d1_) + ", d2=" + internal::Str(d2_) + ")");
    }
  }

  Scalar d1() const { return d1_; }
  Scalar d2() const { return d2_; }
  Scalar sum() const { return d1_ + d2_; }
  // Fraction of operating income left to divide after both payoffs; a sum
  // within rounding of 1 counts as zero surplus.
  Scalar surplus() const {
    const Scalar s = Scalar(1) - d1_ - d2_;
    return s > Scalar(0) ? s : Scalar(0);
  }
  bool feasible() const {
    return sum() <= Scalar(1) + Scalar(4) * std::numeric_limits<Scalar>::epsilon();
  }

  friend bool operator==(const DisagreementPointT&, const DisagreementPointT&) = default;

 private:
  Scalar d1_{0};
  Scalar d2_{0};
};

template <typename Scalar>
struct BargainOutcomeT {
  Scalar royalty_share;  // r/O_M, party 1's fraction of operating income
  Scalar royalty_rate;   // r, fraction of operating revenue
  Scalar profit_1;       // licensor
  Scalar profit_2;       // licensee
  Scalar surplus;        // O_I - d1 - d2, in money
};

template <typename Scalar>
void RequireFeasible(const DisagreementPointT<Scalar>& d) {
  if (!d.feasible()) {
    throw Error(ErrorCode::kNoDeal, "no deal: d1+d2 > 1 (d1=" +
                                        internal::Str(d.d1()) + ", d2=" +
                                        internal::Str(d.d2()) + ")");
  }
}

template <typename Scalar>
void RequireWeight(Scalar alpha) {
  if (!(alpha >= 0 && alpha <= 1)) {
    throw Error(ErrorCode::kInvalidWeight,
                "bargaining weight must lie in [0,1], got " + internal::Str(alpha));
  }
}

template <typename Scalar>
DisagreementPointT<Scalar> NormalizeDisagreement(
    Scalar d1, Scalar d2, const FinancialProfileT<Scalar>& fin) {
  if (!(d1 >= 0) || !(d2 >= 0)) {
    throw Error(ErrorCode::kNegativePayoff, "disagreement payoffs must be non-negative");
  }
  const Scalar income = fin.operating_income();
  return DisagreementPointT<Scalar>(d1 / income, d2 / income);
}

// r/O_M = d1 + alpha (1 - d1 - d2). A zero-surplus point (d1 + d2 == 1) is a
// valid bargain whose share is d1 for every alpha.
template <typename Scalar>
Scalar SolveRoyaltyShare(const DisagreementPointT<Scalar>& d, Scalar alpha) {
  RequireFeasible(d);
  RequireWeight(alpha);
  return d.d1() + alpha * d.surplus();
}

// Equal bargaining power.
template <typename Scalar>
Scalar SolveClassic(const DisagreementPointT<Scalar>& d) {
  RequireFeasible(d);
  return (Scalar(1) + d.d1() - d.d2()) / Scalar(2);
}

template <typename Scalar>
BargainOutcomeT<Scalar> PartitionProfits(const FinancialProfileT<Scalar>& fin,
                                         const DisagreementPointT<Scalar>& d,
                                         Scalar alpha) {
  const Scalar share = SolveRoyaltyShare(d, alpha);
  const Scalar income = fin.operating_income();
  BargainOutcomeT<Scalar> out;
  out.royalty_share = share;
  out.royalty_rate = share * fin.operating_margin();
  out.profit_1 = share * income;
  out.profit_2 = income - out.profit_1;
  out.surplus = d.surplus() * income;
  return out;
}

using FinancialProfile = FinancialProfileT<double>;
using DisagreementPoint = DisagreementPointT<double>;
using BargainOutcome = BargainOutcomeT<double>;

}  // namespace nbs

#endif  // NBS_CORE_MODEL_H_
