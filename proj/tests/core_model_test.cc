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

#include "nbs/core_model.h"

#include "doctest.h"
#include "test_util.h"

namespace nbs {
namespace {

TEST_CASE("financial profile derives income and margin") {
  const FinancialProfile fin(400.0, 300.0);
  CHECK(fin.operating_income() == 100.0);
  CHECK(fin.operating_margin() == doctest::Approx(0.25).epsilon(1e-15));

  CHECK_THROWS_AS(FinancialProfile(100.0, 100.0), Error);
  CHECK_THROWS_AS(FinancialProfile(100.0, 150.0), Error);
  CHECK_THROWS_AS(FinancialProfile(0.0, 0.0), Error);
  CHECK_THROWS_AS(FinancialProfile(-1.0, 0.0), Error);
  try {
    FinancialProfile(10.0, 20.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidFinancials);
  }
}

TEST_CASE("normalize_disagreement") {
  const FinancialProfile fin(100.0, 0.0);
  const DisagreementPoint d = NormalizeDisagreement(20.0, 30.0, fin);
  CHECK(d.d1() == doctest::Approx(0.20));
  CHECK(d.d2() == doctest::Approx(0.30));

  const DisagreementPoint zero = NormalizeDisagreement(0.0, 0.0, fin);
  CHECK(zero.d1() == 0.0);
  CHECK(zero.d2() == 0.0);

  try {
    NormalizeDisagreement(150.0, 0.0, fin);
    FAIL("expected NormalizedOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNormalizedOutOfRange);
  }
  try {
    NormalizeDisagreement(-1.0, 0.0, fin);
    FAIL("expected NegativePayoff");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNegativePayoff);
  }
}

TEST_CASE("solve_royalty_share examples") {
  CHECK(std::abs(SolveRoyaltyShare(DisagreementPoint(0.2, 0.3), 0.4) - 0.40) <= 1e-12);
  CHECK(SolveRoyaltyShare(DisagreementPoint(0.0, 0.0), 0.5) == 0.5);
  CHECK(SolveRoyaltyShare(DisagreementPoint(0.6, 0.4), 0.9) == doctest::Approx(0.6).epsilon(1e-15));
}

TEST_CASE("solve_royalty_share errors") {
  try {
    SolveRoyaltyShare(DisagreementPoint(0.7, 0.4), 0.5);
    FAIL("expected NoDeal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoDeal);
    CHECK(std::string(e.what()).find("no deal: d1+d2 > 1") == 0);
  }
  for (double bad : {-0.01, 1.01, std::nan("")}) {
    try {
      SolveRoyaltyShare(DisagreementPoint(0.2, 0.3), bad);
      FAIL("expected InvalidWeight");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidWeight);
    }
  }
}

TEST_CASE("zero-surplus edge is a deal") {
  const DisagreementPoint edge(0.6, 0.4);
  CHECK(edge.feasible());
  for (double a : {0.0, 0.3, 1.0}) CHECK(SolveRoyaltyShare(edge, a) == doctest::Approx(0.6));
}

TEST_CASE("solve_classic matches a brute-force Nash product maximizer") {
  // Oracle: dense enumeration of the frontier.
  const double brute = testing::BruteForceShare(0.2, 0.3, 0.5);
  CHECK(brute == doctest::Approx(0.45).epsilon(1e-6));
  CHECK(SolveClassic(DisagreementPoint(0.2, 0.3)) == doctest::Approx(0.45).epsilon(1e-15));
  CHECK(SolveClassic(DisagreementPoint(0.0, 0.0)) == 0.5);
  for (double x : {0.0, 0.1, 0.25, 0.5}) CHECK(SolveClassic(DisagreementPoint(x, x)) == 0.5);
}

TEST_CASE("partition_profits examples") {
  const FinancialProfile fin(100.0, 0.0);
  // Oracle for the first example: brute-force the Nash product at O_I = 1
  // and scale.
  const double brute = testing::BruteForceShare(0.2, 0.3, 0.5) * 100.0;
  CHECK(brute == doctest::Approx(45.0).epsilon(1e-6));

  BargainOutcome o = PartitionProfits(fin, DisagreementPoint(0.2, 0.3), 0.5);
  CHECK(o.profit_1 == doctest::Approx(45.0));
  CHECK(o.profit_2 == doctest::Approx(55.0));
  CHECK(o.surplus == doctest::Approx(50.0));

  o = PartitionProfits(fin, DisagreementPoint(0.0, 0.0), 0.5);
  CHECK(o.profit_1 == 50.0);
  CHECK(o.profit_2 == 50.0);

  o = PartitionProfits(fin, DisagreementPoint(0.2, 0.3), 1.0);
  CHECK(o.profit_1 == doctest::Approx(70.0));
  CHECK(o.profit_2 == doctest::Approx(30.0));

  const FinancialProfile margin25(400.0, 300.0);
  o = PartitionProfits(margin25, DisagreementPoint(0.2, 0.3), 0.4);
  CHECK(o.royalty_share == doctest::Approx(0.40));
  CHECK(o.royalty_rate == doctest::Approx(0.10));
  // Party 2 keeps 1 - r/O_M of operating income.
  CHECK(o.profit_2 / margin25.operating_income() == doctest::Approx(1.0 - o.royalty_share));
}

TEST_CASE("properties over random feasible points") {
  testing::FeasibleSampler gen(7);
  for (int k = 0; k < 2000; ++k) {
    auto [d1, d2] = gen.Point();
    const DisagreementPoint d(d1, d2);
    const double alpha = gen.Unit();

    // Bounds.
    const double share = SolveRoyaltyShare(d, alpha);
    CHECK(share >= d1 - 1e-15);
    CHECK(share <= 1.0 - d2 + 1e-15);

    // Monotone in alpha with slope equal to the surplus.
    if (d1 + d2 < 1.0 - 1e-9) {
      const double a2 = std::min(1.0, alpha + 0.1);
      if (a2 > alpha) {
        const double slope = (SolveRoyaltyShare(d, a2) - share) / (a2 - alpha);
        CHECK(slope > 0.0);
        CHECK(slope == doctest::Approx(1.0 - d1 - d2).epsilon(1e-9));
      }
    }

    // Classic symmetry.
    const DisagreementPoint swapped(d2, d1);
    CHECK(SolveClassic(d) + SolveClassic(swapped) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(SolveClassic(d) == doctest::Approx(SolveRoyaltyShare(d, 0.5)).epsilon(1e-15));

    // Conservation and scale invariance.
    const double income = 1.0 + 1e6 * gen.Unit();
    const double k_scale = 0.5 + 10.0 * gen.Unit();
    const FinancialProfile fin(income, 0.0);
    const FinancialProfile scaled(income * k_scale, 0.0);
    const BargainOutcome o = PartitionProfits(fin, d, alpha);
    const BargainOutcome s = PartitionProfits(scaled, d, alpha);
    CHECK(std::abs(o.profit_1 + o.profit_2 - income) <= 1e-12 * income);
    CHECK(s.royalty_share == o.royalty_share);
    CHECK(s.profit_1 == doctest::Approx(k_scale * o.profit_1).epsilon(1e-12));
    CHECK(s.profit_2 == doctest::Approx(k_scale * o.profit_2).epsilon(1e-12));
  }
}

TEST_CASE("long double instantiation agrees with double") {
  const DisagreementPointT<long double> d(0.2L, 0.3L);
  CHECK(static_cast<double>(SolveRoyaltyShare(d, 0.4L)) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(static_cast<double>(SolveClassic(d)) == doctest::Approx(0.45).epsilon(1e-15));
}

}  // namespace
}  // namespace nbs
