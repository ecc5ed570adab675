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

#include "doctest.h"
#include "test_util.h"

namespace nbs {
namespace {

// Expected values below were computed in exact rational arithmetic.
constexpr double kExampleAlpha = 53.0 / 96.0;  // 0.5520833...
constexpr double kCase3Alpha = 13.0 / 30.0;    // at (0.2, 0.3)
constexpr double kCase3Pipeline = 5.0 / 12.0;  // 0.41667
constexpr double kCase3Closed = 13.0 / 30.0;   // 0.43333

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an nbs::Error");
  return ErrorCode::kInvalidInput;
}

TEST_CASE("alpha_from_perceptions") {
  CHECK(AlphaFromPerceptions({0.3, 0.6, 0.5, 0.4}) == doctest::Approx(0.5));
  CHECK(AlphaFromPerceptions({1, 1, 0, 0}) == 1.0);
  CHECK(AlphaFromPerceptions({0, 0, 1, 1}) == 0.0);
  CHECK(AlphaFromPerceptions({0.625, 0.75, 0.5, 2.0 / 3.0}) ==
        doctest::Approx(kExampleAlpha).epsilon(1e-15));
  CHECK(CodeOf([] { AlphaFromPerceptions({1.2, 0, 0, 0}); }) == ErrorCode::kInvalidInput);
}

TEST_CASE("alpha_from_perceptions stays in [0,1]") {
  testing::FeasibleSampler gen(11);
  for (int k = 0; k < 5000; ++k) {
    const double a = AlphaFromPerceptions({gen.Unit(), gen.Unit(), gen.Unit(), gen.Unit()});
    CHECK(a >= 0.0);
    CHECK(a <= 1.0);
  }
}

TEST_CASE("strength sub-models") {
  CHECK(StrengthCompetitors(1, 4) == 0.75);
  CHECK(StrengthCompetitors(2, 1) == 0.0);
  CHECK(StrengthCompetitors(0, 3) == 1.0);
  CHECK(CodeOf([] { StrengthCompetitors(1, 0); }) == ErrorCode::kInvalidInput);

  CHECK(StrengthMarketShare(0.2, 0.4) == 0.5);
  CHECK(StrengthMarketShare(0.0, 0.4) == 0.0);
  CHECK(StrengthMarketShare(0.4, 0.4) == 1.0);
  CHECK(CodeOf([] { StrengthMarketShare(0.5, 0.4); }) == ErrorCode::kInvalidInput);
  CHECK(CodeOf([] { StrengthMarketShare(0.0, 0.0); }) == ErrorCode::kInvalidInput);

  CHECK(StrengthPatentLife(0, 20) == 1.0);
  CHECK(StrengthPatentLife(20, 20) == 0.0);
  CHECK(StrengthPatentLife(5, 20) == 0.75);
  CHECK(CodeOf([] { StrengthPatentLife(21, 20); }) == ErrorCode::kInvalidInput);
  CHECK(CodeOf([] { StrengthPatentLife(0, 0); }) == ErrorCode::kInvalidInput);
}

TEST_CASE("example_alpha") {
  StrengthInputs in;
  in.licensors = 1;
  in.licensees = 4;
  in.market_share_gain = 0.2;
  in.market_share_desired = 0.4;
  in.patent_age = 5;
  in.patent_life = 20;
  CHECK(ExampleAlpha(in) == doctest::Approx(kExampleAlpha).epsilon(1e-15));

  // Balanced perceptions: strengths 0.5 each, p21 + p22 = 1.
  StrengthInputs balanced{1, 2, 0.2, 0.4, 10, 20};
  CHECK(ExampleAlpha(balanced, 0.5, 0.5) == doctest::Approx(0.5));

  StrengthInputs maximal{0, 1, 0.3, 0.3, 0, 20};
  CHECK(ExampleAlpha(maximal, 0.0, 0.0) == 1.0);
}

TEST_CASE("case_alpha examples") {
  const DisagreementPoint d(0.2, 0.3);
  CHECK(CaseAlpha(DisagreementCase::kCase1, d).alpha == doctest::Approx(0.45));
  CHECK(CaseAlpha(DisagreementCase::kCase2, d).alpha == doctest::Approx(0.40));
  CHECK(CaseAlpha(DisagreementCase::kCase3, d).alpha == doctest::Approx(kCase3Alpha).epsilon(1e-14));
  for (auto c : {DisagreementCase::kCase1, DisagreementCase::kCase2, DisagreementCase::kCase3}) {
    for (double x : {0.01, 0.2, 0.5}) {
      CHECK(CaseAlpha(c, DisagreementPoint(x, x)).alpha == doctest::Approx(0.5).epsilon(1e-15));
    }
  }
}

TEST_CASE("case 3 rational form equals the averaged weight and the simplified form") {
  // Independent routes: average of alpha1 = d1/(d1+d2) and
  // alpha2 = 1 - (1-d1)/(2-d1-d2), and 1/2 + (d1-d2)/(2 s (2-s)).
  testing::FeasibleSampler gen(3);
  for (int k = 0; k < 5000; ++k) {
    auto [d1, d2] = gen.InteriorPoint(1e-6);
    const double s = d1 + d2;
    const double averaged = 0.5 * (d1 / s + 1.0 - (1.0 - d1) / (2.0 - s));
    const double simplified = 0.5 + (d1 - d2) / (2.0 * s * (2.0 - s));
    const double table = CaseAlpha(DisagreementCase::kCase3, DisagreementPoint(d1, d2)).alpha;
    CHECK(table == doctest::Approx(averaged).epsilon(1e-10));
    CHECK(table == doctest::Approx(simplified).epsilon(1e-10));
  }
}

TEST_CASE("origin convention for cases 2 and 3") {
  const DisagreementPoint origin(0.0, 0.0);
  for (auto c : {DisagreementCase::kCase2, DisagreementCase::kCase3}) {
    const AlphaResult r = CaseAlpha(c, origin);
    CHECK(r.alpha == 0.5);
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].rfind("degenerate_origin", 0) == 0);
    CHECK(CodeOf([&] { CaseAlpha(c, origin, WeightOptions{true}); }) ==
          ErrorCode::kDegenerateOrigin);
  }
  CHECK(CaseAlpha(DisagreementCase::kCase1, origin).warnings.empty());
}

TEST_CASE("case_royalty examples") {
  const DisagreementPoint d(0.2, 0.3);
  CHECK(CaseRoyalty(DisagreementCase::kCase1, d) == doctest::Approx(0.425).epsilon(1e-14));
  CHECK(CaseRoyalty(DisagreementCase::kCase2, d) == doctest::Approx(0.40).epsilon(1e-14));
  CHECK(CaseRoyalty(DisagreementCase::kCase3, d) == doctest::Approx(kCase3Pipeline).epsilon(1e-14));
  CHECK(CaseRoyalty(DisagreementCase::kCase3, d, RoyaltyRoute::kClosedForm) ==
        doctest::Approx(kCase3Closed).epsilon(1e-14));
  // The closed form for case 3 is the pipeline with alpha = (1-d2)/(2-d1-d2).
  const double alt_alpha = (1.0 - 0.3) / (2.0 - 0.5);
  CHECK(SolveRoyaltyShare(d, alt_alpha) == doctest::Approx(kCase3Closed).epsilon(1e-14));
  CHECK(CodeOf([] { CaseRoyalty(DisagreementCase::kCase1, DisagreementPoint(0.7, 0.4)); }) ==
        ErrorCode::kNoDeal);
}

TEST_CASE("case 2 royalty depends only on the payoff ratio") {
  testing::FeasibleSampler gen(5);
  for (int k = 0; k < 1000; ++k) {
    auto [d1, d2] = gen.InteriorPoint(1e-3);
    const double lambda = (0.01 + 0.98 * gen.Unit()) / (d1 + d2);
    const double a = CaseRoyalty(DisagreementCase::kCase2, DisagreementPoint(d1, d2));
    const double b =
        CaseRoyalty(DisagreementCase::kCase2, DisagreementPoint(lambda * d1, lambda * d2));
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
  }
}

TEST_CASE("violating_demo_alpha") {
  CHECK(ViolatingDemoAlpha(DisagreementPoint(0.01, 0.01)) ==
        doctest::Approx(0.2133333333333333).epsilon(1e-14));
  CHECK(ViolatingDemoAlpha(DisagreementPoint(0.2, 0.3)) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  // On the diagonal: 1/2 + (2x - 7/6)/4.
  for (double x : {0.1, 0.3, 7.0 / 12.0}) {
    CHECK(ViolatingDemoAlpha(DisagreementPoint(x, x)) ==
          doctest::Approx(0.5 + (2.0 * x - 7.0 / 6.0) / 4.0).epsilon(1e-14));
  }
  CHECK(ViolatingDemoAlpha(DisagreementPoint(7.0 / 12.0, 7.0 / 12.0)) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(CodeOf([] { ViolatingDemoAlpha(DisagreementPoint(0, 0)); }) ==
        ErrorCode::kDegenerateOrigin);
}

TEST_CASE("weight model variants and names") {
  const DisagreementPoint d(0.2, 0.3);
  CHECK(WeightModel::Constant(0.4).Evaluate(d).alpha == 0.4);
  CHECK(WeightModel::Constant(0.4).Name() == "constant");
  CHECK(WeightModel::Perceptions({1, 1, 0, 0}).Evaluate(d).alpha == 1.0);
  CHECK(WeightModel::Case(DisagreementCase::kCase2).Name() == "case2");
  CHECK(WeightModel::Case(DisagreementCase::kCase3).RoyaltyShare(d) ==
        doctest::Approx(kCase3Pipeline));
  CHECK(WeightModel::ViolatingDemo().Name() == "violating-demo");
  StrengthInputs in{1, 4, 0.2, 0.4, 5, 20};
  CHECK(WeightModel::Strengths(in).Evaluate(d).alpha == doctest::Approx(kExampleAlpha));
  CHECK(CodeOf([] { WeightModel::Constant(1.5); }) == ErrorCode::kInvalidWeight);
  CHECK(KnownModelNames().size() == 8);
}

TEST_CASE("composite weights") {
  const WeightModel demo =
      WeightModel::Composite("0.5 + 0.25*(d1 + 1/3 - d1/(d1+d2) - (1-d1))");
  CHECK(demo.Name() == "composite");
  testing::FeasibleSampler gen(9);
  for (int k = 0; k < 200; ++k) {
    auto [d1, d2] = gen.InteriorPoint(1e-3);
    const DisagreementPoint d(d1, d2);
    CHECK(demo.Evaluate(d).alpha == doctest::Approx(ViolatingDemoAlpha(d)).epsilon(1e-14));
  }
  CHECK(CodeOf([&] { demo.Evaluate(DisagreementPoint(0, 0)); }) == ErrorCode::kDegenerateOrigin);

  const WeightModel strengths = WeightModel::Composite(
      "0.5 + 0.25*((competitors(1,4) + market_share(0.2,0.4))/2 + patent_life(5,20) - 0.5 - 2/3)");
  CHECK(strengths.Evaluate(DisagreementPoint(0.1, 0.1)).alpha ==
        doctest::Approx(kExampleAlpha).epsilon(1e-14));

  const WeightModel clamp = WeightModel::Composite("max(0, min(1, 0.5 + d1 - d2))");
  CHECK(clamp.Evaluate(DisagreementPoint(0.9, 0.0)).alpha == 1.0);

  CHECK(CodeOf([] { WeightModel::Composite("d1 + d2 + 0.5"); }) == ErrorCode::kValidationError);
  CHECK(CodeOf([] { WeightModel::Composite("0.5 +"); }) == ErrorCode::kParseError);
  CHECK(CodeOf([] { WeightModel::Composite("1/(d1 - 0.5)"); }) == ErrorCode::kValidationError);
}

}  // namespace
}  // namespace nbs
