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

#include "nbs/nomograph.h"

#include "doctest.h"
#include "nbs/analysis.h"
#include "test_util.h"

namespace nbs {
namespace {

std::size_t Count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

// Shoelace form of the collinearity determinant, written out by hand.
double Det(double ax, double ay, double bx, double by, double cx, double cy) {
  return ax * (by - cy) - ay * (bx - cx) + (bx * cy - cx * by);
}

TEST_CASE("unit grid points") {
  const Eigen::Vector2d g = UnitGridPoint(0.2, 0.3);
  CHECK(g.x() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(g.y() == doctest::Approx(2.0 / 15.0).epsilon(1e-15));
  CHECK(std::abs(Det(0, 0.4, g.x(), g.y(), 0.5, 0.2)) <= 1e-15);

  const Eigen::Vector2d corner = UnitGridPoint(0.0, 0.0);
  CHECK(corner.x() == 1.0);
  CHECK(corner.y() == 0.0);
  for (double d1 : {0.0, 0.25, 0.6, 1.0}) {
    CHECK(UnitGridPoint(d1, 1.0 - d1).x() == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("collinearity over random feasible triples") {
  testing::FeasibleSampler gen(17);
  for (int k = 0; k < 2000; ++k) {
    auto [d1, d2] = gen.InteriorPoint(1e-9);
    const double alpha = gen.Unit();
    const double r = d1 + alpha * (1.0 - d1 - d2);
    const Eigen::Vector2d a = UnitAlphaPoint(alpha);
    const Eigen::Vector2d g = UnitGridPoint(d1, d2);
    const Eigen::Vector2d c = UnitResultPoint(r);
    CHECK(std::abs(Det(a.x(), a.y(), g.x(), g.y(), c.x(), c.y())) <= 1e-9);
    CHECK(std::abs(CollinearityDeterminant<double>(a, g, c)) <= 1e-9);
  }
}

TEST_CASE("grid rulings are straight") {
  for (int i = 0; i <= 10; ++i) {
    const double fixed = 0.1 * i;
    std::vector<double> xs, ys;
    for (int j = 0; j <= 100; ++j) {
      const double other = (1.0 - fixed) * j / 100.0;
      const Eigen::Vector2d p1 = UnitGridPoint(fixed, other);
      // Iso-d1: y = d1 x through the origin.
      CHECK(std::abs(p1.y() - fixed * p1.x()) <= 1e-12);
      const Eigen::Vector2d p2 = UnitGridPoint(other, fixed);
      // Iso-d2: x (1 + d2) + y = 1.
      CHECK(std::abs(p2.x() * (1.0 + fixed) + p2.y() - 1.0) <= 1e-12);
      xs.push_back(p1.x());
      ys.push_back(p1.y());
    }
    if (fixed < 1.0) {
      const LineFit fit = FitLine(Eigen::Map<Eigen::VectorXd>(xs.data(), xs.size()),
                                  Eigen::Map<Eigen::VectorXd>(ys.data(), ys.size()));
      CHECK(fit.max_residual <= 1e-12);
      CHECK(std::abs(fit.intercept) <= 1e-12);
    }
  }
}

TEST_CASE("layout geometry on the canvas") {
  const NomographLayout layout = NomographLayout::Build(1000.0, 600.0);
  CHECK(layout.iso_d1().size() == 11);
  CHECK(layout.iso_d2().size() == 11);
  testing::FeasibleSampler gen(2);
  for (int k = 0; k < 500; ++k) {
    auto [d1, d2] = gen.Point();
    const double alpha = gen.Unit();
    for (const Eigen::Vector2d& p :
         {layout.GridPoint(DisagreementPoint(d1, d2)), layout.AlphaPoint(alpha),
          layout.ResultPoint(d1 + alpha * (1 - d1 - d2))}) {
      CHECK(p.x() >= 0.0);
      CHECK(p.x() <= 1000.0);
      CHECK(p.y() >= 0.0);
      CHECK(p.y() <= 600.0);
    }
  }
  // Affine map keeps collinearity (scaled by the canvas area).
  const DisagreementPoint d(0.2, 0.3);
  const double det = CollinearityDeterminant<double>(layout.AlphaPoint(0.4), layout.GridPoint(d),
                                                     layout.ResultPoint(0.4));
  CHECK(std::abs(det) <= 1e-9 * 1000.0 * 600.0);
}

TEST_CASE("read_isopleth") {
  const NomographLayout layout = NomographLayout::Build(800.0, 800.0);
  CHECK(ReadIsopleth(layout, 0.40, DisagreementPoint(0.20, 0.30)) ==
        doctest::Approx(0.40).epsilon(1e-12));
  CHECK(ReadIsopleth(layout, 0.5, DisagreementPoint(0.0, 0.0)) ==
        doctest::Approx(0.5).epsilon(1e-12));

  testing::FeasibleSampler gen(23);
  for (int k = 0; k < 500; ++k) {
    auto [d1, d2] = gen.InteriorPoint(1e-6);
    const double alpha = gen.Unit();
    const DisagreementPoint d(d1, d2);
    CHECK(std::abs(ReadIsopleth(layout, alpha, d) - SolveRoyaltyShare(d, alpha)) <= 1e-9);
  }

  try {
    ReadIsopleth(layout, 0.5, DisagreementPoint(0.4, 0.6));
    FAIL("expected DegenerateLine");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateLine);
  }
  CHECK_THROWS_AS(ReadIsopleth(layout, 0.5, DisagreementPoint(0.7, 0.6)), Error);
}

TEST_CASE("layout argument checks") {
  for (auto [w, h] : {std::pair{0.0, 100.0}, std::pair{100.0, -1.0}, std::pair{100.0, 100.0}}) {
    try {
      NomographLayout::Build(w, h);
      FAIL("expected InvalidCanvas");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInvalidCanvas);
    }
  }
  CHECK_THROWS_AS(NomographLayout::Build(800, 800, TickSteps{0.3, 0.1, 0.1, 0.1}), Error);
}

TEST_CASE("svg rendering") {
  const NomographLayout layout = NomographLayout::Build(800.0, 800.0);
  const std::string blank = RenderSvg(layout);
  CHECK(blank.rfind("<?xml", 0) == 0);
  CHECK(Count(blank, "class=\"tick-label alpha\"") == 11);
  CHECK(Count(blank, "class=\"tick-label result\"") == 11);
  CHECK(Count(blank, "class=\"ruling d1\"") == 11);
  CHECK(Count(blank, "class=\"ruling d2\"") == 11);
  CHECK(Count(blank, "isopleth") == 0);
  CHECK(blank == RenderSvg(layout));

  const NomographLayout fine = NomographLayout::Build(800.0, 800.0, TickSteps{0.05, 0.02, 0.1, 0.1});
  const std::string fine_svg = RenderSvg(fine);
  CHECK(Count(fine_svg, "class=\"tick-label alpha\"") == 21);
  CHECK(Count(fine_svg, "class=\"tick-label result\"") == 51);

  const Isopleth iso = MakeIsopleth(layout, 0.40, DisagreementPoint(0.20, 0.30));
  CHECK(iso.read_result == doctest::Approx(0.40).epsilon(1e-12));
  CHECK((iso.alpha_point - layout.AlphaPoint(0.40)).norm() <= 1e-9);
  CHECK((iso.grid_point - layout.GridPoint(DisagreementPoint(0.2, 0.3))).norm() <= 1e-9);
  // The crossing with the result scale is the 0.4 tick.
  CHECK((iso.result_point - layout.ResultPoint(0.4)).norm() <= 1e-9);
  const std::string with = RenderSvg(layout, iso);
  CHECK(Count(with, "class=\"isopleth\"") == 1);
  CHECK(with.find("stroke=\"red\"") != std::string::npos);
  CHECK(with.find("r/O_M=0.4000") != std::string::npos);
  CHECK(with == RenderSvg(layout, iso));
}

}  // namespace
}  // namespace nbs
