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

// Alignment chart for r/O_M = d1 + alpha (1 - d1 - d2).
//
// In unit coordinates the chart places
//   alpha scale:   (0, alpha)
//   (d1, d2) grid: (1, d1) / (1 + s),  s = d1 + d2
//   result scale:  (1/2, r/2)
// and the three points are collinear exactly when the equation holds. The
// grid rulings are straight: iso-d1 curves are rays y = d1 x and iso-d2
// curves are the lines x (1 + d2) + y = 1, filling x in [1/2, 1]. A straight
// edge from alpha through the grid node therefore reads r/O_M off the middle
// scale. The layout is the parallel-scale chart after the projective map
// (x, y) -> (x, y) / (x + 1), which keeps the grid bounded.
//
// Canvas coordinates are an affine image of the unit chart (y grows
// downward, as in SVG), so collinearity carries over unchanged.

#ifndef NBS_NOMOGRAPH_H_
#define NBS_NOMOGRAPH_H_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "nbs/core_model.h"

namespace nbs {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
Point2<Scalar> UnitAlphaPoint(Scalar alpha) {
  return Point2<Scalar>(Scalar(0), alpha);
}

template <typename Scalar>
Point2<Scalar> UnitGridPoint(Scalar d1, Scalar d2) {
  const Scalar w = Scalar(1) + d1 + d2;
  return Point2<Scalar>(Scalar(1) / w, d1 / w);
}

template <typename Scalar>
Point2<Scalar> UnitResultPoint(Scalar share) {
  return Point2<Scalar>(Scalar(1) / Scalar(2), share / Scalar(2));
}

// det [a 1; b 1; c 1]; zero iff the points are collinear.
template <typename Scalar>
Scalar CollinearityDeterminant(const Point2<Scalar>& a, const Point2<Scalar>& b,
                               const Point2<Scalar>& c) {
  Eigen::Matrix<Scalar, 3, 3> m;
  m << a.x(), a.y(), Scalar(1), b.x(), b.y(), Scalar(1), c.x(), c.y(), Scalar(1);
  return m.determinant();
}

// A calibrated straight scale: value v maps to start + v (end - start).
struct ParametricScale {
  Eigen::Vector2d start;
  Eigen::Vector2d end;

  Eigen::Vector2d At(double value) const { return start + value * (end - start); }
};

// One straight ruling of the (d1, d2) grid, in canvas coordinates.
struct GridRuling {
  double value = 0.0;
  Eigen::Vector2d from;
  Eigen::Vector2d to;
};

struct TickSteps {
  double alpha = 0.1;
  double result = 0.1;
  double d1 = 0.1;
  double d2 = 0.1;
};

struct Canvas {
  double width = 800.0;
  double height = 800.0;
  double margin = 80.0;
};

class NomographLayout {
 public:
  // Throws kInvalidCanvas for non-positive dimensions, margins that leave no
  // drawing area, or tick steps that do not divide 1.
  static NomographLayout Build(double canvas_width, double canvas_height,
                               const TickSteps& ticks = {}, double margin = 80.0);

  const Canvas& canvas() const { return canvas_; }
  const TickSteps& ticks() const { return ticks_; }
  const ParametricScale& alpha_scale() const { return alpha_scale_; }
  const ParametricScale& result_scale() const { return result_scale_; }
  // Rulings of constant d1 (rays) and constant d2, ascending by value.
  const std::vector<GridRuling>& iso_d1() const { return iso_d1_; }
  const std::vector<GridRuling>& iso_d2() const { return iso_d2_; }

  Eigen::Vector2d ToCanvas(const Eigen::Vector2d& unit) const { return to_canvas_ * unit; }
  Eigen::Vector2d AlphaPoint(double alpha) const { return alpha_scale_.At(alpha); }
  Eigen::Vector2d GridPoint(const DisagreementPoint& d) const;
  Eigen::Vector2d ResultPoint(double share) const { return result_scale_.At(share); }

 private:
  NomographLayout() = default;

  Canvas canvas_;
  TickSteps ticks_;
  Eigen::Affine2d to_canvas_;
  ParametricScale alpha_scale_;
  ParametricScale result_scale_;
  std::vector<GridRuling> iso_d1_;
  std::vector<GridRuling> iso_d2_;
};

struct Isopleth {
  double alpha = 0.0;
  DisagreementPoint d;
  double read_result = 0.0;
  Eigen::Vector2d alpha_point;
  Eigen::Vector2d grid_point;
  Eigen::Vector2d result_point;
};

// Intersects the line through the alpha mark and the grid node with the
// result scale and inverts that scale's calibration. Pure geometry: the
// closed-form royalty is never consulted. Throws kNoDeal for infeasible d,
// kInvalidWeight for alpha outside [0,1] and kDegenerateLine when the grid
// node sits on the result scale (d1 + d2 = 1).
double ReadIsopleth(const NomographLayout& layout, double alpha, const DisagreementPoint& d);

Isopleth MakeIsopleth(const NomographLayout& layout, double alpha, const DisagreementPoint& d);

// SVG 1.1 document; byte-identical for identical inputs.
std::string RenderSvg(const NomographLayout& layout,
                      const std::optional<Isopleth>& overlay = std::nullopt);

}  // namespace nbs

#endif  // NBS_NOMOGRAPH_H_
