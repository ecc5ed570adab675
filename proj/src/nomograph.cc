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

#include <cmath>
#include <cstdio>
#include <sstream>

namespace nbs {

namespace {

double Cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

long TickCount(double step, const char* which) {
  if (!(step > 0.0 && step <= 1.0)) {
    throw Error(ErrorCode::kInvalidCanvas, std::string(which) + " tick step must lie in (0,1]");
  }
  const long n = std::lround(1.0 / step);
  if (std::abs(static_cast<double>(n) * step - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidCanvas, std::string(which) + " tick step must divide 1");
  }
  return n;
}

int Decimals(double step) {
  int places = 0;
  while (places < 6 && std::abs(step * std::pow(10.0, places) -
                                std::round(step * std::pow(10.0, places))) > 1e-9) {
    ++places;
  }
  return places;
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  // Avoid "-0.000" for tiny negatives.
  if (std::string(buf) == "-0.000") return "0.000";
  return buf;
}

std::string Label(double v, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

void Line(std::ostringstream& os, const char* cls, const Eigen::Vector2d& a,
          const Eigen::Vector2d& b, const char* style) {
  os << "  <line class=\"" << cls << "\" x1=\"" << Num(a.x()) << "\" y1=\"" << Num(a.y())
     << "\" x2=\"" << Num(b.x()) << "\" y2=\"" << Num(b.y()) << "\" " << style << "/>\n";
}

void Text(std::ostringstream& os, const char* cls, const Eigen::Vector2d& at, const char* anchor,
          const std::string& body) {
  os << "  <text class=\"" << cls << "\" x=\"" << Num(at.x()) << "\" y=\"" << Num(at.y())
     << "\" text-anchor=\"" << anchor << "\">" << body << "</text>\n";
}

void ScaleWithTicks(std::ostringstream& os, const ParametricScale& scale, double step,
                    const char* name, const char* title, double side) {
  Line(os, (std::string("scale ") + name).c_str(), scale.start, scale.end,
       "stroke=\"black\" stroke-width=\"2\"");
  const long n = std::lround(1.0 / step);
  const int decimals = Decimals(step);
  const Eigen::Vector2d tick(6.0 * side, 0.0);
  const std::string tick_cls = std::string("tick ") + name;
  const std::string label_cls = std::string("tick-label ") + name;
  for (long k = 0; k <= n; ++k) {
    const double v = static_cast<double>(k) * step;
    const Eigen::Vector2d p = scale.At(v);
    Line(os, tick_cls.c_str(), p, p + tick, "stroke=\"black\" stroke-width=\"1\"");
    Text(os, label_cls.c_str(), p + Eigen::Vector2d(10.0 * side, 4.0),
         side < 0 ? "end" : "start", Label(v, decimals));
  }
  Text(os, (std::string("scale-title ") + name).c_str(),
       scale.end + Eigen::Vector2d(0.0, -18.0), "middle", title);
}

}  // namespace

NomographLayout NomographLayout::Build(double width, double height, const TickSteps& ticks,
                                       double margin) {
  if (!std::isfinite(width) || !std::isfinite(height) || !(width > 0.0) || !(height > 0.0)) {
    throw Error(ErrorCode::kInvalidCanvas, "canvas dimensions must be positive");
  }
  if (!(margin >= 0.0) || !(width - 2.0 * margin > 0.0) || !(height - 2.0 * margin > 0.0)) {
    throw Error(ErrorCode::kInvalidCanvas, "margins leave no drawing area");
  }
  const long n_d1 = TickCount(ticks.d1, "d1");
  const long n_d2 = TickCount(ticks.d2, "d2");
  TickCount(ticks.alpha, "alpha");
  TickCount(ticks.result, "result");

  NomographLayout layout;
  layout.canvas_ = Canvas{width, height, margin};
  layout.ticks_ = ticks;
  const double inner_w = width - 2.0 * margin;
  const double inner_h = height - 2.0 * margin;
  layout.to_canvas_ = Eigen::Translation2d(margin, height - margin) *
                      Eigen::Scaling(inner_w, -inner_h);

  layout.alpha_scale_ = {layout.ToCanvas(UnitAlphaPoint(0.0)),
                         layout.ToCanvas(UnitAlphaPoint(1.0))};
  layout.result_scale_ = {layout.ToCanvas(UnitResultPoint(0.0)),
                          layout.ToCanvas(UnitResultPoint(1.0))};

  for (long k = 0; k <= n_d1; ++k) {
    const double v = static_cast<double>(k) * ticks.d1;
    layout.iso_d1_.push_back({v, layout.ToCanvas(UnitGridPoint(v, 0.0)),
                              layout.ToCanvas(UnitGridPoint(v, 1.0 - v))});
  }
  for (long k = 0; k <= n_d2; ++k) {
    const double v = static_cast<double>(k) * ticks.d2;
    layout.iso_d2_.push_back({v, layout.ToCanvas(UnitGridPoint(0.0, v)),
                              layout.ToCanvas(UnitGridPoint(1.0 - v, v))});
  }
  return layout;
}

Eigen::Vector2d NomographLayout::GridPoint(const DisagreementPoint& d) const {
  return ToCanvas(UnitGridPoint(d.d1(), d.d2()));
}

double ReadIsopleth(const NomographLayout& layout, double alpha, const DisagreementPoint& d) {
  RequireFeasible(d);
  RequireWeight(alpha);
  const Eigen::Vector2d a = layout.AlphaPoint(alpha);
  const Eigen::Vector2d g = layout.GridPoint(d);
  const ParametricScale& scale = layout.result_scale();
  const Eigen::Vector2d dir = scale.end - scale.start;

  const double extent = layout.canvas().width + layout.canvas().height;
  if (std::abs(Cross(dir, g - scale.start)) <= 1e-12 * extent * dir.norm()) {
    throw Error(ErrorCode::kDegenerateLine,
                "grid node lies on the result scale (zero surplus); no unique reading");
  }
  // a + t (g - a) = start + u dir
  Eigen::Matrix2d m;
  m.col(0) = g - a;
  m.col(1) = -dir;
  const Eigen::Vector2d tu = m.partialPivLu().solve(scale.start - a);
  return tu(1);
}

Isopleth MakeIsopleth(const NomographLayout& layout, double alpha, const DisagreementPoint& d) {
  Isopleth iso;
  iso.alpha = alpha;
  iso.d = d;
  iso.read_result = ReadIsopleth(layout, alpha, d);
  iso.alpha_point = layout.AlphaPoint(alpha);
  iso.grid_point = layout.GridPoint(d);
  iso.result_point = layout.ResultPoint(iso.read_result);
  return iso;
}

std::string RenderSvg(const NomographLayout& layout, const std::optional<Isopleth>& overlay) {
  const Canvas& c = layout.canvas();
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << Num(c.width)
     << "\" height=\"" << Num(c.height) << "\" viewBox=\"0 0 " << Num(c.width) << " "
     << Num(c.height) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "  <title>Asymmetric Nash bargaining royalty nomograph</title>\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << Num(c.width) << "\" height=\"" << Num(c.height)
     << "\" fill=\"white\"/>\n";

  const int d1_decimals = Decimals(layout.ticks().d1);
  for (const GridRuling& r : layout.iso_d1()) {
    Line(os, "ruling d1", r.from, r.to, "stroke=\"#3366cc\" stroke-width=\"0.8\"");
    Text(os, "ruling-label d1", r.from + Eigen::Vector2d(6.0, 4.0), "start",
         "d1=" + Label(r.value, d1_decimals));
  }
  const int d2_decimals = Decimals(layout.ticks().d2);
  for (const GridRuling& r : layout.iso_d2()) {
    Line(os, "ruling d2", r.from, r.to, "stroke=\"#339966\" stroke-width=\"0.8\"");
    Text(os, "ruling-label d2", r.from + Eigen::Vector2d(0.0, 16.0), "middle",
         "d2=" + Label(r.value, d2_decimals));
  }

  ScaleWithTicks(os, layout.alpha_scale(), layout.ticks().alpha, "alpha", "alpha", -1.0);
  ScaleWithTicks(os, layout.result_scale(), layout.ticks().result, "result", "r/O_M", -1.0);

  Text(os, "annotation", layout.result_scale().At(0.5) + Eigen::Vector2d(8.0, -40.0), "start",
       "d1+d2=1: zero surplus, grid meets this scale");

  if (overlay) {
    const Isopleth& iso = *overlay;
    Line(os, "isopleth", iso.alpha_point, iso.grid_point,
         "stroke=\"red\" stroke-width=\"1.5\"");
    for (const Eigen::Vector2d& p : {iso.alpha_point, iso.result_point, iso.grid_point}) {
      os << "  <circle class=\"isopleth-point\" cx=\"" << Num(p.x()) << "\" cy=\"" << Num(p.y())
         << "\" r=\"3\" fill=\"red\"/>\n";
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "alpha=%.2f, d1=%.2f, d2=%.2f: r/O_M=%.4f", iso.alpha,
                  iso.d.d1(), iso.d.d2(), iso.read_result);
    Text(os, "isopleth-label", Eigen::Vector2d(c.margin, c.margin * 0.5), "start", buf);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace nbs
