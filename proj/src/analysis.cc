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

#include "nbs/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace nbs {

namespace {

long StepsPerUnit(double step) {
  if (!(step > 0.0 && step <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "grid step must lie in (0,1]");
  }
  return static_cast<long>(std::floor(1.0 / step + 1e-9));
}

struct NodeIndex {
  long i;
  long j;
};

void ScanOne(const WeightModel& model, const ScanOptions& opt, ScanNode& node) {
  const double h = opt.fd_step;
  auto r = [&](double d1, double d2) { return model.RoyaltyShare(DisagreementPoint(d1, d2)); };
  try {
    node.royalty_share = r(node.d1, node.d2);
    node.dr_dd1 = (r(node.d1 + h, node.d2) - r(node.d1 - h, node.d2)) / (2.0 * h);
    node.dr_dd2 = (r(node.d1, node.d2 + h) - r(node.d1, node.d2 - h)) / (2.0 * h);
  } catch (const std::exception& e) {
    node.node_class = NodeClass::kError;
    node.error = e.what();
    return;
  }
  if (node.dr_dd1 < -opt.tol || node.dr_dd2 > opt.tol) {
    node.node_class = NodeClass::kViolation;
  } else if (std::abs(node.dr_dd1) <= opt.tol || std::abs(node.dr_dd2) <= opt.tol) {
    node.node_class = NodeClass::kDegenerate;
  } else {
    node.node_class = NodeClass::kPass;
  }
}

}  // namespace

std::string_view NodeClassName(NodeClass c) {
  switch (c) {
    case NodeClass::kPass: return "pass";
    case NodeClass::kViolation: return "violation";
    case NodeClass::kDegenerate: return "degenerate";
    case NodeClass::kError: return "error";
  }
  return "unknown";
}

std::size_t TriangleNodeCount(double step) {
  const auto n = static_cast<std::size_t>(StepsPerUnit(step));
  return (n + 1) * (n + 2) / 2;
}

ParetoReport ParetoScan(const WeightModel& model, const ScanOptions& opt) {
  if (!(opt.fd_step > 0.0) || !(opt.fd_step < opt.grid_step)) {
    throw Error(ErrorCode::kInvalidInput, "need 0 < fd_step < grid_step");
  }
  if (!(opt.tol >= 0.0)) throw Error(ErrorCode::kInvalidInput, "tolerance must be >= 0");
  const long n = StepsPerUnit(opt.grid_step);

  ParetoReport report;
  report.grid_step = opt.grid_step;
  report.fd_step = opt.fd_step;
  report.tol = opt.tol;

  const double limit = 1.0 - 2.0 * opt.fd_step;
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; i + j <= n; ++j) {
      ScanNode node;
      node.d1 = static_cast<double>(i) * opt.grid_step;
      node.d2 = static_cast<double>(j) * opt.grid_step;
      if (node.d1 + node.d2 > limit) continue;
      report.nodes.push_back(node);
    }
  }

  unsigned threads = opt.threads != 0 ? opt.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1u, 64u);
  const std::size_t total = report.nodes.size();
  if (threads == 1 || total < 1024) {
    for (ScanNode& node : report.nodes) ScanOne(model, opt, node);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        for (std::size_t k = begin; k < end; ++k) ScanOne(model, opt, report.nodes[k]);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  for (const ScanNode& node : report.nodes) {
    switch (node.node_class) {
      case NodeClass::kViolation: report.violations.push_back(node); break;
      case NodeClass::kDegenerate: report.degenerate_points.push_back(node); break;
      case NodeClass::kError: report.errors.push_back(node); break;
      case NodeClass::kPass: break;
    }
  }
  report.pass = report.violations.empty() && report.errors.empty();
  return report;
}

std::vector<FamilyCurve> SolutionFamily(const WeightModel& model,
                                        std::span<const double> d2_levels, double d1_step) {
  if (!(d1_step > 0.0)) throw Error(ErrorCode::kInvalidInput, "d1 step must be positive");
  std::vector<FamilyCurve> curves;
  curves.reserve(d2_levels.size());
  for (const double level : d2_levels) {
    if (!(level >= 0.0 && level <= 1.0)) {
      throw Error(ErrorCode::kInvalidInput, "d2 level must lie in [0,1]");
    }
    FamilyCurve curve;
    curve.d2_level = level;
    const double end = 1.0 - level;
    std::vector<double> xs;
    for (long i = 0;; ++i) {
      const double x = static_cast<double>(i) * d1_step;
      if (x > end - 1e-12) break;
      xs.push_back(x);
    }
    xs.push_back(end);

    for (const double x : xs) {
      FamilyPoint p;
      p.d1 = x;
      try {
        p.royalty_share = model.RoyaltyShare(DisagreementPoint(x, level));
      } catch (const std::exception& e) {
        p.royalty_share = std::numeric_limits<double>::quiet_NaN();
        p.error = e.what();
      }
      curve.points.push_back(std::move(p));
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

Eigen::Matrix2Xd FeasibilityRegion(double step) {
  const long n = StepsPerUnit(step);
  Eigen::Matrix2Xd nodes(2, static_cast<Eigen::Index>(TriangleNodeCount(step)));
  Eigen::Index col = 0;
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; i + j <= n; ++j) {
      nodes(0, col) = static_cast<double>(i) * step;
      nodes(1, col) = static_cast<double>(j) * step;
      ++col;
    }
  }
  return nodes;
}

LineFit FitLine(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kInvalidInput, "line fit needs two or more paired samples");
  }
  Eigen::MatrixXd design(x.size(), 2);
  design.col(0) = x;
  design.col(1).setOnes();
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(y);
  LineFit fit;
  fit.slope = coef(0);
  fit.intercept = coef(1);
  fit.max_residual = (design * coef - y).cwiseAbs().maxCoeff();
  return fit;
}

}  // namespace nbs
