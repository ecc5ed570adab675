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

// Pareto-efficiency scans and solution-family data over the feasible
// triangle 0 <= d1 + d2 <= 1.
//
// A royalty surface r(d1, d2) is Pareto efficient when it rises with
// party 1's disagreement payoff and falls with party 2's:
//   dr/dd1 > 0,  dr/dd2 < 0.
// The scan estimates both derivatives with central differences at every
// interior grid node.

#ifndef NBS_ANALYSIS_H_
#define NBS_ANALYSIS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nbs/weight_models.h"

namespace nbs {

enum class NodeClass { kPass, kViolation, kDegenerate, kError };

std::string_view NodeClassName(NodeClass c);

struct ScanNode {
  double d1 = 0.0;
  double d2 = 0.0;
  double royalty_share = 0.0;
  double dr_dd1 = 0.0;
  double dr_dd2 = 0.0;
  NodeClass node_class = NodeClass::kPass;
  std::string error;  // set for kError only
};

struct ScanOptions {
  double grid_step = 0.01;
  double fd_step = 1e-4;
  double tol = 1e-6;
  // 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned threads = 0;
};

struct ParetoReport {
  double grid_step = 0.0;
  double fd_step = 0.0;
  double tol = 0.0;
  std::vector<ScanNode> nodes;  // every scanned node, row-major in (d1, d2)
  std::vector<ScanNode> violations;
  std::vector<ScanNode> degenerate_points;
  std::vector<ScanNode> errors;
  bool pass = false;  // no violations and no evaluation errors
};

// Scans nodes (i*h, j*h) with i, j >= 1 and d1 + d2 <= 1 - 2*fd_step.
// Throws kInvalidInput unless 0 < fd_step < grid_step and tol >= 0.
ParetoReport ParetoScan(const WeightModel& model, const ScanOptions& options = {});

// Number of nodes in the closed triangle for a given step.
std::size_t TriangleNodeCount(double step);

struct FamilyPoint {
  double d1 = 0.0;
  double royalty_share = 0.0;  // NaN when evaluation failed
  std::string error;
};

struct FamilyCurve {
  double d2_level = 0.0;
  std::vector<FamilyPoint> points;  // d1 ascending over [0, 1 - d2_level]
};

// One curve of r/O_M against d1 per level of d2. The last sample of each
// curve sits exactly on the zero-surplus edge d1 = 1 - d2_level.
std::vector<FamilyCurve> SolutionFamily(const WeightModel& model,
                                        std::span<const double> d2_levels, double d1_step);

// All grid nodes of the closed triangle, as columns (d1, d2), ordered by d1
// then d2.
Eigen::Matrix2Xd FeasibilityRegion(double step);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

// Least-squares y = slope*x + intercept.
LineFit FitLine(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

}  // namespace nbs

#endif  // NBS_ANALYSIS_H_
