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

#include "nbs/error.h"

namespace nbs {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNegativePayoff: return "negative_payoff";
    case ErrorCode::kNormalizedOutOfRange: return "normalized_out_of_range";
    case ErrorCode::kNoDeal: return "no_deal";
    case ErrorCode::kInvalidWeight: return "invalid_weight";
    case ErrorCode::kInvalidInput: return "invalid_input";
    case ErrorCode::kInvalidFinancials: return "invalid_financials";
    case ErrorCode::kDegenerateOrigin: return "degenerate_origin";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kInvalidCanvas: return "invalid_canvas";
    case ErrorCode::kDegenerateLine: return "degenerate_line";
    case ErrorCode::kParseError: return "parse_error";
    case ErrorCode::kValidationError: return "validation_error";
    case ErrorCode::kGridTooLarge: return "grid_too_large";
  }
  return "unknown";
}

}  // namespace nbs
