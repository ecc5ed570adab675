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

// Stateless HTTP facade. HandleRequest is a pure function from request to
// response; http_server.h binds it to a socket.
//
// Routes:
//   POST /api/solve            SolveRequest -> solve response (see io.h)
//   POST /api/alpha            {model | alpha, d1, d2} -> weight
//   POST /api/scan             {model, grid_step?, fd_step?, tol?} -> Pareto report
//   POST /api/family           {model, levels, d1_step?} -> curves
//   GET  /api/nomograph.svg    ?alpha=&d1=&d2= (overlay optional)
//   GET  /api/models           model catalog
//   GET  /api/health           {"status": "ok", "version"}
// Validation failures are 400 with {"code", "message"}.

#ifndef NBS_SERVICE_H_
#define NBS_SERVICE_H_

#include <map>
#include <string>
#include <string_view>

namespace nbs {

inline constexpr std::string_view kVersion = "1.0.0";

// Scan requests above this many grid nodes are refused (grid_too_large).
inline constexpr std::size_t kMaxScanNodes = 1000000;

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

HttpResponse HandleRequest(const HttpRequest& request);

}  // namespace nbs

#endif  // NBS_SERVICE_H_
