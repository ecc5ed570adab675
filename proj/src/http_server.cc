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

#include "nbs/http_server.h"

#include <cstdlib>

#include "nbs/service.h"

namespace nbs {

void InstallRoutes(httplib::Server& server) {
  auto dispatch = [](const httplib::Request& in, httplib::Response& out) {
    HttpRequest req;
    req.method = in.method;
    req.path = in.path;
    for (const auto& [key, value] : in.params) req.query.emplace(key, value);
    req.body = in.body;
    const HttpResponse resp = HandleRequest(req);
    out.status = resp.status;
    out.set_content(resp.body, resp.content_type);
  };
  server.Get(".*", dispatch);
  server.Post(".*", dispatch);
  server.Put(".*", dispatch);
  server.Delete(".*", dispatch);
}

int PortFromEnvironment(int fallback) {
  if (const char* env = std::getenv("NBS_PORT")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 65536) return static_cast<int>(v);
  }
  return fallback;
}

}  // namespace nbs
