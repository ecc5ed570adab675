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

#ifndef NBS_HTTP_SERVER_H_
#define NBS_HTTP_SERVER_H_

#include <string>

#include "httplib.h"

namespace nbs {

struct ServerConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
};

// Routes every request on `server` through HandleRequest.
void InstallRoutes(httplib::Server& server);

// Port from NBS_PORT when set, otherwise `fallback`.
int PortFromEnvironment(int fallback);

}  // namespace nbs

#endif  // NBS_HTTP_SERVER_H_
