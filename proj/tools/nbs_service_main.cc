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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nbs/http_server.h"
#include "nbs/service.h"

int main(int argc, char** argv) {
  nbs::ServerConfig config;
  config.port = nbs::PortFromEnvironment(config.port);

  CLI::App app{"Local HTTP service for royalty what-if analysis", "nbs-service"};
  app.add_option("--host", config.host, "bind address")->capture_default_str();
  app.add_option("--port", config.port, "port (NBS_PORT also works)")
      ->capture_default_str()
      ->check(CLI::Range(1, 65535));
  CLI11_PARSE(app, argc, argv);

  httplib::Server server;
  nbs::InstallRoutes(server);
  std::cerr << "nbs-service " << nbs::kVersion << " listening on http://" << config.host << ":"
            << config.port << "\n";
  if (!server.listen(config.host, config.port)) {
    std::cerr << "cannot bind " << config.host << ":" << config.port << "\n";
    return 1;
  }
  return 0;
}
