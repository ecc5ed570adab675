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

#include <cstdlib>
#include <thread>

// Eigen must come before httplib, whose resolver headers define _res.
#include "nbs/io.h"

#include "doctest.h"
#include "nbs/http_server.h"

namespace nbs {
namespace {

TEST_CASE("live server round trip") {
  httplib::Server server;
  InstallRoutes(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto health = client.Get("/api/health");
  REQUIRE(health);
  CHECK(health->status == 200);

  const Json body = {{"d1", 0.2}, {"d2", 0.3}, {"alpha", 0.4}, {"operating_margin", 0.25}};
  auto solve = client.Post("/api/solve", body.dump(), "application/json");
  REQUIRE(solve);
  CHECK(solve->status == 200);
  CHECK(Json::parse(solve->body).at("royalty_share").get<double>() ==
        doctest::Approx(0.4).epsilon(1e-12));

  auto svg = client.Get("/api/nomograph.svg?alpha=0.4&d1=0.2&d2=0.3");
  REQUIRE(svg);
  CHECK(svg->status == 200);
  CHECK(svg->get_header_value("Content-Type") == "image/svg+xml");
  CHECK(svg->body.find("class=\"isopleth\"") != std::string::npos);

  auto missing = client.Get("/nowhere");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  server.stop();
  worker.join();
}

TEST_CASE("port from environment") {
  ::unsetenv("NBS_PORT");
  CHECK(PortFromEnvironment(8080) == 8080);
  ::setenv("NBS_PORT", "9123", 1);
  CHECK(PortFromEnvironment(8080) == 9123);
  ::setenv("NBS_PORT", "junk", 1);
  CHECK(PortFromEnvironment(8080) == 8080);
  ::unsetenv("NBS_PORT");
}

}  // namespace
}  // namespace nbs
