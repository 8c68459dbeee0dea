/**
 * Copyright 2026 The Equus Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EQUUS_SERVICE_H
#define EQUUS_SERVICE_H

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>

#include "equus/scene.h"
#include "equus/sheet.h"

namespace equus {

struct Response {
  int status = 200;
  std::string body;  // JSON
};

struct ServiceOptions {
  using Clock = std::chrono::steady_clock;
  std::chrono::seconds idle_timeout = std::chrono::minutes(30);
  LayoutConfig layout;
  // Injectable for expiry tests.
  std::function<Clock::time_point()> now = [] { return Clock::now(); };
};

// Transport-independent request handlers. Requests on different sessions run
// concurrently; requests on one session are serialized.
class Service {
 public:
  explicit Service(Sheet initial = {}, ServiceOptions options = {});

  // POST /api/session -> {"sessionId"}
  Response CreateSession();
  // PUT /api/session/{id}/cell/{addr}, body {"raw": text} -> {"ok": true}
  Response PutCell(std::string_view id, std::string_view addr, std::string_view body);
  // POST /api/session/{id}/select, body {"addr": text|null}
  //   -> {"blank": true} | {"sceneGraph", "formulaText", "value"}
  Response Select(std::string_view id, std::string_view body);
  // GET /api/session/{id}/sheet -> {addr: {"raw", "displayValue"}}
  Response GetSheet(std::string_view id);
  // GET /api/health -> {"status": "ok"}
  [[nodiscard]] Response Health() const;

  // Drops sessions idle longer than the timeout; returns how many.
  size_t ExpireIdle();
  [[nodiscard]] size_t session_count();

 private:
  struct Session {
    std::mutex mu;
    Sheet sheet;
    std::optional<CellAddress> selected;
    ServiceOptions::Clock::time_point last_used;
  };

  std::shared_ptr<Session> Find(std::string_view id);
  size_t ExpireIdleLocked();

  const Sheet initial_;
  const ServiceOptions options_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>, std::less<>> sessions_;
  std::mt19937_64 rng_;
};

struct HttpOptions {
  // Served at "/" when set; otherwise a built-in single-page client.
  std::string static_dir;
  // One line per request; null disables logging.
  std::ostream* log = nullptr;
};

// HTTP transport for Service. CORS is allowed for localhost origins.
class HttpServer {
 public:
  HttpServer(Service& service, HttpOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 picks an ephemeral port. False if the port cannot be bound.
  [[nodiscard]] bool Bind(const std::string& host, int port);
  [[nodiscard]] int port() const { return port_; }
  // Blocks until Stop().
  void Run();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = -1;
};

}  // namespace equus

#endif  // EQUUS_SERVICE_H
