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

#include "equus/service.h"

#include <cstdio>

#include "equus/parse_error.h"
#include "equus/parser.h"
#include "equus/render.h"
#include "json.hpp"

namespace equus {

namespace {

using Json = nlohmann::ordered_json;

Response Reply(int status, const Json& body) { return {status, body.dump()}; }

Response Fail(int status, std::string_view message) {
  return Reply(status, Json{{"error", message}});
}

std::optional<Json> ParseBody(std::string_view body) {
  Json j = Json::parse(body.begin(), body.end(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

}  // namespace

Service::Service(Sheet initial, ServiceOptions options)
    : initial_(std::move(initial)), options_(std::move(options)), rng_(std::random_device{}()) {}

Response Service::CreateSession() {
  std::lock_guard lock(mu_);
  ExpireIdleLocked();
  std::string id;
  do {
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng_()),
                  static_cast<unsigned long long>(rng_()));
    id = buf;
  } while (sessions_.count(id));
  auto session = std::make_shared<Session>();
  session->sheet = initial_;
  session->last_used = options_.now();
  sessions_.emplace(id, std::move(session));
  return Reply(200, Json{{"sessionId", id}});
}

std::shared_ptr<Service::Session> Service::Find(std::string_view id) {
  std::lock_guard lock(mu_);
  ExpireIdleLocked();
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  it->second->last_used = options_.now();
  return it->second;
}

Response Service::PutCell(std::string_view id, std::string_view addr, std::string_view body) {
  auto session = Find(id);
  if (!session) return Fail(404, "unknown session");
  auto a = ParseAddress(addr);
  if (!a) return Fail(400, "invalid cell address");
  auto j = ParseBody(body);
  if (!j || !j->contains("raw") || !(*j)["raw"].is_string()) {
    return Fail(400, "body must be {\"raw\": string}");
  }
  const std::string raw = (*j)["raw"].get<std::string>();
  std::lock_guard lock(session->mu);
  try {
    session->sheet.Set(*a, raw);
  } catch (const ParseError& e) {
    return Reply(422, Json{{"parseError", Json::parse(e.ToRecord())}});
  }
  return Reply(200, Json{{"ok", true}});
}

Response Service::Select(std::string_view id, std::string_view body) {
  auto session = Find(id);
  if (!session) return Fail(404, "unknown session");
  auto j = ParseBody(body);
  if (!j) return Fail(400, "body must be {\"addr\": string or null}");
  std::optional<CellAddress> a;
  if (auto it = j->find("addr"); it != j->end() && !it->is_null()) {
    if (!it->is_string()) return Fail(400, "addr must be a string or null");
    a = ParseAddress(it->get<std::string>());
    if (!a) return Fail(400, "invalid cell address");
    a = a->Relative();
  }
  std::lock_guard lock(session->mu);
  session->selected = a;
  if (!a) return Reply(200, Json{{"blank", true}});
  auto tree = EvaluateCell(session->sheet, *a);
  if (!tree) return Reply(200, Json{{"blank", true}});
  const SceneGraph g = Layout(*tree, options_.layout);
  return Reply(200, Json{{"sceneGraph", Json::parse(ToJson(g))},
                         {"formulaText", Unparse(tree->expr())},
                         {"value", RenderValue(tree->Result())}});
}

Response Service::GetSheet(std::string_view id) {
  auto session = Find(id);
  if (!session) return Fail(404, "unknown session");
  std::lock_guard lock(session->mu);
  SheetResolver resolver(session->sheet);
  Json out = Json::object();
  for (const auto& [addr, content] : session->sheet.cells()) {
    out[FormatAddress(addr)] =
        Json{{"raw", content.raw}, {"displayValue", RenderValue(resolver.Resolve(addr))}};
  }
  return Reply(200, out);
}

Response Service::Health() const { return Reply(200, Json{{"status", "ok"}}); }

size_t Service::ExpireIdle() {
  std::lock_guard lock(mu_);
  return ExpireIdleLocked();
}

size_t Service::ExpireIdleLocked() {
  const auto now = options_.now();
  size_t removed = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    if (now - it->second->last_used > options_.idle_timeout) {
      it = sessions_.erase(it);
      ++removed;
    } else {
      ++it;
    }
  }
  return removed;
}

size_t Service::session_count() {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

}  // namespace equus
