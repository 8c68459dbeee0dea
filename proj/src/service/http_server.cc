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

#include <chrono>
#include <regex>

#include "equus/service.h"
#include "httplib.h"

namespace equus {

namespace {

// Fallback page when no static directory is configured: a formula bar and
// a panel drawing the selected cell's scene graph.
constexpr std::string_view kIndexPage = R"html(<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>Equus</title>
<style>
body { font-family: Helvetica, Arial, sans-serif; margin: 1.5em; }
#bar input { font-family: monospace; padding: 4px; }
#addr { width: 5em; } #raw { width: 40em; }
#msg { color: #c62828; font-family: monospace; white-space: pre; min-height: 1.2em; }
#panel { border: 1px solid #ccc; min-height: 200px; overflow: auto; margin-top: 1em; }
</style>
</head>
<body>
<div id="bar">
  <input id="addr" value="A1" aria-label="cell">
  <input id="raw" value="=2+3*4" aria-label="formula">
  <button id="enter">Enter</button>
  <button id="show">Select</button>
</div>
<div id="msg"></div>
<div id="panel"></div>
<script>
const NS = "http://www.w3.org/2000/svg";
let session = null;
const $ = (id) => document.getElementById(id);
async function api(method, path, body) {
  const r = await fetch(path, {method, headers: {"Content-Type": "application/json"},
                               body: body === undefined ? undefined : JSON.stringify(body)});
  return {status: r.status, json: await r.json()};
}
function el(name, attrs, text) {
  const e = document.createElementNS(NS, name);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  if (text !== undefined) e.textContent = text;
  return e;
}
const fills = {"normal": "#fff", "error": "#fde4e2", "error-origin": "#f7a9a3",
               "inactive-branch": "#f3f3f3"};
function draw(g) {
  const svg = el("svg", {viewBox: `0 0 ${g.bounds.w} ${g.bounds.h}`,
                         width: g.bounds.w, height: g.bounds.h});
  for (const e of g.edges) {
    const d = e.points.map((p, i) => (i ? "L" : "M") + p[0] + " " + p[1]).join(" ");
    svg.appendChild(el("path", {d, fill: "none", stroke: "#7a7a7a"}));
  }
  for (const n of g.nodes) {
    const grp = el("g", {opacity: n.dimmed ? 0.5 : 1});
    const stroke = n.style.startsWith("error") ? "#c62828" : "#4a4a4a";
    const rx = n.shape === "circle" ? n.w / 2 : n.shape === "capsule" ? n.h / 2 :
               n.shape === "rect" ? 0 : 6;
    grp.appendChild(el("rect", {x: n.x, y: n.y, width: n.w, height: n.h, rx,
                                fill: fills[n.style], stroke}));
    const cx = n.x + n.w / 2, cy = n.y + n.h / 2;
    const lines = n.kind === "literal" ? [[cy, n.value]]
                                       : [[cy - n.h / 4, n.label], [cy + n.h / 4, n.value]];
    for (const [y, t] of lines) {
      grp.appendChild(el("text", {x: cx, y, "text-anchor": "middle",
                                  "dominant-baseline": "central", "font-size": 13}, t));
    }
    svg.appendChild(grp);
  }
  return svg;
}
async function select() {
  const r = await api("POST", `/api/session/${session}/select`, {addr: $("addr").value});
  $("panel").replaceChildren();
  if (r.status !== 200) { $("msg").textContent = r.json.error; return; }
  if (!r.json.blank) $("panel").appendChild(draw(r.json.sceneGraph));
}
$("enter").onclick = async () => {
  const raw = $("raw").value;
  const r = await api("PUT", `/api/session/${session}/cell/${$("addr").value}`, {raw});
  if (r.status === 422) {
    const p = r.json.parseError;
    $("msg").textContent = raw + "\n" + " ".repeat(p.position) + "^ " + p.message;
    return;
  }
  $("msg").textContent = r.status === 200 ? "" : r.json.error;
  await select();
};
$("show").onclick = select;
api("POST", "/api/session").then((r) => { session = r.json.sessionId; });
</script>
</body>
</html>
)html";

bool LocalOrigin(const std::string& origin) {
  static const std::regex kLocal(R"(https?://(localhost|127\.0\.0\.1|\[::1\])(:\d+)?)");
  return std::regex_match(origin, kLocal);
}

void Send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body, "application/json");
}

}  // namespace

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(Service& service, HttpOptions options) : impl_(std::make_unique<Impl>()) {
  httplib::Server& s = impl_->server;

  // The library default adds SO_REUSEPORT, which lets a second server bind a
  // port that is already being served.
  s.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  });

  s.set_pre_routing_handler([](const httplib::Request& req, httplib::Response& res) {
    const std::string origin = req.get_header_value("Origin");
    if (!origin.empty() && LocalOrigin(origin)) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Vary", "Origin");
      res.set_header("Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    }
    if (req.method == "OPTIONS") {
      res.status = 204;
      return httplib::Server::HandlerResponse::Handled;
    }
    return httplib::Server::HandlerResponse::Unhandled;
  });

  s.Get("/api/health", [&service](const httplib::Request&, httplib::Response& res) {
    Send(res, service.Health());
  });
  s.Post("/api/session", [&service](const httplib::Request&, httplib::Response& res) {
    Send(res, service.CreateSession());
  });
  s.Put(R"(/api/session/([^/]+)/cell/([^/]+))",
        [&service](const httplib::Request& req, httplib::Response& res) {
          Send(res, service.PutCell(req.matches[1].str(), req.matches[2].str(), req.body));
        });
  s.Post(R"(/api/session/([^/]+)/select)",
         [&service](const httplib::Request& req, httplib::Response& res) {
           Send(res, service.Select(req.matches[1].str(), req.body));
         });
  s.Get(R"(/api/session/([^/]+)/sheet)",
        [&service](const httplib::Request& req, httplib::Response& res) {
          Send(res, service.GetSheet(req.matches[1].str()));
        });

  if (!options.static_dir.empty()) {
    s.set_mount_point("/", options.static_dir);
  } else {
    s.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(std::string(kIndexPage), "text/html; charset=utf-8");
    });
  }

  s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      res.set_content("{\"error\":\"" + std::string(httplib::status_message(res.status)) + "\"}",
                      "application/json");
    }
  });

  if (options.log) {
    std::ostream* log = options.log;
    s.set_logger([log](const httplib::Request& req, const httplib::Response& res) {
      *log << req.method << ' ' << req.path << ' ' << res.status << '\n' << std::flush;
    });
  }
}

HttpServer::~HttpServer() { Stop(); }

bool HttpServer::Bind(const std::string& host, int port) {
  if (port == 0) {
    port_ = impl_->server.bind_to_any_port(host);
    return port_ > 0;
  }
  if (!impl_->server.bind_to_port(host, port)) return false;
  port_ = port;
  return true;
}

void HttpServer::Run() { impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace equus
