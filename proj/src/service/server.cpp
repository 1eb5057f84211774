// Copyright 2026 The pokerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pokerlab/service/server.hpp"

#include <httplib.h>

#include <atomic>
#include <sstream>
#include <thread>

#include "pokerlab/match/hand_history.hpp"

namespace pokerlab {

namespace {

void send_json(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

Json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    return Json::parse(req.body);
  } catch (const Json::exception& e) {
    throw ServiceError("bad_request", 400, std::string("body is not valid JSON: ") + e.what());
  }
}

std::uint64_t query_u64(const httplib::Request& req, const char* name, std::uint64_t fallback) {
  if (!req.has_param(name)) return fallback;
  const std::string v = req.get_param_value(name);
  try {
    std::size_t used = 0;
    const auto n = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ServiceError("bad_request", 400, std::string("query parameter '") + name + "' must be a number");
  }
}

std::string sse_frame(const Json& message) {
  std::ostringstream out;
  out << "id: " << message.at("seq").get<std::uint64_t>() << "\nevent: " << message.at("type").get<std::string>()
      << "\ndata: " << message.dump() << "\n\n";
  return out.str();
}

int resolve_viewer(const Session& s, const httplib::Request& req) {
  if (!req.has_param("viewer")) return s.human_seat();
  const std::string v = req.get_param_value("viewer");
  if (v == "observer") return -1;
  if (v == "0" || v == "1") {
    const int seat = v[0] - '0';
    if (s.human_seat() >= 0 && seat != s.human_seat()) {
      throw ServiceError("forbidden", 403, "only the human seat's view is available");
    }
    return seat;
  }
  throw ServiceError("bad_request", 400, "viewer must be 0, 1 or observer");
}

}  // namespace

struct Server::Impl {
  std::shared_ptr<SessionManager> manager;
  httplib::Server http;
  std::thread thread;
  std::atomic<bool> stopping{false};

  template <class F>
  void guarded(httplib::Response& res, F&& f) {
    try {
      f();
    } catch (const ServiceError& e) {
      send_json(res, e.status, e.body());
    } catch (const std::exception& e) {
      send_json(res, 500, ServiceError("internal", 500, e.what()).body());
    }
  }

  void routes() {
    http.Get("/health", [](const httplib::Request&, httplib::Response& res) {
      send_json(res, 200, {{"status", "ok"}, {"schema", kProtocolSchema}});
    });

    http.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { send_json(res, 201, manager->create(parse_body(req))); });
    });

    http.Get(R"(/sessions/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        auto s = manager->get(req.matches[1]);
        send_json(res, 200, s->view(resolve_viewer(*s, req)));
      });
    });

    http.Get(R"(/sessions/([^/]+)/summary)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { send_json(res, 200, manager->get(req.matches[1])->summary()); });
    });

    http.Post(R"(/sessions/([^/]+)/actions)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        auto s = manager->get(req.matches[1]);
        const Json body = parse_body(req);
        if (!body.contains("seq") || !body["seq"].is_number_unsigned() || !body.contains("action")) {
          throw ServiceError("bad_request", 400, "expected {\"seq\": n, \"action\": {...}}");
        }
        send_json(res, 200, s->submit(body["seq"].get<std::uint64_t>(), body["action"]));
      });
    });

    http.Post(R"(/sessions/([^/]+)/next-hand)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { send_json(res, 200, manager->get(req.matches[1])->next_hand()); });
    });

    http.Post(R"(/sessions/([^/]+)/end)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { send_json(res, 200, manager->get(req.matches[1])->end()); });
    });

    http.Get(R"(/sessions/([^/]+)/hands)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        std::ostringstream out;
        for (const auto& h : manager->get(req.matches[1])->hand_log()) out << hand_to_json(h).dump() << '\n';
        res.status = 200;
        res.set_content(out.str(), "application/x-ndjson");
      });
    });

    http.Get(R"(/sessions/([^/]+)/events)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { events(req, res); });
    });
  }

  void events(const httplib::Request& req, httplib::Response& res) {
    const std::uint64_t after = query_u64(req, "after", 0);
    const auto timeout = std::chrono::milliseconds(query_u64(req, "timeout_ms", 0));
    const bool stream = !req.has_param("stream") || req.get_param_value("stream") != "0";
    std::shared_ptr<Session> session;
    try {
      session = manager->get(req.matches[1]);
    } catch (const ServiceError& e) {
      if (!stream) throw;
      // Stream clients get a single error event and a closed stream.
      Json msg = {{"type", "error"}, {"seq", 0}, {"session", req.matches[1].str()}, {"payload", e.body()}};
      res.status = e.status;
      res.set_content(sse_frame(msg), "text/event-stream");
      return;
    }
    if (!stream) {
      send_json(res, 200, session->events_after(after, timeout));
      return;
    }
    res.set_header("Cache-Control", "no-cache");
    auto last = std::make_shared<std::uint64_t>(after);
    auto idle_since = std::make_shared<std::chrono::steady_clock::time_point>(std::chrono::steady_clock::now());
    res.set_chunked_content_provider(
        "text/event-stream", [this, session, last, idle_since, timeout](std::size_t, httplib::DataSink& sink) {
          if (stopping) return false;
          const auto batch = session->events_after(*last, std::chrono::milliseconds(200));
          for (const auto& m : batch) {
            const std::string frame = sse_frame(m);
            if (!sink.write(frame.data(), frame.size())) return false;
            *last = m.at("seq").get<std::uint64_t>();
          }
          const auto now = std::chrono::steady_clock::now();
          if (!batch.empty()) *idle_since = now;
          const bool idle = timeout.count() > 0 && now - *idle_since >= timeout;
          if ((batch.empty() && session->ended() && *last >= session->last_seq()) || idle) sink.done();
          return true;
        });
  }
};

Server::Server(std::shared_ptr<SessionManager> manager) : impl_(std::make_unique<Impl>()) {
  impl_->manager = std::move(manager);
  impl_->routes();
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

bool Server::run() { return impl_->http.listen_after_bind(); }

void Server::start() {
  impl_->thread = std::thread([this] { impl_->http.listen_after_bind(); });
  impl_->http.wait_until_ready();
}

void Server::stop() {
  impl_->stopping = true;
  impl_->http.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace pokerlab
