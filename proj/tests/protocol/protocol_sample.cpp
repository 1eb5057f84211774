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

// Drives a live server through the protocol and prints every document it
// received, grouped by schema definition, as one JSON object.

#include <httplib.h>

#include <iostream>

#include "pokerlab/service/server.hpp"

using pokerlab::Json;

namespace {

Json out = {{"message", Json::array()},        {"view", Json::array()},
            {"error", Json::array()},          {"create_response", Json::array()},
            {"submit_response", Json::array()}, {"summary", Json::array()},
            {"hand_record", Json::array()}};

Json call(httplib::Client& c, const std::string& method, const std::string& path, const Json& body,
          const std::string& kind) {
  auto r = method == "GET" ? c.Get(path) : c.Post(path, body.dump(), "application/json");
  if (!r) throw std::runtime_error("request failed: " + path);
  const Json j = Json::parse(r->body);
  out[r->status >= 400 ? "error" : kind].push_back(j);
  return j;
}

std::vector<Json> sse(httplib::Client& c, const std::string& path) {
  std::string buffer;
  std::vector<Json> msgs;
  c.Get(path, [&](const char* data, std::size_t n) {
    buffer.append(data, n);
    for (std::size_t end; (end = buffer.find("\n\n")) != std::string::npos;) {
      const std::string frame = buffer.substr(0, end);
      buffer.erase(0, end + 2);
      msgs.push_back(Json::parse(frame.substr(frame.find("data: ") + 6)));
    }
    return true;
  });
  return msgs;
}

}  // namespace

int main() {
  using namespace pokerlab;
  auto spec = std::make_shared<const GameSpec>(river_nlhe_spec());
  auto abs = std::make_shared<const Abstraction>(make_abstraction(
      *spec, build_action_grid(*spec, GridConfig{}), std::make_shared<LosslessCardAbstraction>(*spec)));
  Server server(std::make_shared<SessionManager>(spec, abs, ServiceSettings{}));
  const int port = server.bind("127.0.0.1", 0);
  server.start();
  httplib::Client c("127.0.0.1", port);

  const Json created = call(c, "POST", "/sessions", {{"human_seat", 0}, {"seed", 42}, {"pair_id", "demo"}}, "create_response");
  const std::string id = created["session"];
  const std::string base = "/sessions/" + id;
  call(c, "POST", "/sessions", {{"agent", "cfr:/missing.tbl"}}, "create_response");
  call(c, "POST", "/sessions", {{"pair_id", "demo"}, {"agent", "call"}}, "create_response");
  call(c, "POST", "/sessions", {{"agent", "uniform"}, {"opponent", "call"}, {"seed", 1}}, "create_response");

  Json view = call(c, "GET", base, {}, "view");
  call(c, "POST", base + "/actions", {{"seq", 1}, {"action", {{"kind", "call"}}}}, "submit_response");
  call(c, "POST", base + "/actions",
       {{"seq", view["request_seq"]}, {"action", {{"kind", "raise"}, {"to", 120}}}}, "submit_response");
  for (int hand = 0; hand < 12; ++hand) {
    int n = 0;
    while (view["status"] != "complete") {
      const Json& legal = view["legal"];
      Json a = {{"kind", legal["check"].get<bool>() ? "check" : "call"}};
      if (n++ == 0 && hand % 3 == 1 && !legal["raise"].is_null()) a = {{"kind", "raise"}, {"to", legal["raise"]["min_to"]}};
      if (hand % 4 == 3) a = {{"kind", "fold"}};
      view = call(c, "POST", base + "/actions", {{"seq", view["request_seq"]}, {"action", a}}, "submit_response")["state"];
    }
    call(c, "POST", base + "/actions", {{"seq", 1}, {"action", {{"kind", "call"}}}}, "submit_response");
    view = call(c, "POST", base + "/next-hand", {}, "view");
  }
  call(c, "GET", base + "/hands", {}, "hand_record");
  call(c, "GET", base + "/summary", {}, "summary");
  call(c, "POST", base + "/end", {}, "summary");
  call(c, "GET", base + "?viewer=1", {}, "view");
  for (const auto& m : sse(c, base + "/events?after=0")) out["message"].push_back(m);
  for (const auto& m : sse(c, "/sessions/unknown/events")) out["message"].push_back(m);

  auto r = c.Get(base + "/hands");
  std::istringstream lines(r->body);
  for (std::string line; std::getline(lines, line);) out["hand_record"].push_back(Json::parse(line));
  server.stop();
  std::cout << out.dump() << '\n';
  return 0;
}
