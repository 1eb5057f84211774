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

#pragma once

#include <memory>
#include <string>

#include "pokerlab/service/session.hpp"

namespace pokerlab {

// HTTP front end for a SessionManager. Routes:
//   GET  /health
//   POST /sessions                      create (201)
//   GET  /sessions/{id}?viewer=         state; viewer is the human seat or "observer"
//   GET  /sessions/{id}/summary
//   POST /sessions/{id}/actions         {"seq": n, "action": {...}}
//   POST /sessions/{id}/next-hand
//   POST /sessions/{id}/end
//   GET  /sessions/{id}/events?after=k  server-sent events; stream=0 returns a JSON array
//   GET  /sessions/{id}/hands           JSON lines, once the session has ended
class Server {
 public:
  explicit Server(std::shared_ptr<SessionManager> manager);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Port 0 binds an ephemeral port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool run();
  // run() on a background thread.
  void start();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pokerlab
