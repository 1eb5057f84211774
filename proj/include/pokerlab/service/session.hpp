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

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pokerlab/io/json.hpp"
#include "pokerlab/match/agent.hpp"
#include "pokerlab/match/harness.hpp"

namespace pokerlab {

class Config;

// Error with a stable code and an HTTP status. `detail` is merged into the
// error body (e.g. legal bounds, or the current state after a stale seq).
class ServiceError : public std::runtime_error {
 public:
  ServiceError(std::string code, int status, const std::string& message, Json detail = Json::object())
      : std::runtime_error(message), code(std::move(code)), status(status), detail(std::move(detail)) {}
  Json body() const;

  std::string code;
  int status;
  Json detail;
};

struct ServiceSettings {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string log_dir;  // empty: hand histories are kept in memory only
  std::string agent = "uniform";
  bool endgame = false;
  EndgameConfig endgame_config;
  // Agent decisions slower than this are flagged in the hand log.
  double decision_guard_seconds = 5.0;
  int max_hands = 0;  // per session; 0 = unlimited

  // [service] host, port, log_dir, decision_guard_seconds, max_hands;
  // [agent] strategy, endgame, endgame_buckets, endgame_max_fraction.
  static ServiceSettings from_config(const Config& config);
  // Keys honoured as POKERLAB_<SECTION>_<KEY> environment overrides.
  static std::vector<std::string> env_keys();
};

inline constexpr const char* kProtocolSchema = "pokerlab.protocol/1";

// One table: a human seat (or none, for agent-vs-agent observation) against
// an agent. All methods are serialized on the session's mutex.
class Session {
 public:
  struct Setup {
    std::string id;
    std::string pair_id;
    std::uint64_t seed = 0;
    int human_seat = 0;  // -1 when both seats are agents
    std::shared_ptr<const GameSpec> spec;
    std::array<std::unique_ptr<Agent>, 2> agents;  // null at the human seat
    std::string log_path;                          // empty: not persisted
    double decision_guard_seconds = 5.0;
    int max_hands = 0;
  };

  explicit Session(Setup setup);

  const std::string& id() const { return id_; }
  const std::string& pair_id() const { return pair_id_; }
  int human_seat() const { return human_seat_; }

  // `viewer` is a seat, or -1 for an observer.
  Json view(int viewer) const;
  Json summary() const;
  Json submit(std::uint64_t seq, const Json& action);
  Json next_hand();
  Json end();
  // Messages with seq > after; waits up to `timeout` when none is ready.
  std::vector<Json> events_after(std::uint64_t after,
                                 std::chrono::milliseconds timeout = std::chrono::milliseconds(0)) const;
  std::uint64_t last_seq() const;
  bool ended() const;
  // Completed hands with the agent's diagnostics; only after the session
  // has ended.
  std::vector<HandRecord> hand_log() const;

 private:
  Json view_locked(int viewer) const;
  Json summary_locked() const;
  void emit(const std::string& type, Json payload);
  void start_hand();
  void advance();
  void apply(int seat, const ActionDescriptor& action, DecisionInfo info);
  void finish_hand();
  void forfeit(int seat, const std::string& why);
  int stream_viewer() const { return human_seat_; }

  mutable std::mutex mu_;
  mutable std::condition_variable cv_;
  std::string id_;
  std::string pair_id_;
  std::uint64_t seed_;
  int human_seat_;
  std::shared_ptr<const GameSpec> spec_;
  std::array<std::unique_ptr<Agent>, 2> agents_;
  std::string log_path_;
  double guard_seconds_;
  int max_hands_;

  std::vector<Json> events_;
  std::uint64_t seq_ = 0;
  std::optional<std::uint64_t> pending_request_;
  int hand_index_ = -1;
  Deal deal_;
  std::size_t board_pos_ = 0;
  BettingState state_;
  HandRecord record_;
  bool hand_open_ = false;
  std::vector<HandRecord> completed_;
  bool ended_ = false;
};

class SessionManager {
 public:
  SessionManager(std::shared_ptr<const GameSpec> spec, std::shared_ptr<const Abstraction> abstraction,
                 ServiceSettings settings, AgentContext agent_context = {});

  // Request fields (all optional): human_seat, seed, pair_id, agent,
  // opponent (agent descriptor; makes an observation session), endgame.
  Json create(const Json& request);
  std::shared_ptr<Session> get(const std::string& id) const;
  const ServiceSettings& settings() const { return settings_; }
  const GameSpec& spec() const { return *spec_; }

 private:
  std::unique_ptr<Agent> build_agent(const std::string& descriptor, bool endgame);

  std::shared_ptr<const GameSpec> spec_;
  std::shared_ptr<const Abstraction> abstraction_;
  ServiceSettings settings_;
  AgentContext context_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::map<std::string, std::uint64_t> pair_seeds_;
  std::map<std::string, std::shared_ptr<const StrategyTable>> tables_;
  std::uint64_t next_id_ = 1;
};

}  // namespace pokerlab
