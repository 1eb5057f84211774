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

#include "pokerlab/service/session.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "pokerlab/match/hand_history.hpp"
#include "pokerlab/util/config.hpp"
#include "pokerlab/util/hashing.hpp"

namespace pokerlab {

Json ServiceError::body() const {
  Json j = {{"error", {{"code", code}, {"message", what()}}}};
  for (auto it = detail.begin(); it != detail.end(); ++it) j[it.key()] = it.value();
  return j;
}

ServiceSettings ServiceSettings::from_config(const Config& c) {
  ServiceSettings s;
  s.host = c.get_or("service.host", s.host);
  s.port = static_cast<int>(c.get_int("service.port", s.port));
  s.log_dir = c.get_or("service.log_dir", s.log_dir);
  s.decision_guard_seconds = c.get_double("service.decision_guard_seconds", s.decision_guard_seconds);
  s.max_hands = static_cast<int>(c.get_int("service.max_hands", s.max_hands));
  s.agent = c.get_or("agent.strategy", s.agent);
  s.endgame = c.get_bool("agent.endgame", s.endgame);
  const auto buckets = static_cast<int>(c.get_int("agent.endgame_buckets", s.endgame_config.buckets[0]));
  s.endgame_config.buckets = {buckets, buckets};
  s.endgame_config.max_fraction = c.get_double("agent.endgame_max_fraction", s.endgame_config.max_fraction);
  s.endgame_config.max_sequences =
      static_cast<int>(c.get_int("agent.endgame_max_sequences", s.endgame_config.max_sequences));
  if (s.port < 0 || s.port > 65535) throw std::invalid_argument("service.port out of range");
  return s;
}

std::vector<std::string> ServiceSettings::env_keys() {
  return {"service.host", "service.port", "service.log_dir", "agent.strategy", "abstraction.bucket_file"};
}

// ---- Session ----

Session::Session(Setup s)
    : id_(std::move(s.id)),
      pair_id_(std::move(s.pair_id)),
      seed_(s.seed),
      human_seat_(s.human_seat),
      spec_(std::move(s.spec)),
      agents_(std::move(s.agents)),
      log_path_(std::move(s.log_path)),
      guard_seconds_(s.decision_guard_seconds),
      max_hands_(s.max_hands) {
  for (int seat = 0; seat < 2; ++seat) {
    if ((seat == human_seat_) != (agents_[seat] == nullptr)) {
      throw std::invalid_argument("exactly the non-human seats need agents");
    }
  }
  std::lock_guard lock(mu_);
  start_hand();
}

void Session::emit(const std::string& type, Json payload) {
  ++seq_;
  events_.push_back({{"type", type}, {"seq", seq_}, {"session", id_}, {"payload", std::move(payload)}});
  cv_.notify_all();
}

Json Session::view_locked(int viewer) const {
  const bool complete = !hand_open_;
  const bool showdown = complete && !record_.forfeit_seat && state_.is_terminal() &&
                        state_.outcome()->reason == TerminalReason::kShowdown;
  Json v;
  v["session"] = id_;
  v["hand"] = hand_index_;
  v["pair_id"] = pair_id_.empty() ? Json(nullptr) : Json(pair_id_);
  v["human_seat"] = human_seat_ >= 0 ? Json(human_seat_) : Json(nullptr);
  v["viewer"] = viewer >= 0 ? Json(viewer) : Json(nullptr);
  v["blinds"] = {spec_->small_blind, spec_->big_blind};
  v["starting_stack"] = spec_->starting_stack;
  v["status"] = complete ? "complete" : (state_.is_chance() ? "dealing" : "decision");
  v["round"] = state_.round();
  v["board"] = cards_to_json(state_.board());
  v["pot"] = state_.pot_total();
  v["stacks"] = {state_.stack(0), state_.stack(1)};
  v["committed"] = {state_.total_committed(0), state_.total_committed(1)};
  v["history"] = state_.history_string();
  v["to_act"] = !complete && state_.status() == NodeStatus::kDecision ? Json(state_.to_act()) : Json(nullptr);
  Json hole = Json::array();
  for (int s = 0; s < 2; ++s) {
    hole.push_back(s == viewer || showdown ? cards_to_json(state_.hole(s)) : Json(nullptr));
  }
  v["hole"] = hole;
  v["showdown"] = showdown;
  if (!complete && viewer >= 0 && state_.status() == NodeStatus::kDecision && state_.to_act() == viewer) {
    v["legal"] = legal_to_json(legal_actions(state_));
    if (viewer == human_seat_ && pending_request_) v["request_seq"] = *pending_request_;
  }
  if (complete) {
    v["result"] = record_.result;
    if (record_.forfeit_seat) v["forfeit_seat"] = *record_.forfeit_seat;
  }
  return v;
}

Json Session::view(int viewer) const {
  std::lock_guard lock(mu_);
  return view_locked(viewer);
}

void Session::start_hand() {
  ++hand_index_;
  const std::uint64_t hand_seed = derive_seed(seed_, static_cast<std::uint64_t>(hand_index_));
  deal_ = make_deal(*spec_, derive_seed(hand_seed, 0));
  board_pos_ = 0;
  state_ = BettingState::deal_hand(spec_, deal_.hole[0], deal_.hole[1]);
  record_ = HandRecord{};
  record_.hand_id = static_cast<std::uint64_t>(hand_index_);
  record_.deal = deal_;
  const int side_a = human_seat_ >= 0 ? human_seat_ : 0;
  record_.side_at_seat = side_a == 0 ? std::array<int, 2>{0, 1} : std::array<int, 2>{1, 0};
  for (int s = 0; s < 2; ++s) record_.agent_at_seat[s] = agents_[s] ? agents_[s]->name() : "human";
  hand_open_ = true;
  pending_request_.reset();
  for (int s = 0; s < 2; ++s) {
    if (!agents_[s]) continue;
    try {
      agents_[s]->begin_hand(state_.redacted_for(s), s, derive_seed(hand_seed, static_cast<std::uint64_t>(1 + s)));
    } catch (const std::exception& e) {
      emit("state", view_locked(stream_viewer()));
      forfeit(s, std::string("agent error: ") + e.what());
      return;
    }
  }
  emit("state", view_locked(stream_viewer()));
  advance();
}

void Session::apply(int seat, const ActionDescriptor& action, DecisionInfo info) {
  record_.decisions.push_back({seat, state_.round(), state_.history_string(), action, std::move(info)});
  for (int s = 0; s < 2; ++s) {
    if (!agents_[s]) continue;
    try {
      agents_[s]->observe(state_.redacted_for(s), action);
    } catch (const std::exception& e) {
      forfeit(s, std::string("agent error: ") + e.what());
      return;
    }
  }
  state_ = apply_action(state_, action);
  emit("action", {{"seat", seat},
                  {"action", action_to_json(action)},
                  {"history", state_.history_string()},
                  {"pot", state_.pot_total()}});
}

void Session::advance() {
  while (hand_open_) {
    if (state_.is_terminal()) {
      finish_hand();
      return;
    }
    if (state_.is_chance()) {
      const auto n = static_cast<std::size_t>(state_.pending_deal_size());
      const std::vector<Card> cards(deal_.board.begin() + static_cast<long>(board_pos_),
                                    deal_.board.begin() + static_cast<long>(board_pos_ + n));
      board_pos_ += n;
      state_ = deal_cards(state_, cards);
      emit("state", view_locked(stream_viewer()));
      continue;
    }
    const int s = state_.to_act();
    if (!agents_[s]) {
      emit("action-request", {{"seat", s},
                              {"legal", legal_to_json(legal_actions(state_))},
                              {"pot", state_.pot_total()},
                              {"history", state_.history_string()}});
      pending_request_ = seq_;
      return;
    }
    Decision d;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      d = agents_[s]->act(state_.redacted_for(s));
    } catch (const std::exception& e) {
      forfeit(s, std::string("agent error: ") + e.what());
      return;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > guard_seconds_) {
      d.info.flagged = true;
      std::ostringstream note;
      note << "decision took " << secs << " s";
      d.info.note = d.info.note.empty() ? note.str() : d.info.note + "; " + note.str();
    }
    if (!legal_actions(state_).allows(d.action)) {
      forfeit(s, "illegal action " + to_string(d.action));
      return;
    }
    apply(s, d.action, std::move(d.info));
  }
}

void Session::forfeit(int seat, const std::string& why) {
  record_.forfeit_seat = seat;
  record_.forfeit_reason = why;
  const Chips lost = state_.total_committed(seat);
  record_.result[seat] = -lost;
  record_.result[1 - seat] = lost;
  finish_hand();
}

void Session::finish_hand() {
  if (!record_.forfeit_seat) {
    record_.result[0] = state_.outcome()->payoff;
    record_.result[1] = -record_.result[0];
  }
  record_.actions = state_.history();
  record_.history = state_.history_string();
  record_.board_shown = state_.board();
  hand_open_ = false;
  pending_request_.reset();
  completed_.push_back(record_);
  if (!log_path_.empty()) {
    std::ofstream out(log_path_, std::ios::app);
    out << hand_to_json(record_).dump() << '\n';
  }
  const Json v = view_locked(stream_viewer());
  Json payload = {{"hand", hand_index_},
                  {"result", record_.result},
                  {"showdown", v["showdown"]},
                  {"hole", v["hole"]},
                  {"board", cards_to_json(state_.board())},
                  {"history", record_.history}};
  if (record_.forfeit_seat) {
    payload["forfeit"] = {{"seat", *record_.forfeit_seat}, {"reason", record_.forfeit_reason}};
  }
  emit("hand-result", std::move(payload));
  emit("state", v);
  if (max_hands_ > 0 && hand_index_ + 1 >= max_hands_) {
    ended_ = true;
    emit("session-summary", summary_locked());
  }
}

Json Session::summary_locked() const {
  const int side = human_seat_ >= 0 ? human_seat_ : 0;
  Chips total = 0;
  int forfeits = 0;
  for (const auto& h : completed_) {
    total += h.result[static_cast<std::size_t>(side)];
    forfeits += h.forfeit_seat.has_value();
  }
  Json s = {{"session", id_},
            {"pair_id", pair_id_.empty() ? Json(nullptr) : Json(pair_id_)},
            {"hands", completed_.size()},
            {"seat", side},
            {"total", total},
            {"forfeits", forfeits},
            {"ended", ended_}};
  s["bb_per_100"] = completed_.empty()
                        ? Json(nullptr)
                        : Json(bb_per_100(static_cast<double>(total), static_cast<long long>(completed_.size()),
                                          static_cast<double>(spec_->big_blind)));
  return s;
}

Json Session::summary() const {
  std::lock_guard lock(mu_);
  return summary_locked();
}

Json Session::submit(std::uint64_t seq, const Json& action_json) {
  std::lock_guard lock(mu_);
  const auto state_detail = [&] { return Json{{"state", view_locked(human_seat_)}}; };
  if (ended_) throw ServiceError("session_ended", 409, "session has ended", state_detail());
  if (human_seat_ < 0) throw ServiceError("not_your_turn", 409, "observation sessions take no actions");
  if (!hand_open_) throw ServiceError("hand_over", 409, "hand is complete; request the next hand", state_detail());
  if (state_.status() != NodeStatus::kDecision || state_.to_act() != human_seat_) {
    throw ServiceError("not_your_turn", 409, "it is not your turn", state_detail());
  }
  if (!pending_request_ || seq != *pending_request_) {
    Json d = state_detail();
    d["expected_seq"] = pending_request_ ? Json(*pending_request_) : Json(nullptr);
    throw ServiceError("stale_seq", 409, "sequence number does not match the pending request", d);
  }
  ActionDescriptor action;
  try {
    action = action_from_json(action_json);
  } catch (const std::exception& e) {
    throw ServiceError("bad_request", 400, std::string("malformed action: ") + e.what());
  }
  const LegalActions legal = legal_actions(state_);
  if (!legal.allows(action)) {
    Json d = state_detail();
    d["legal"] = legal_to_json(legal);
    std::string msg = "illegal action " + to_string(action);
    if (action.kind == ActionKind::kRaise && legal.raise) {
      msg += "; raise-to must be in [" + std::to_string(legal.raise->min_to) + ", " +
             std::to_string(legal.raise->max_to) + "]";
    }
    throw ServiceError("illegal_action", 422, msg, d);
  }
  pending_request_.reset();
  DecisionInfo info;
  info.source = "human";
  info.true_pot = state_.pot_total();
  info.perceived_pot = state_.pot_total();
  apply(human_seat_, action, std::move(info));
  advance();
  return {{"accepted", true}, {"seq", seq_}, {"state", view_locked(human_seat_)}};
}

Json Session::next_hand() {
  std::lock_guard lock(mu_);
  if (ended_) throw ServiceError("session_ended", 409, "session has ended");
  if (hand_open_) throw ServiceError("hand_in_progress", 409, "the current hand is not complete");
  start_hand();
  return view_locked(human_seat_ >= 0 ? human_seat_ : -1);
}

Json Session::end() {
  std::lock_guard lock(mu_);
  if (!ended_) {
    ended_ = true;
    hand_open_ = false;  // an unfinished hand is abandoned and not logged
    pending_request_.reset();
    emit("session-summary", summary_locked());
  }
  return summary_locked();
}

std::vector<Json> Session::events_after(std::uint64_t after, std::chrono::milliseconds timeout) const {
  std::unique_lock lock(mu_);
  if (timeout.count() > 0) {
    cv_.wait_for(lock, timeout, [&] { return seq_ > after || ended_; });
  }
  std::vector<Json> out;
  for (std::uint64_t s = after; s < seq_; ++s) out.push_back(events_[static_cast<std::size_t>(s)]);
  return out;
}

std::uint64_t Session::last_seq() const {
  std::lock_guard lock(mu_);
  return seq_;
}

bool Session::ended() const {
  std::lock_guard lock(mu_);
  return ended_;
}

std::vector<HandRecord> Session::hand_log() const {
  std::lock_guard lock(mu_);
  if (!ended_) throw ServiceError("not_available", 409, "the hand log is available after the session ends");
  return completed_;
}

// ---- SessionManager ----

SessionManager::SessionManager(std::shared_ptr<const GameSpec> spec,
                               std::shared_ptr<const Abstraction> abstraction,
                               ServiceSettings settings, AgentContext agent_context)
    : spec_(std::move(spec)),
      abstraction_(std::move(abstraction)),
      settings_(std::move(settings)),
      context_(std::move(agent_context)) {
  context_.spec = spec_;
  context_.abstraction = abstraction_;
  context_.load_table = [this](const std::string& path) {
    auto it = tables_.find(path);
    if (it != tables_.end()) return it->second;
    auto t = std::make_shared<const StrategyTable>(StrategyTable::load_file(path));
    tables_[path] = t;
    return t;
  };
}

std::unique_ptr<Agent> SessionManager::build_agent(const std::string& descriptor, bool endgame) {
  AgentContext ctx = context_;
  ctx.endgame = endgame;
  ctx.endgame_config = settings_.endgame_config;
  try {
    return make_agent(descriptor, ctx);
  } catch (const std::invalid_argument& e) {
    throw ServiceError("agent_config", 422, e.what());
  }
}

namespace {

template <class T>
std::optional<T> field(const Json& j, const char* name) {
  if (!j.contains(name) || j.at(name).is_null()) return std::nullopt;
  try {
    return j.at(name).get<T>();
  } catch (const Json::exception&) {
    throw ServiceError("bad_request", 400, std::string("field '") + name + "' has the wrong type");
  }
}

}  // namespace

Json SessionManager::create(const Json& request) {
  if (!request.is_object()) throw ServiceError("bad_request", 400, "request body must be a JSON object");
  auto seat = field<int>(request, "human_seat");
  auto seed = field<std::uint64_t>(request, "seed");
  const auto pair_id = field<std::string>(request, "pair_id").value_or("");
  const auto agent = field<std::string>(request, "agent").value_or(settings_.agent);
  const auto opponent = field<std::string>(request, "opponent");
  const bool endgame = field<bool>(request, "endgame").value_or(settings_.endgame);
  if (seat && *seat != 0 && *seat != 1) throw ServiceError("bad_request", 400, "human_seat must be 0 or 1");

  std::lock_guard lock(mu_);
  if (!pair_id.empty()) {
    auto it = pair_seeds_.find(pair_id);
    if (it != pair_seeds_.end()) {
      if (seed && *seed != it->second) {
        throw ServiceError("bad_request", 400, "pair '" + pair_id + "' already uses another seed");
      }
      seed = it->second;
      if (!seat && !opponent) {
        // The second table of a pair takes the other seat by default.
        for (const auto& [id, s] : sessions_) {
          if (s->pair_id() == pair_id && s->human_seat() >= 0) seat = 1 - s->human_seat();
        }
      }
    }
  }
  if (!seed) seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();

  Session::Setup setup;
  setup.id = "s" + std::to_string(next_id_);
  setup.pair_id = pair_id;
  setup.seed = *seed;
  setup.spec = spec_;
  setup.decision_guard_seconds = settings_.decision_guard_seconds;
  setup.max_hands = settings_.max_hands;
  if (opponent) {
    setup.human_seat = -1;
    setup.agents[0] = build_agent(agent, endgame);
    setup.agents[1] = build_agent(*opponent, endgame);
  } else {
    setup.human_seat = seat.value_or(0);
    setup.agents[static_cast<std::size_t>(1 - setup.human_seat)] = build_agent(agent, endgame);
  }
  if (!settings_.log_dir.empty()) setup.log_path = settings_.log_dir + "/" + setup.id + ".jsonl";
  ++next_id_;
  const int human = setup.human_seat;
  auto session = std::make_shared<Session>(std::move(setup));
  sessions_[session->id()] = session;
  if (!pair_id.empty()) pair_seeds_.emplace(pair_id, *seed);
  return {{"session", session->id()},
          {"pair_id", pair_id.empty() ? Json(nullptr) : Json(pair_id)},
          {"human_seat", human >= 0 ? Json(human) : Json(nullptr)},
          {"seq", session->last_seq()},
          {"state", session->view(human)}};
}

std::shared_ptr<Session> SessionManager::get(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError("not_found", 404, "unknown session '" + id + "'");
  return it->second;
}

}  // namespace pokerlab
