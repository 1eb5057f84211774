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

#include <gtest/gtest.h>
#include <httplib.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "pokerlab/abstraction/bucketing.hpp"
#include "pokerlab/match/hand_history.hpp"
#include "pokerlab/service/server.hpp"
#include "pokerlab/service/session.hpp"
#include "pokerlab/util/config.hpp"

namespace pokerlab {
namespace {

struct Fixture {
  std::shared_ptr<const GameSpec> spec;
  std::shared_ptr<const Abstraction> abs;
};

Fixture holdem() {
  auto spec = std::make_shared<const GameSpec>(river_nlhe_spec());
  auto abs = std::make_shared<const Abstraction>(make_abstraction(
      *spec, build_action_grid(*spec, GridConfig{}), std::make_shared<LosslessCardAbstraction>(*spec)));
  return {spec, abs};
}

std::shared_ptr<SessionManager> manager(const Fixture& f, ServiceSettings settings = {}) {
  return std::make_shared<SessionManager>(f.spec, f.abs, settings);
}

Json act(const std::string& kind, Chips to = 0) {
  Json j = {{"kind", kind}};
  if (kind == "raise") j["to"] = to;
  return j;
}

std::uint64_t pending_seq(const Json& view) { return view.at("request_seq").get<std::uint64_t>(); }

template <class F>
ServiceError expect_error(F&& f) {
  try {
    f();
  } catch (const ServiceError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a ServiceError";
  return ServiceError("none", 0, "none");
}

// Plays the human seat with check/call until the hand is over.
void play_passive(Session& s) {
  for (int guard = 0; guard < 100; ++guard) {
    const Json v = s.view(s.human_seat());
    if (v["status"] == "complete") return;
    const Json legal = v.at("legal");
    s.submit(pending_seq(v), act(legal["check"].get<bool>() ? "check" : "call"));
  }
  FAIL() << "hand did not finish";
}

std::vector<std::string> card_tokens(const std::vector<Card>& cards) {
  std::vector<std::string> out;
  for (Card c : cards) out.push_back(to_string(c));
  return out;
}

// Every string in `j` except history strings.
void collect_strings(const Json& j, std::vector<std::string>& out, const std::string& key = "") {
  if (j.is_string() && key != "history") out.push_back(j.get<std::string>());
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) collect_strings(it.value(), out, it.key());
  }
  if (j.is_array()) {
    for (const auto& x : j) collect_strings(x, out, key);
  }
}

TEST(ServiceSessionTest, CreateShowsBlindsAndStacks) {
  auto m = manager(holdem());
  const Json r = m->create({{"human_seat", 0}, {"seed", 11}});
  const Json& st = r["state"];
  EXPECT_EQ(st["blinds"], Json({50, 100}));
  EXPECT_EQ(st["starting_stack"], 20000);
  EXPECT_EQ(st["committed"], Json({50, 100}));
  EXPECT_EQ(st["stacks"], Json({19950, 19900}));
  EXPECT_EQ(st["pot"], 150);
  EXPECT_EQ(st["to_act"], 0);
  EXPECT_TRUE(st["hole"][0].is_string());
  EXPECT_TRUE(st["hole"][1].is_null());
  EXPECT_EQ(st["legal"]["raise"]["min_to"], 200);
}

TEST(ServiceSessionTest, MissingArtifactIsNamed) {
  auto m = manager(holdem());
  const auto e = expect_error([&] { m->create({{"agent", "cfr:/nonexistent/trunk.tbl"}}); });
  EXPECT_EQ(e.code, "agent_config");
  EXPECT_EQ(e.status, 422);
  EXPECT_NE(std::string(e.what()).find("/nonexistent/trunk.tbl"), std::string::npos);
  EXPECT_EQ(e.body()["error"]["code"], "agent_config");
}

TEST(ServiceSessionTest, UnknownSessionIsNotFound) {
  auto m = manager(holdem());
  EXPECT_EQ(expect_error([&] { m->get("nope"); }).status, 404);
}

TEST(ServiceSessionTest, DuplicatePairSharesDealsWithSeatsSwapped) {
  auto m = manager(holdem());
  const Json a = m->create({{"pair_id", "p1"}, {"human_seat", 0}, {"seed", 5}, {"agent", "call"}});
  const Json b = m->create({{"pair_id", "p1"}, {"agent", "call"}});
  EXPECT_EQ(a["pair_id"], "p1");
  EXPECT_EQ(b["pair_id"], "p1");
  EXPECT_EQ(b["human_seat"], 1);
  auto sa = m->get(a["session"]);
  auto sb = m->get(b["session"]);
  play_passive(*sa);
  play_passive(*sb);
  sa->end();
  sb->end();
  const auto la = sa->hand_log();
  const auto lb = sb->hand_log();
  ASSERT_EQ(la.size(), 1u);
  ASSERT_EQ(lb.size(), 1u);
  EXPECT_EQ(la[0].deal, lb[0].deal);
  EXPECT_EQ(la[0].side_at_seat[0], lb[0].side_at_seat[1]);
  EXPECT_EQ(expect_error([&] { m->create({{"pair_id", "p1"}, {"seed", 6}}); }).code, "bad_request");
}

TEST(ServiceSessionTest, BelowMinimumRaiseRejectedWithInterval) {
  auto m = manager(holdem());
  auto s = m->get(m->create({{"human_seat", 0}, {"seed", 3}})["session"]);
  const Json before = s->view(0);
  const auto e = expect_error([&] { s->submit(pending_seq(before), act("raise", 150)); });
  EXPECT_EQ(e.code, "illegal_action");
  EXPECT_EQ(e.status, 422);
  EXPECT_EQ(e.detail["legal"]["raise"]["min_to"], 200);
  EXPECT_EQ(e.detail["legal"]["raise"]["max_to"], 20000);
  EXPECT_EQ(s->view(0), before);
}

TEST(ServiceSessionTest, StaleSeqRejectedAndStateResent) {
  auto m = manager(holdem());
  auto s = m->get(m->create({{"human_seat", 0}, {"seed", 3}})["session"]);
  const Json before = s->view(0);
  const std::uint64_t last = s->last_seq();
  const auto e = expect_error([&] { s->submit(pending_seq(before) - 1, act("call")); });
  EXPECT_EQ(e.code, "stale_seq");
  EXPECT_EQ(e.status, 409);
  EXPECT_EQ(e.detail["state"], before);
  EXPECT_EQ(e.detail["expected_seq"], pending_seq(before));
  EXPECT_EQ(s->last_seq(), last);
}

TEST(ServiceSessionTest, OutOfTurnRejectedStateUnchanged) {
  auto m = manager(holdem());
  auto s = m->get(m->create({{"human_seat", 0}, {"seed", 3}})["session"]);
  const std::uint64_t req = pending_seq(s->view(0));
  s->submit(req, act("fold"));
  const Json after = s->view(0);
  EXPECT_EQ(after["status"], "complete");
  EXPECT_EQ(expect_error([&] { s->submit(req, act("call")); }).code, "hand_over");
  EXPECT_EQ(s->view(0), after);

  auto obs = m->get(m->create({{"agent", "call"}, {"opponent", "call"}, {"seed", 3}})["session"]);
  EXPECT_EQ(expect_error([&] { obs->submit(1, act("call")); }).code, "not_your_turn");
  EXPECT_EQ(obs->view(-1)["status"], "complete");
}

TEST(ServiceSessionTest, FoldKeepsAgentCardsHidden) {
  auto m = manager(holdem());
  auto s = m->get(m->create({{"human_seat", 1}, {"seed", 21}, {"agent", "allin"}})["session"]);
  const Json mid = s->view(1);
  EXPECT_EQ(mid["status"], "decision");
  EXPECT_TRUE(mid["hole"][0].is_null());
  s->submit(pending_seq(mid), act("fold"));
  const Json done = s->view(1);
  EXPECT_EQ(done["status"], "complete");
  EXPECT_FALSE(done["showdown"].get<bool>());
  EXPECT_TRUE(done["hole"][0].is_null());
  EXPECT_EQ(done["result"], Json({100, -100}));
  s->next_hand();
  EXPECT_TRUE(s->view(1)["hole"][0].is_null());
}

TEST(ServiceSessionTest, ShowdownRevealsBothHands) {
  auto m = manager(holdem());
  auto s = m->get(m->create({{"human_seat", 0}, {"seed", 2}, {"agent", "call"}})["session"]);
  play_passive(*s);
  const Json v = s->view(0);
  EXPECT_TRUE(v["showdown"].get<bool>());
  EXPECT_TRUE(v["hole"][0].is_string());
  EXPECT_TRUE(v["hole"][1].is_string());
  const auto events = s->events_after(0);
  int results = 0;
  for (const auto& e : events) {
    if (e["type"] != "hand-result") continue;
    ++results;
    EXPECT_TRUE(e["payload"]["hole"][1].is_string());
  }
  EXPECT_EQ(results, 1);
}

// Many hands against a random agent; nothing serialized before a showdown
// may carry one of the agent's cards.
TEST(ServiceSessionTest, TranscriptNeverLeaksAgentCards) {
  auto m = manager(holdem());
  auto s = m->get(m->create({{"human_seat", 0}, {"seed", 99}})["session"]);
  Rng rng(7);
  std::vector<Json> views;
  for (int hand = 0; hand < 40; ++hand) {
    for (int guard = 0; guard < 100; ++guard) {
      const Json v = s->view(0);
      views.push_back(v);
      if (v["status"] == "complete") break;
      const Json legal = v["legal"];
      const auto r = rng.below(10);
      Json a = r == 0 && legal["fold"].get<bool>() ? act("fold")
               : r < 3 && !legal["raise"].is_null()
                   ? act("raise", legal["raise"]["min_to"].get<Chips>())
                   : act(legal["check"].get<bool>() ? "check" : "call");
      s->submit(pending_seq(v), a);
    }
    s->next_hand();
  }
  const auto transcript = s->events_after(0);
  s->end();
  const auto log = s->hand_log();
  ASSERT_EQ(log.size(), 40u);
  int hands_scanned = 0, showdowns = 0, folds = 0;
  int hand = -1;
  auto check = [&](const Json& msg) {
    if (hand < 0 || hand >= static_cast<int>(log.size())) return;
    std::vector<std::string> strings;
    collect_strings(msg, strings);
    for (const auto& token : card_tokens(log[static_cast<std::size_t>(hand)].deal.hole[1])) {
      for (const auto& str : strings) {
        ASSERT_EQ(str.find(token), std::string::npos) << "hand " << hand << ": " << msg.dump();
      }
    }
  };
  for (const auto& e : transcript) {
    const Json& p = e["payload"];
    if (e["type"] == "state" && p["status"] != "complete") hand = p["hand"].get<int>();
    const bool reveal = p.contains("showdown") && p["showdown"].get<bool>();
    if (e["type"] == "hand-result") {
      ++hands_scanned;
      reveal ? ++showdowns : ++folds;
    }
    if (!reveal) check(e);
  }
  for (const auto& v : views) {
    hand = v["hand"].get<int>();
    if (!v["showdown"].get<bool>()) check(v);
  }
  EXPECT_EQ(hands_scanned, 40);
  EXPECT_GT(showdowns, 0);
  EXPECT_GT(folds, 0);
}

TEST(ServiceSessionTest, ExactlyOneHandResultPerHand) {
  auto m = manager(holdem());
  auto s = m->get(m->create({{"agent", "uniform"}, {"opponent", "call"}, {"seed", 4}})["session"]);
  for (int i = 0; i < 30; ++i) s->next_hand();
  s->end();
  std::map<int, int> results;
  std::uint64_t prev = 0;
  for (const auto& e : s->events_after(0)) {
    EXPECT_EQ(e["seq"].get<std::uint64_t>(), prev + 1);
    prev = e["seq"].get<std::uint64_t>();
    if (e["type"] == "hand-result") ++results[e["payload"]["hand"].get<int>()];
  }
  EXPECT_EQ(results.size(), 31u);
  for (const auto& [h, n] : results) EXPECT_EQ(n, 1) << h;
  EXPECT_EQ(s->events_after(0).back()["type"], "session-summary");
}

TEST(ServiceSessionTest, ResumeAfterSeq) {
  auto m = manager(holdem());
  auto s = m->get(m->create({{"agent", "uniform"}, {"opponent", "uniform"}, {"seed", 8}})["session"]);
  for (int i = 0; i < 5; ++i) s->next_hand();
  const auto all = s->events_after(0);
  for (std::uint64_t k = 0; k < all.size(); ++k) {
    const auto rest = s->events_after(k);
    ASSERT_EQ(rest.size(), all.size() - k);
    EXPECT_EQ(rest.front()["seq"], k + 1);
  }
  EXPECT_TRUE(s->events_after(all.size()).empty());
}

TEST(ServiceSessionTest, ReplayReproducesTranscript) {
  auto run = [] {
    auto m = manager(holdem());
    auto s = m->get(m->create({{"human_seat", 1}, {"seed", 1234}})["session"]);
    for (int hand = 0; hand < 10; ++hand) {
      int n = 0;
      for (Json v = s->view(1); v["status"] != "complete"; v = s->view(1), ++n) {
        const Json legal = v["legal"];
        s->submit(pending_seq(v), n % 3 == 1 && !legal["raise"].is_null()
                                      ? act("raise", legal["raise"]["min_to"].get<Chips>())
                                      : act(legal["check"].get<bool>() ? "check" : "call"));
      }
      s->next_hand();
    }
    s->end();
    std::vector<Json> logs;
    for (const auto& h : s->hand_log()) logs.push_back(hand_to_json(h));
    return std::make_pair(s->events_after(0), logs);
  };
  const auto a = run();
  const auto b = run();
  EXPECT_EQ(a.first, b.first);
  EXPECT_EQ(a.second, b.second);
}

TEST(ServiceSessionTest, HandLogOnlyAfterEnd) {
  auto m = manager(holdem());
  auto s = m->get(m->create({{"human_seat", 0}, {"seed", 1}})["session"]);
  EXPECT_EQ(expect_error([&] { s->hand_log(); }).code, "not_available");
  s->end();
  EXPECT_TRUE(s->hand_log().empty());  // the open hand is abandoned
  EXPECT_EQ(expect_error([&] { s->next_hand(); }).code, "session_ended");
}

TEST(ServiceSessionTest, MaxHandsEndsSession) {
  ServiceSettings settings;
  settings.max_hands = 3;
  auto m = manager(holdem(), settings);
  auto s = m->get(m->create({{"agent", "call"}, {"opponent", "call"}, {"seed", 1}})["session"]);
  s->next_hand();
  s->next_hand();
  EXPECT_TRUE(s->ended());
  EXPECT_EQ(s->hand_log().size(), 3u);
}

TEST(ServiceSessionTest, HandsPersistAsHandHistory) {
  const auto dir = std::filesystem::temp_directory_path() / "pokerlab_service_log";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ServiceSettings settings;
  settings.log_dir = dir.string();
  auto m = manager(holdem(), settings);
  auto s = m->get(m->create({{"agent", "uniform"}, {"opponent", "call"}, {"seed", 1}})["session"]);
  s->next_hand();
  s->end();
  std::ifstream in(dir / (s->id() + ".jsonl"));
  const auto read = read_hand_history(in);
  ASSERT_EQ(read.size(), 2u);
  EXPECT_EQ(hand_to_json(read[1]), hand_to_json(s->hand_log()[1]));
  std::filesystem::remove_all(dir);
}

// Worked example: the agent faces a bet of 100 into a pot of 500 with check
// and a quarter-pot bet as its nearest sizes; f = 1/6.
TEST(ServiceSessionTest, OffGridBetTranslationLogged) {
  auto spec = std::make_shared<const GameSpec>(river_nlhe_spec());
  GridConfig gc;
  gc.per_round = {{std::vector<std::string>{"0.75", "allin"}, std::vector<std::string>{"0.75", "allin"}},
                  {std::vector<std::string>{"0.25", "0.5", "1", "allin"},
                   std::vector<std::string>{"1", "allin"}}};
  auto abs = std::make_shared<const Abstraction>(
      make_abstraction(*spec, build_action_grid(*spec, gc), std::make_shared<LosslessCardAbstraction>(*spec)));
  // The agent (small blind) opens to 250 with every hand.
  const BettingState root = BettingState::betting_root(spec);
  const auto open = abstract_actions(root, abs->grid);
  const auto it = std::find(open.begin(), open.end(), ActionDescriptor::raise_to(250));
  ASSERT_NE(it, open.end());
  StrategyTable table;
  table.meta.spec_hash = spec->hash();
  table.meta.abstraction_hash = abs->hash();
  std::vector<double> p(open.size(), 0.0);
  p[static_cast<std::size_t>(it - open.begin())] = 1.0;
  for (const auto& h : all_hands(*spec, spec->hole_cards, CardSet())) {
    table.set("0:" + abs->cards->label(0, h, {}) + ":", p);
  }
  const auto path = (std::filesystem::temp_directory_path() / "pokerlab_open250.tbl").string();
  table.save_file(path);

  SessionManager m(spec, abs, ServiceSettings{});
  auto s = m.get(m.create({{"human_seat", 1}, {"seed", 17}, {"agent", "cfr:" + path}})["session"]);
  Json v = s->view(1);
  ASSERT_EQ(v["committed"], Json({250, 100}));
  s->submit(pending_seq(v), act("call"));
  v = s->view(1);
  ASSERT_EQ(v["round"], 1);
  ASSERT_EQ(v["pot"], 500);
  s->submit(pending_seq(v), act("raise", 350));
  for (v = s->view(1); v["status"] != "complete"; v = s->view(1)) s->submit(pending_seq(v), act("fold"));
  s->end();
  const auto log = s->hand_log();
  std::filesystem::remove(path);
  ASSERT_EQ(log.size(), 1u);
  const DecisionRecord* reply = nullptr;
  for (const auto& d : log[0].decisions) {
    if (d.seat == 0 && d.round == 1) reply = &d;
  }
  ASSERT_NE(reply, nullptr);
  ASSERT_EQ(reply->info.translations.size(), 1u);
  const auto& e = reply->info.translations[0];
  EXPECT_NEAR(e.x, 0.2, 1e-12);
  EXPECT_EQ(e.a, 0.0);
  EXPECT_EQ(e.b, 0.25);
  EXPECT_NEAR(e.f, 1.0 / 6.0, 1e-12);
  // The same event survives the JSON hand-history round trip.
  const auto back = hand_from_json(hand_to_json(log[0]));
  bool found = false;
  for (const auto& d : back.decisions) {
    for (const auto& t : d.info.translations) found = found || std::abs(t.f - 1.0 / 6.0) < 1e-12;
  }
  EXPECT_TRUE(found);
}

TEST(ServiceSettingsTest, EnvironmentOverridesPortAndArtifact) {
  Config c = Config::from_string("[service]\nport = 9000\n[agent]\nstrategy = uniform\n");
  ::setenv("POKERLAB_SERVICE_PORT", "9100", 1);
  ::setenv("POKERLAB_AGENT_STRATEGY", "cfr:/data/trunk.tbl", 1);
  c.apply_env_overrides(ServiceSettings::env_keys());
  ::unsetenv("POKERLAB_SERVICE_PORT");
  ::unsetenv("POKERLAB_AGENT_STRATEGY");
  const auto s = ServiceSettings::from_config(c);
  EXPECT_EQ(s.port, 9100);
  EXPECT_EQ(s.agent, "cfr:/data/trunk.tbl");
  EXPECT_THROW(ServiceSettings::from_config(Config::from_string("[service]\nport = 70000\n")),
               std::invalid_argument);
}

// ---- HTTP ----

class HttpTest : public ::testing::Test {
 protected:
  void SetUp() override {
    server_ = std::make_unique<Server>(manager(holdem()));
    port_ = server_->bind("127.0.0.1", 0);
    ASSERT_GT(port_, 0);
    server_->start();
  }
  void TearDown() override { server_->stop(); }

  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_read_timeout(std::chrono::seconds(10));
    return c;
  }
  Json post(const std::string& path, const Json& body, int expect_status) const {
    auto c = client();
    auto r = c.Post(path, body.dump(), "application/json");
    EXPECT_TRUE(r);
    if (!r) return {};
    EXPECT_EQ(r->status, expect_status) << r->body;
    return Json::parse(r->body);
  }
  Json get(const std::string& path, int expect_status = 200) const {
    auto c = client();
    auto r = c.Get(path);
    EXPECT_TRUE(r);
    if (!r) return {};
    EXPECT_EQ(r->status, expect_status) << r->body;
    return Json::parse(r->body);
  }
  // Reads an SSE stream to its end; returns the decoded messages.
  std::vector<Json> stream(const std::string& path) const {
    auto c = client();
    std::string buffer;
    std::vector<Json> out;
    c.Get(path, [&](const char* data, std::size_t n) {
      buffer.append(data, n);
      std::size_t end;
      while ((end = buffer.find("\n\n")) != std::string::npos) {
        const std::string frame = buffer.substr(0, end);
        buffer.erase(0, end + 2);
        const auto at = frame.find("data: ");
        if (at != std::string::npos) out.push_back(Json::parse(frame.substr(at + 6)));
      }
      return true;
    });
    return out;
  }

  std::unique_ptr<Server> server_;
  int port_ = -1;
};

TEST_F(HttpTest, Health) { EXPECT_EQ(get("/health")["schema"], kProtocolSchema); }

TEST_F(HttpTest, PlayOverHttp) {
  const Json created = post("/sessions", {{"human_seat", 0}, {"seed", 2}, {"agent", "call"}}, 201);
  const std::string id = created["session"];
  Json view = get("/sessions/" + id);
  EXPECT_TRUE(view["hole"][1].is_null());
  EXPECT_EQ(get("/sessions/" + id + "?viewer=1", 403)["error"]["code"], "forbidden");
  const Json bad = post("/sessions/" + id + "/actions", {{"seq", pending_seq(view)}, {"action", act("raise", 150)}}, 422);
  EXPECT_EQ(bad["legal"]["raise"]["min_to"], 200);
  post("/sessions/" + id + "/actions", {{"seq", 0}, {"action", act("call")}}, 409);
  post("/sessions/" + id + "/actions", {{"action", act("call")}}, 400);
  while (view["status"] != "complete") {
    const Json r = post("/sessions/" + id + "/actions",
                        {{"seq", pending_seq(view)},
                         {"action", act(view["legal"]["check"].get<bool>() ? "check" : "call")}},
                        200);
    view = r["state"];
  }
  EXPECT_TRUE(view["hole"][1].is_string());
  EXPECT_EQ(get("/sessions/" + id + "/hands", 409)["error"]["code"], "not_available");
  post("/sessions/" + id + "/end", Json::object(), 200);
  auto c = client();
  auto hands = c.Get("/sessions/" + id + "/hands");
  ASSERT_TRUE(hands);
  std::istringstream lines(hands->body);
  EXPECT_EQ(read_hand_history(lines).size(), 1u);
  EXPECT_EQ(get("/sessions/nope", 404)["error"]["code"], "not_found");
}

TEST_F(HttpTest, EventStreamResumesAndBroadcasts) {
  const Json created = post("/sessions", {{"agent", "uniform"}, {"opponent", "call"}, {"seed", 3}}, 201);
  const std::string id = created["session"];
  for (int i = 0; i < 3; ++i) post("/sessions/" + id + "/next-hand", Json::object(), 200);

  // Two live subscribers started before the session ends see the same stream.
  std::vector<Json> first, second;
  std::thread t1([&] { first = stream("/sessions/" + id + "/events?after=0"); });
  std::thread t2([&] { second = stream("/sessions/" + id + "/events?after=0"); });
  std::this_thread::sleep_for(std::chrono::milliseconds(300));
  post("/sessions/" + id + "/next-hand", Json::object(), 200);
  post("/sessions/" + id + "/end", Json::object(), 200);
  t1.join();
  t2.join();
  ASSERT_FALSE(first.empty());
  EXPECT_EQ(first, second);
  EXPECT_EQ(first.back()["type"], "session-summary");
  for (std::size_t i = 0; i < first.size(); ++i) EXPECT_EQ(first[i]["seq"], i + 1);

  const std::uint64_t k = 7;
  const auto resumed = stream("/sessions/" + id + "/events?after=" + std::to_string(k));
  ASSERT_FALSE(resumed.empty());
  EXPECT_EQ(resumed.front()["seq"], k + 1);
  EXPECT_EQ(resumed.size(), first.size() - k);

  const Json polled = get("/sessions/" + id + "/events?after=" + std::to_string(k) + "&stream=0");
  EXPECT_EQ(polled.size(), first.size() - k);
  EXPECT_EQ(polled.front()["seq"], k + 1);
}

TEST_F(HttpTest, UnknownSessionStreamEndsWithError) {
  const auto msgs = stream("/sessions/missing/events");
  ASSERT_EQ(msgs.size(), 1u);
  EXPECT_EQ(msgs[0]["type"], "error");
  EXPECT_EQ(msgs[0]["payload"]["error"]["code"], "not_found");
}

TEST_F(HttpTest, IdleStreamTimesOut) {
  const Json created = post("/sessions", {{"human_seat", 0}, {"seed", 3}}, 201);
  const auto msgs = stream("/sessions/" + created["session"].get<std::string>() + "/events?timeout_ms=300");
  ASSERT_FALSE(msgs.empty());
  EXPECT_EQ(msgs.back()["type"], "action-request");
}

TEST_F(HttpTest, MalformedBodies) {
  EXPECT_EQ(post("/sessions", Json("not an object"), 400)["error"]["code"], "bad_request");
  auto c = client();
  auto r = c.Post("/sessions", "{oops", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 400);
  EXPECT_EQ(post("/sessions", {{"human_seat", 3}}, 400)["error"]["code"], "bad_request");
}

}  // namespace
}  // namespace pokerlab
