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

#include "pokerlab/match/hand_history.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pokerlab {

namespace {

Json fraction_to_json(double f) { return std::isinf(f) ? Json("allin") : Json(f); }

double fraction_from_json(const Json& j) {
  return j.is_string() ? kAllIn : j.get<double>();
}

Json move_to_json(const AbstractMove& m) {
  switch (m.kind) {
    case AbstractMove::Kind::kFold: return {{"kind", "fold"}};
    case AbstractMove::Kind::kPassive: return {{"kind", "passive"}};
    case AbstractMove::Kind::kRaise: break;
  }
  return {{"kind", "raise"}, {"fraction", fraction_to_json(m.fraction)}};
}

AbstractMove move_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "fold") return {AbstractMove::Kind::kFold, 0.0};
  if (kind == "passive") return {AbstractMove::Kind::kPassive, 0.0};
  if (kind == "raise") return {AbstractMove::Kind::kRaise, fraction_from_json(j.at("fraction"))};
  throw std::invalid_argument("unknown move kind '" + kind + "'");
}

}  // namespace

Json translation_event_to_json(const TranslationEvent& e) {
  return {{"x", fraction_to_json(e.x)},
          {"a", fraction_to_json(e.a)},
          {"b", fraction_to_json(e.b)},
          {"f", e.f},
          {"u", e.u},
          {"mapped_down", e.mapped_down},
          {"randomized", e.randomized},
          {"chosen", move_to_json(e.chosen)}};
}

TranslationEvent translation_event_from_json(const Json& j) {
  TranslationEvent e;
  e.x = fraction_from_json(j.at("x"));
  e.a = fraction_from_json(j.at("a"));
  e.b = fraction_from_json(j.at("b"));
  e.f = j.at("f").get<double>();
  e.u = j.at("u").get<double>();
  e.mapped_down = j.at("mapped_down").get<bool>();
  e.randomized = j.at("randomized").get<bool>();
  e.chosen = move_from_json(j.at("chosen"));
  return e;
}

Json decision_info_to_json(const DecisionInfo& info) {
  Json j = {{"source", info.source},
            {"true_pot", info.true_pot},
            {"perceived_pot", info.perceived_pot},
            {"flagged", info.flagged}};
  Json ev = Json::array();
  for (const auto& e : info.translations) ev.push_back(translation_event_to_json(e));
  j["translations"] = ev;
  // Hex keeps 64-bit hashes exact for readers with double-only numbers.
  if (info.endgame_hash) {
    std::ostringstream h;
    h << std::hex << std::setw(16) << std::setfill('0') << *info.endgame_hash;
    j["endgame_hash"] = h.str();
  }
  if (info.endgame_pot) j["endgame_pot"] = *info.endgame_pot;
  if (!info.note.empty()) j["note"] = info.note;
  return j;
}

DecisionInfo decision_info_from_json(const Json& j) {
  DecisionInfo info;
  info.source = j.at("source").get<std::string>();
  info.true_pot = j.at("true_pot").get<Chips>();
  info.perceived_pot = j.at("perceived_pot").get<Chips>();
  info.flagged = j.at("flagged").get<bool>();
  for (const auto& e : j.at("translations")) info.translations.push_back(translation_event_from_json(e));
  if (j.contains("endgame_hash")) {
    info.endgame_hash = std::stoull(j.at("endgame_hash").get<std::string>(), nullptr, 16);
  }
  if (j.contains("endgame_pot")) info.endgame_pot = j.at("endgame_pot").get<Chips>();
  if (j.contains("note")) info.note = j.at("note").get<std::string>();
  return info;
}

Json hand_to_json(const HandRecord& r) {
  Json decisions = Json::array();
  for (const auto& d : r.decisions) {
    decisions.push_back({{"seat", d.seat},
                         {"round", d.round},
                         {"history", d.history},
                         {"action", action_to_json(d.action)},
                         {"info", decision_info_to_json(d.info)}});
  }
  Json j = {{"schema", kHandSchema},
            {"hand_id", r.hand_id},
            {"pair", r.pair},
            {"play", r.play},
            {"side_at_seat", r.side_at_seat},
            {"agents", r.agent_at_seat},
            {"hole", {cards_to_json(r.deal.hole[0]), cards_to_json(r.deal.hole[1])}},
            {"board", cards_to_json(r.deal.board)},
            {"board_shown", cards_to_json(r.board_shown)},
            {"history", r.history},
            {"decisions", decisions},
            {"result", r.result}};
  if (r.forfeit_seat) {
    j["forfeit"] = {{"seat", *r.forfeit_seat}, {"reason", r.forfeit_reason}};
  }
  return j;
}

HandRecord hand_from_json(const Json& j) {
  if (!j.contains("schema") || j.at("schema") != kHandSchema) {
    throw std::invalid_argument(std::string("hand record schema is not ") + kHandSchema);
  }
  try {
    HandRecord r;
    r.hand_id = j.at("hand_id").get<std::uint64_t>();
    r.pair = j.at("pair").get<std::uint64_t>();
    r.play = j.at("play").get<int>();
    r.side_at_seat = j.at("side_at_seat").get<std::array<int, 2>>();
    r.agent_at_seat = j.at("agents").get<std::array<std::string, 2>>();
    r.deal.hole[0] = cards_from_json(j.at("hole").at(0));
    r.deal.hole[1] = cards_from_json(j.at("hole").at(1));
    r.deal.board = cards_from_json(j.at("board"));
    r.board_shown = cards_from_json(j.at("board_shown"));
    r.history = j.at("history").get<std::string>();
    for (const auto& d : j.at("decisions")) {
      DecisionRecord rec;
      rec.seat = d.at("seat").get<int>();
      rec.round = d.at("round").get<int>();
      rec.history = d.at("history").get<std::string>();
      rec.action = action_from_json(d.at("action"));
      rec.info = decision_info_from_json(d.at("info"));
      r.decisions.push_back(std::move(rec));
    }
    r.result = j.at("result").get<std::array<Chips, 2>>();
    if (j.contains("forfeit")) {
      r.forfeit_seat = j.at("forfeit").at("seat").get<int>();
      r.forfeit_reason = j.at("forfeit").at("reason").get<std::string>();
    }
    // Actions are not stored twice; rebuild the per-round records from the
    // decisions, which cover every action.
    for (const auto& d : r.decisions) r.actions.push_back({d.seat, d.round, d.action});
    return r;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed hand record: ") + e.what());
  }
}

void write_hand_history(std::ostream& out, const std::vector<HandRecord>& records) {
  for (const auto& r : records) out << hand_to_json(r).dump() << '\n';
}

std::vector<HandRecord> read_hand_history(std::istream& in) {
  std::vector<HandRecord> out;
  std::string line;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(hand_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void write_hand_history_file(const std::string& path, const std::vector<HandRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_hand_history(out, records);
}

std::vector<HandRecord> read_hand_history_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return read_hand_history(in);
}

MatchReport build_report(const std::vector<HandRecord>& records, Chips big_blind) {
  MatchReport rep;
  rep.hands = static_cast<long long>(records.size());
  std::vector<double> per_hand;
  std::map<std::uint64_t, std::vector<const HandRecord*>> by_pair;
  for (const auto& r : records) {
    const int seat_a = r.seat_of_side(0);
    if (rep.agent_a.empty()) {
      rep.agent_a = r.agent_at_seat[seat_a];
      rep.agent_b = r.agent_at_seat[1 - seat_a];
    }
    rep.total_a += r.result[seat_a];
    per_hand.push_back(static_cast<double>(r.result[seat_a]));
    if (r.forfeit_seat) rep.forfeited_hands.push_back(r.hand_id);
    if (r.result[0] + r.result[1] != 0) rep.unbalanced_hands.push_back(r.hand_id);
    by_pair[r.pair].push_back(&r);
  }
  std::vector<double> per_pair;
  for (const auto& [pair, hands] : by_pair) {
    if (hands.size() != 2) continue;
    const HandRecord& x = *hands[0];
    const HandRecord& y = *hands[1];
    if (!(x.deal == y.deal) || x.side_at_seat[0] == y.side_at_seat[0]) {
      rep.broken_pairs.push_back(pair);
    }
    per_pair.push_back(static_cast<double>(x.result_for_side(0) + y.result_for_side(0)));
  }
  rep.pairs = static_cast<long long>(per_pair.size());
  rep.per_hand = summarize(per_hand);
  rep.per_pair = summarize(per_pair);
  if (rep.hands > 0) {
    const double bb = static_cast<double>(big_blind);
    rep.bb_per_100 = bb_per_100(static_cast<double>(rep.total_a), rep.hands, bb);
    if (rep.pairs > 1) {
      const Interval ci = rep.per_pair.mean_ci();
      rep.bb_per_100_ci = {ci.low / 2.0 / bb * 100.0, ci.high / 2.0 / bb * 100.0};
    } else {
      const Interval ci = rep.per_hand.mean_ci();
      rep.bb_per_100_ci = {ci.low / bb * 100.0, ci.high / bb * 100.0};
    }
  }
  rep.off_tree = off_tree_report(records);
  return rep;
}

Json report_to_json(const MatchReport& r) {
  Json worst = Json::array();
  for (const auto& h : r.off_tree.worst) {
    worst.push_back({{"hand_id", h.hand_id},
                     {"max_divergence", h.max_divergence},
                     {"translation_events", h.translation_events}});
  }
  return {{"schema", "pokerlab.report/1"},
          {"agent_a", r.agent_a},
          {"agent_b", r.agent_b},
          {"hands", r.hands},
          {"pairs", r.pairs},
          {"total_a", r.total_a},
          {"bb_per_100", r.bb_per_100},
          {"bb_per_100_ci", {r.bb_per_100_ci.low, r.bb_per_100_ci.high}},
          {"per_hand_variance", r.per_hand.variance},
          {"per_pair_variance", r.per_pair.variance},
          {"forfeited_hands", r.forfeited_hands},
          {"broken_pairs", r.broken_pairs},
          {"unbalanced_hands", r.unbalanced_hands},
          {"off_tree",
           {{"translation_events", r.off_tree.translation_events},
            {"randomized_events", r.off_tree.randomized_events},
            {"mapped_down", r.off_tree.mapped_down},
            {"hands_with_divergence", r.off_tree.hands_with_divergence},
            {"f_histogram", r.off_tree.f_histogram},
            {"worst", worst}}}};
}

std::string report_to_text(const MatchReport& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << r.agent_a << " vs " << r.agent_b << "\n";
  out << "hands " << r.hands << " (" << r.pairs << " duplicate pairs)\n";
  out << "side A total " << r.total_a << " chips, " << r.bb_per_100 << " bb/100, 95% CI ["
      << r.bb_per_100_ci.low << ", " << r.bb_per_100_ci.high << "]\n";
  out << "variance per hand " << r.per_hand.variance << ", per pair " << r.per_pair.variance
      << "\n";
  if (!r.forfeited_hands.empty()) {
    out << "FORFEITS: " << r.forfeited_hands.size() << " hands (first id "
        << r.forfeited_hands.front() << ")\n";
  }
  if (!r.broken_pairs.empty()) out << "BROKEN PAIRS: " << r.broken_pairs.size() << "\n";
  if (!r.unbalanced_hands.empty()) out << "UNBALANCED HANDS: " << r.unbalanced_hands.size() << "\n";
  out << "translation events " << r.off_tree.translation_events << " ("
      << r.off_tree.randomized_events << " randomized, " << r.off_tree.mapped_down
      << " mapped down), hands with pot divergence " << r.off_tree.hands_with_divergence << "\n";
  for (const auto& h : r.off_tree.worst) {
    out << "  hand " << h.hand_id << ": divergence " << h.max_divergence << " chips, "
        << h.translation_events << " events\n";
  }
  return out.str();
}

}  // namespace pokerlab
