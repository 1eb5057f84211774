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

#include "pokerlab/io/json.hpp"

#include <cmath>
#include <stdexcept>

namespace pokerlab {

Json spec_to_json(const GameSpec& spec) {
  return Json{{"preset", spec.preset_name},
              {"ranks", spec.ranks},
              {"suits", spec.suits},
              {"num_rounds", spec.num_rounds},
              {"hole_cards", spec.hole_cards},
              {"board_cards", spec.board_cards},
              {"small_blind", spec.small_blind},
              {"big_blind", spec.big_blind},
              {"starting_stack", spec.starting_stack},
              {"betting", spec.is_limit() ? "limit" : "nolimit"},
              {"limit_raise", spec.limit_raise},
              {"max_raises", spec.max_raises},
              {"first_to_act", spec.first_to_act}};
}

GameSpec spec_from_json(const Json& j) {
  GameSpec g;
  g.preset_name = j.at("preset").get<std::string>();
  g.ranks = j.at("ranks").get<std::vector<int>>();
  g.suits = j.at("suits").get<std::vector<int>>();
  g.num_rounds = j.at("num_rounds").get<int>();
  g.hole_cards = j.at("hole_cards").get<int>();
  g.board_cards = j.at("board_cards").get<std::vector<int>>();
  g.small_blind = j.at("small_blind").get<Chips>();
  g.big_blind = j.at("big_blind").get<Chips>();
  g.starting_stack = j.at("starting_stack").get<Chips>();
  const auto betting = j.at("betting").get<std::string>();
  if (betting != "limit" && betting != "nolimit") throw std::invalid_argument("bad betting structure");
  g.betting = betting == "limit" ? BettingStructure::kFixedLimit : BettingStructure::kNoLimit;
  g.limit_raise = j.at("limit_raise").get<std::vector<Chips>>();
  g.max_raises = j.at("max_raises").get<std::vector<int>>();
  g.first_to_act = j.at("first_to_act").get<std::vector<int>>();
  g.validate();
  return g;
}

namespace {

Json fraction_list(const std::vector<double>& fs) {
  Json out = Json::array();
  for (double f : fs) {
    if (std::isinf(f)) out.push_back("allin");
    else out.push_back(f);
  }
  return out;
}

std::vector<double> parse_fraction_list(const Json& j) {
  std::vector<double> out;
  for (const auto& v : j) out.push_back(v.is_string() ? kAllIn : v.get<double>());
  return out;
}

}  // namespace

Json grid_to_json(const ActionGrid& grid) {
  Json rounds = Json::array();
  for (int r = 0; r < grid.num_rounds(); ++r) {
    rounds.push_back({{"bet", fraction_list(grid.fractions(r, Situation::kFirstBet))},
                      {"raise", fraction_list(grid.fractions(r, Situation::kRaise))}});
  }
  return {{"rounds", rounds}, {"max_raises", grid.max_raises_per_round()}};
}

ActionGrid grid_from_json(const Json& j) {
  std::vector<std::array<std::vector<double>, 2>> per_round;
  for (const auto& r : j.at("rounds")) {
    per_round.push_back({parse_fraction_list(r.at("bet")), parse_fraction_list(r.at("raise"))});
  }
  return ActionGrid(std::move(per_round), j.at("max_raises").get<int>());
}

Json cards_to_json(const std::vector<Card>& cards) { return to_string(cards); }

std::vector<Card> cards_from_json(const Json& j) { return parse_cards(j.get<std::string>()); }

Json action_to_json(const ActionDescriptor& action) {
  switch (action.kind) {
    case ActionKind::kFold: return {{"kind", "fold"}};
    case ActionKind::kCheck: return {{"kind", "check"}};
    case ActionKind::kCall: return {{"kind", "call"}};
    case ActionKind::kRaise: return {{"kind", "raise"}, {"to", action.amount}};
  }
  return {};
}

ActionDescriptor action_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "fold") return ActionDescriptor::fold();
  if (kind == "check") return ActionDescriptor::check();
  if (kind == "call") return ActionDescriptor::call();
  if (kind == "raise" || kind == "bet") return ActionDescriptor::raise_to(j.at("to").get<Chips>());
  throw std::invalid_argument("unknown action kind '" + kind + "'");
}

Json legal_to_json(const LegalActions& legal) {
  Json j{{"fold", legal.fold}, {"check", legal.check}, {"call", legal.call},
         {"call_amount", legal.call_amount}};
  if (legal.raise) {
    j["raise"] = {{"min_to", legal.raise->min_to}, {"max_to", legal.raise->max_to}};
  } else {
    j["raise"] = nullptr;
  }
  return j;
}

}  // namespace pokerlab
