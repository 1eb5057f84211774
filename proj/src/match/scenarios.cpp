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

#include "pokerlab/match/scenarios.hpp"

#include <stdexcept>

#include "pokerlab/abstraction/bucketing.hpp"
#include "pokerlab/game/infoset.hpp"

namespace pokerlab {

namespace {

std::shared_ptr<const StrategyTable> limp_check_trunk(const GameSpec& spec, const Abstraction& abs) {
  auto spec_ptr = std::make_shared<const GameSpec>(spec);
  const BettingState root = BettingState::betting_root(spec_ptr);
  const std::size_t open_actions = abstract_actions(root, abs.grid).size();
  const BettingState limped = apply_action(root, ActionDescriptor::call());
  const std::size_t bb_actions = abstract_actions(limped, abs.grid).size();
  auto table = std::make_shared<StrategyTable>();
  table->meta.spec_hash = spec.hash();
  table->meta.abstraction_hash = abs.hash();
  std::vector<double> check(bb_actions, 0.0);
  check[0] = 1.0;  // check is the first action when not facing a bet
  for (const auto& h : all_hands(spec, spec.hole_cards, CardSet())) {
    const std::string label = abs.cards->label(0, h, {});
    table->set("0:" + label + ":", std::vector<double>(open_actions, 1.0 / static_cast<double>(open_actions)));
    table->set("1:" + label + ":c", check);
  }
  return table;
}

}  // namespace

OffTreeScenario run_off_tree_scenario(const OffTreeScenarioOptions& options) {
  auto spec = std::make_shared<const GameSpec>(river_nlhe_spec());
  GridConfig gc;
  auto abs = std::make_shared<const Abstraction>(
      make_abstraction(*spec, build_action_grid(*spec, gc),
                       std::make_shared<LosslessCardAbstraction>(*spec)));
  const auto trunk = limp_check_trunk(*spec, *abs);

  Deal deal;
  deal.hole[0] = parse_cards("QsQc");
  deal.hole[1] = parse_cards("AhKd");
  deal.board = parse_cards("2h7s9dJc4c");

  const Chips open_to = options.open_to;
  ScriptedAgent human("scripted-open", [open_to](const BettingState& v) {
    const LegalActions legal = legal_actions(v);
    if (v.round() == 0 && v.history().empty() && legal.raise) return ActionDescriptor::raise_to(open_to);
    return legal.check ? ActionDescriptor::check() : ActionDescriptor::call();
  });

  auto make = [&](bool endgame) {
    StrategyAgentOptions o;
    o.name = "strategy";
    o.abstraction = abs;
    o.trunk = trunk;
    o.endgame = endgame;
    o.endgame_config = options.endgame;
    return StrategyAgent(o);
  };

  // The endgame does not touch the agent's stream before the final round,
  // so the cheap search without it finds the same draw.
  StrategyAgent probe = make(false);
  OffTreeScenario out;
  bool found = false;
  for (int s = 0; s < options.max_seeds && !found; ++s) {
    ++out.seeds_tried;
    const HandRecord r = play_hand(spec, {&human, &probe}, deal, {{0, static_cast<std::uint64_t>(s)}});
    for (const auto& d : r.decisions) {
      if (d.seat == 1 && !d.info.translations.empty()) {
        found = d.info.translations.front().mapped_down && d.info.translations.front().randomized;
        break;
      }
    }
    if (found) out.agent_seed = static_cast<std::uint64_t>(s);
  }
  if (!found) throw std::runtime_error("no seed maps the open down within the search budget");

  StrategyAgent agent = make(true);
  out.record = play_hand(spec, {&human, &agent}, deal, {{0, out.agent_seed}});
  out.trace = perception_trace(out.record, 1, 0);
  for (const auto& d : out.record.decisions) {
    if (d.seat != 1) continue;
    if (!d.info.translations.empty() && !out.event) out.event = d.info.translations.front();
    if (d.round == spec->num_rounds - 1 && !out.endgame_pot) {
      out.river_true_pot = d.info.true_pot;
      out.river_perceived_pot = d.info.perceived_pot;
      out.endgame_pot = d.info.endgame_pot;
    }
  }
  return out;
}

}  // namespace pokerlab
