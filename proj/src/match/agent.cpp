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

#include "pokerlab/match/agent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "pokerlab/game/infoset.hpp"

namespace pokerlab {

namespace {

ActionDescriptor passive_of(const BettingState& view) {
  return legal_actions(view).check ? ActionDescriptor::check() : ActionDescriptor::call();
}

DecisionInfo plain_info(const BettingState& view, const char* source) {
  DecisionInfo info;
  info.source = source;
  info.true_pot = view.pot_total();
  info.perceived_pot = view.pot_total();
  return info;
}

}  // namespace

void UniformAgent::begin_hand(const BettingState&, int, std::uint64_t seed) { rng_ = Rng(seed); }

Decision UniformAgent::act(const BettingState& view) {
  const auto actions = abstract_actions(view, grid_);
  const auto pick = rng_.below(actions.size());
  return {actions[pick], plain_info(view, "uniform")};
}

Decision AlwaysAllInAgent::act(const BettingState& view) {
  const LegalActions legal = legal_actions(view);
  const ActionDescriptor a =
      legal.raise ? ActionDescriptor::raise_to(legal.raise->max_to) : passive_of(view);
  return {a, plain_info(view, "scripted")};
}

Decision CallingAgent::act(const BettingState& view) {
  return {passive_of(view), plain_info(view, "scripted")};
}

Decision ScriptedAgent::act(const BettingState& view) {
  return {script_(view), plain_info(view, "scripted")};
}

ActionDescriptor snap_to_abstract(const BettingState& state, const ActionDescriptor& action,
                                  const ActionGrid& grid) {
  const auto actions = abstract_actions(state, grid);
  if (std::find(actions.begin(), actions.end(), action) != actions.end()) return action;
  if (action.kind != ActionKind::kRaise) return action;
  const ActionDescriptor* best = nullptr;
  for (const auto& a : actions) {
    if (a.kind != ActionKind::kRaise) continue;
    if (!best || std::abs(a.amount - action.amount) < std::abs(best->amount - action.amount)) {
      best = &a;
    }
  }
  return best ? *best : action;
}

StrategyAgent::StrategyAgent(StrategyAgentOptions options) : opt_(std::move(options)) {
  if (!opt_.abstraction || !opt_.trunk) {
    throw std::invalid_argument("strategy agent needs an abstraction and a trunk table");
  }
  if (!opt_.played) opt_.played = opt_.trunk;
}

double StrategyAgent::draw() {
  return opt_.translation_draw ? opt_.translation_draw() : rng_.uniform();
}

void StrategyAgent::begin_hand(const BettingState& view, int seat, std::uint64_t seed) {
  seat_ = seat;
  rng_ = Rng(seed);
  perceived_ = view;
  desync_ = false;
  pending_events_.clear();
  own_move_.reset();
  endgame_.reset();
  endgame_failed_ = false;
  endgame_error_.clear();
  final_moves_.clear();
}

void StrategyAgent::sync_deals(const BettingState& view) {
  if (desync_) return;
  while (perceived_.is_chance() && perceived_.board().size() < view.board().size()) {
    const std::size_t have = perceived_.board().size();
    const auto n = static_cast<std::size_t>(perceived_.pending_deal_size());
    if (have + n > view.board().size()) break;
    const std::vector<Card> cards(view.board().begin() + static_cast<long>(have),
                                  view.board().begin() + static_cast<long>(have + n));
    perceived_ = deal_cards(perceived_, cards);
  }
  if (perceived_.round() != view.round() || perceived_.is_chance()) desync_ = true;
}

void StrategyAgent::advance_perceived(const AbstractMove& move) {
  if (desync_) return;
  if (perceived_.status() != NodeStatus::kDecision) {
    desync_ = true;
    return;
  }
  const ActionGrid& grid = opt_.abstraction->grid;
  try {
    perceived_ = apply_action(perceived_, snap_to_abstract(perceived_, realize(perceived_, move, grid), grid));
  } catch (const std::exception&) {
    desync_ = true;
  }
}

namespace {

void advance_endgame_state(BettingState& state, const AbstractMove& move, const ActionGrid& grid) {
  state = apply_action(state, snap_to_abstract(state, realize(state, move, grid), grid));
}

}  // namespace

void StrategyAgent::observe(const BettingState& before, const ActionDescriptor& action) {
  sync_deals(before);
  const int actor = before.to_act();
  const bool final_round = before.round() == before.spec().num_rounds - 1;
  if (!desync_ && perceived_.to_act() != actor) desync_ = true;

  AbstractMove move;
  if (actor == seat_) {
    move = own_move_ ? *own_move_ : to_abstract_move(before, action, opt_.abstraction->grid);
    own_move_.reset();
  } else {
    const ActionGrid& grid = endgame_ ? endgame_->instance.grid : opt_.abstraction->grid;
    const Translation t = translate_action(before, action, grid, [this] { return draw(); });
    if (t.event) pending_events_.push_back(*t.event);
    move = t.move;
  }
  advance_perceived(move);
  if (endgame_) {
    try {
      advance_endgame_state(endgame_->state, move, endgame_->instance.grid);
    } catch (const std::exception& e) {
      endgame_error_ = e.what();
      endgame_.reset();
      endgame_failed_ = true;
    }
  } else if (final_round) {
    final_moves_.push_back(move);
  }
}

void StrategyAgent::maybe_start_endgame(const BettingState& view) {
  if (!opt_.endgame || endgame_ || endgame_failed_) return;
  const GameSpec& spec = view.spec();
  if (view.round() != spec.num_rounds - 1) return;
  try {
    if (desync_) throw std::runtime_error("perceived history lost before the final round");
    const ActionGrid& grid = opt_.abstraction->grid;
    auto steps = trunk_steps(perceived_, grid);
    std::erase_if(steps, [&](const TrunkStep& s) { return s.round >= view.round(); });
    Endgame eg;
    eg.instance = build_endgame(*opt_.trunk, *opt_.abstraction->cards, steps, view, grid,
                                opt_.endgame_config);
    eg.solution = solve_endgame_lp(eg.instance);
    eg.state = eg.instance.start_state();
    for (const auto& m : final_moves_) advance_endgame_state(eg.state, m, eg.instance.grid);
    endgame_ = std::move(eg);
  } catch (const std::exception& e) {
    endgame_failed_ = true;
    endgame_error_ = e.what();
  }
}

Decision StrategyAgent::act(const BettingState& view) {
  sync_deals(view);
  if (!desync_ && perceived_.to_act() != seat_) desync_ = true;
  Decision d;
  d.info.true_pot = view.pot_total();
  d.info.perceived_pot = perceived_.pot_total();
  d.info.translations = std::move(pending_events_);
  pending_events_.clear();
  const ActionGrid& grid = opt_.abstraction->grid;

  maybe_start_endgame(view);
  if (endgame_) {
    try {
      const auto policy = endgame_policy(endgame_->instance, endgame_->solution, seat_,
                                         view.hole(seat_), endgame_->state);
      const int idx = rng_.sample(policy.probs);
      const AbstractMove move =
          to_abstract_move(endgame_->state, policy.actions[idx], endgame_->instance.grid);
      own_move_ = move;
      d.action = realize(view, move, grid);
      d.info.source = "endgame";
      d.info.endgame_hash = endgame_->instance.hash();
      d.info.endgame_pot = endgame_->instance.pot;
      d.info.flagged = policy.flagged || endgame_->instance.zero_reach_fallback;
      if (policy.flagged) d.info.note = "hand outside endgame range";
      else if (endgame_->instance.zero_reach_fallback) d.info.note = "zero-reach fallback";
      return d;
    } catch (const std::exception& e) {
      endgame_error_ = e.what();
      endgame_.reset();
      endgame_failed_ = true;
    }
  }

  // Trunk policy on the perceived state; the true state stands in when the
  // perceived one was lost.
  const BettingState& basis = desync_ ? view : perceived_;
  const auto actions = abstract_actions(basis, grid);
  const std::string key = infoset_key(basis, seat_, *opt_.abstraction->cards);
  std::vector<double> probs;
  if (opt_.played->contains(key) && opt_.played->at(key).size() == actions.size()) {
    probs = opt_.played->at(key);
  } else {
    probs.assign(actions.size(), 1.0 / static_cast<double>(actions.size()));
    d.info.flagged = true;
    d.info.note = "infoset " + key + " missing from strategy";
  }
  if (desync_) {
    d.info.flagged = true;
    if (d.info.note.empty()) d.info.note = "perceived state lost";
  }
  if (endgame_failed_ && opt_.endgame && view.round() == view.spec().num_rounds - 1) {
    d.info.flagged = true;
    d.info.note = "endgame unavailable: " + endgame_error_;
  }
  const int idx = rng_.sample(probs);
  const AbstractMove move = to_abstract_move(basis, actions[idx], grid);
  own_move_ = move;
  d.action = realize(view, move, grid);
  d.info.source = "trunk";
  return d;
}

std::unique_ptr<Agent> make_agent(const std::string& descriptor, const AgentContext& ctx) {
  if (!ctx.spec || !ctx.abstraction) throw std::invalid_argument("agent context is incomplete");
  if (descriptor == "uniform") return std::make_unique<UniformAgent>(ctx.abstraction->grid);
  if (descriptor == "allin") return std::make_unique<AlwaysAllInAgent>();
  if (descriptor == "call") return std::make_unique<CallingAgent>();
  const auto colon = descriptor.find(':');
  const std::string kind = descriptor.substr(0, colon);
  if (colon == std::string::npos || (kind != "cfr" && kind != "strategy")) {
    throw std::invalid_argument("unknown agent '" + descriptor + "'");
  }
  const std::string path = descriptor.substr(colon + 1);
  std::shared_ptr<const StrategyTable> trunk;
  try {
    trunk = ctx.load_table ? ctx.load_table(path)
                           : std::make_shared<const StrategyTable>(StrategyTable::load_file(path));
  } catch (const std::exception& e) {
    throw std::invalid_argument("strategy artifact '" + path + "': " + e.what());
  }
  if (trunk->meta.spec_hash != ctx.spec->hash()) {
    throw std::invalid_argument("strategy artifact '" + path + "' was built for another game");
  }
  if (trunk->meta.abstraction_hash != ctx.abstraction->hash()) {
    throw std::invalid_argument("strategy artifact '" + path +
                                "' was built for another abstraction");
  }
  StrategyAgentOptions opt;
  opt.name = descriptor;
  opt.abstraction = ctx.abstraction;
  opt.trunk = trunk;
  if (ctx.postprocess) opt.played = std::make_shared<const StrategyTable>(ctx.postprocess(*trunk));
  opt.endgame = ctx.endgame;
  opt.endgame_config = ctx.endgame_config;
  return std::make_unique<StrategyAgent>(std::move(opt));
}

}  // namespace pokerlab
