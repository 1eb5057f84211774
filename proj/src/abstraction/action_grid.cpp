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

#include "pokerlab/abstraction/action_grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pokerlab/util/config.hpp"
#include "pokerlab/util/hashing.hpp"

namespace pokerlab {

Chips round_chips(double value) {
  return static_cast<Chips>(std::ceil(value - 0.5));
}

ActionGrid::ActionGrid(std::vector<std::array<std::vector<double>, 2>> per_round,
                       int max_raises)
    : per_round_(std::move(per_round)), max_raises_(max_raises) {}

const std::vector<double>& ActionGrid::fractions(int round, Situation situation) const {
  if (round < 0 || round >= num_rounds()) {
    throw std::out_of_range("action grid has no round " + std::to_string(round));
  }
  return per_round_[round][static_cast<int>(situation)];
}

ActionGrid ActionGrid::without_fractions_above(double max_fraction) const {
  ActionGrid copy = *this;
  for (auto& round : copy.per_round_) {
    for (auto& list : round) {
      std::erase_if(list, [&](double f) { return std::isfinite(f) && f > max_fraction; });
    }
  }
  return copy;
}

std::string ActionGrid::describe() const {
  std::ostringstream out;
  out << "max_raises = " << max_raises_ << '\n';
  for (int r = 0; r < num_rounds(); ++r) {
    for (int s = 0; s < 2; ++s) {
      out << (s == 0 ? "bet" : "raise") << "_r" << r << " =";
      for (double f : per_round_[r][s]) {
        if (std::isinf(f)) out << " allin";
        else out << ' ' << f;
      }
      out << '\n';
    }
  }
  return out.str();
}

std::uint64_t ActionGrid::hash() const { return fnv1a(describe()); }

GridConfig GridConfig::from_config(const Config& config) {
  GridConfig g;
  if (config.has("abstraction.bet_fractions")) {
    g.default_first = config.get_list("abstraction.bet_fractions");
  }
  if (config.has("abstraction.raise_fractions")) {
    g.default_raise = config.get_list("abstraction.raise_fractions");
  }
  g.max_raises = static_cast<int>(config.get_int("abstraction.max_raises", g.max_raises));
  for (int r = 0; r < 8; ++r) {
    const auto first = config.get_list("abstraction.bet_fractions_r" + std::to_string(r));
    const auto raise = config.get_list("abstraction.raise_fractions_r" + std::to_string(r));
    if (first.empty() && raise.empty()) continue;
    if (static_cast<int>(g.per_round.size()) <= r) g.per_round.resize(r + 1);
    g.per_round[r][0] = first;
    g.per_round[r][1] = raise;
  }
  return g;
}

namespace {

std::vector<double> parse_fractions(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw std::invalid_argument("action grid: empty fraction list");
  std::vector<double> out;
  for (const auto& t : tokens) {
    if (t == "allin" || t == "all-in") continue;
    double f;
    try {
      std::size_t used = 0;
      f = std::stod(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw std::invalid_argument("action grid: bad fraction '" + t + "'");
    }
    if (!std::isfinite(f) || f <= 0.0) {
      throw std::invalid_argument("action grid: fraction must be positive and finite: " + t);
    }
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.push_back(kAllIn);
  return out;
}

}  // namespace

ActionGrid build_action_grid(const GameSpec& spec, const GridConfig& config) {
  std::vector<std::array<std::vector<double>, 2>> rounds(spec.num_rounds);
  for (int r = 0; r < spec.num_rounds; ++r) {
    for (int s = 0; s < 2; ++s) {
      const std::vector<std::string>* tokens = s == 0 ? &config.default_first : &config.default_raise;
      if (r < static_cast<int>(config.per_round.size()) && !config.per_round[r][s].empty()) {
        tokens = &config.per_round[r][s];
      }
      rounds[r][s] = parse_fractions(*tokens);
    }
  }
  if (config.max_raises < 1) throw std::invalid_argument("action grid: max_raises must be >= 1");
  return ActionGrid(std::move(rounds), config.max_raises);
}

std::vector<Chips> concrete_bet_sizes(const std::vector<double>& fractions, Chips pot,
                                      Chips stack, Chips min_bet) {
  std::vector<Chips> out;
  for (double f : fractions) {
    Chips size = std::isinf(f) ? stack : round_chips(f * static_cast<double>(pot));
    size = std::clamp(size, std::min(min_bet, stack), stack);
    if (out.empty() || size > out.back()) out.push_back(size);
  }
  return out;
}

Situation situation_of(const BettingState& state) {
  const int p = state.to_act();
  return (state.raises_this_round() == 0 && state.to_call(p) == 0) ? Situation::kFirstBet
                                                                    : Situation::kRaise;
}

std::vector<GridAction> grid_raises(const BettingState& state, const ActionGrid& grid) {
  std::vector<GridAction> out;
  const LegalActions legal = legal_actions(state);
  if (!legal.raise) return out;
  if (state.raises_this_round() >= grid.max_raises_per_round()) return out;
  const int p = state.to_act();
  const Chips facing = state.total_committed(1 - p);
  const double basis = static_cast<double>(state.pot_total() + state.to_call(p));
  for (double f : grid.fractions(state.round(), situation_of(state))) {
    Chips to = std::isinf(f) ? legal.raise->max_to : facing + round_chips(f * basis);
    to = std::clamp(to, legal.raise->min_to, legal.raise->max_to);
    if (out.empty() || to > out.back().action.amount) {
      out.push_back({f, ActionDescriptor::raise_to(to)});
    }
  }
  return out;
}

std::vector<ActionDescriptor> abstract_actions(const BettingState& state,
                                               const ActionGrid& grid) {
  const LegalActions legal = legal_actions(state);
  if (state.spec().is_limit()) {
    return legal.descriptors();
  }
  std::vector<ActionDescriptor> out;
  if (legal.empty()) return out;
  if (legal.fold) out.push_back(ActionDescriptor::fold());
  out.push_back(legal.check ? ActionDescriptor::check() : ActionDescriptor::call());
  for (const auto& g : grid_raises(state, grid)) out.push_back(g.action);
  return out;
}

double pot_fraction(const BettingState& state, const ActionDescriptor& action) {
  if (action.kind != ActionKind::kRaise) return 0.0;
  const int p = state.to_act();
  const Chips facing = state.total_committed(1 - p);
  const double basis = static_cast<double>(state.pot_total() + state.to_call(p));
  return static_cast<double>(action.amount - facing) / basis;
}

AbstractMove to_abstract_move(const BettingState& state, const ActionDescriptor& action,
                              const ActionGrid& grid) {
  switch (action.kind) {
    case ActionKind::kFold:
      return {AbstractMove::Kind::kFold, 0.0};
    case ActionKind::kCheck:
    case ActionKind::kCall:
      return {AbstractMove::Kind::kPassive, 0.0};
    case ActionKind::kRaise:
      break;
  }
  if (state.spec().is_limit()) return {AbstractMove::Kind::kRaise, 0.0};
  for (const auto& g : grid_raises(state, grid)) {
    if (g.action.amount == action.amount) {
      return {AbstractMove::Kind::kRaise, g.action.amount == legal_actions(state).raise->max_to
                                              ? kAllIn
                                              : g.fraction};
    }
  }
  const LegalActions legal = legal_actions(state);
  if (legal.raise && action.amount == legal.raise->max_to) {
    return {AbstractMove::Kind::kRaise, kAllIn};
  }
  return {AbstractMove::Kind::kRaise, pot_fraction(state, action)};
}

ActionDescriptor realize(const BettingState& state, const AbstractMove& move,
                         const ActionGrid& grid) {
  const LegalActions legal = legal_actions(state);
  const ActionDescriptor passive = legal.check ? ActionDescriptor::check() : ActionDescriptor::call();
  switch (move.kind) {
    case AbstractMove::Kind::kFold:
      return legal.fold ? ActionDescriptor::fold() : passive;
    case AbstractMove::Kind::kPassive:
      return passive;
    case AbstractMove::Kind::kRaise:
      break;
  }
  if (!legal.raise) return passive;
  if (state.spec().is_limit()) return ActionDescriptor::raise_to(legal.raise->min_to);
  if (std::isinf(move.fraction)) return ActionDescriptor::raise_to(legal.raise->max_to);
  const int p = state.to_act();
  const Chips facing = state.total_committed(1 - p);
  const double basis = static_cast<double>(state.pot_total() + state.to_call(p));
  const Chips to = facing + round_chips(move.fraction * basis);
  (void)grid;
  return ActionDescriptor::raise_to(std::clamp(to, legal.raise->min_to, legal.raise->max_to));
}

}  // namespace pokerlab
