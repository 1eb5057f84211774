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

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pokerlab/game/betting.hpp"
#include "pokerlab/game/game_spec.hpp"

namespace pokerlab {

class Config;

enum class Situation { kFirstBet = 0, kRaise = 1 };

inline constexpr double kAllIn = std::numeric_limits<double>::infinity();

// Nearest integer, ties toward zero-side (down).
Chips round_chips(double value);

// Pot-fraction bet sizes per round and situation. Each list is strictly
// increasing and ends with the all-in token (kAllIn).
class ActionGrid {
 public:
  ActionGrid() = default;
  ActionGrid(std::vector<std::array<std::vector<double>, 2>> per_round, int max_raises);

  int num_rounds() const { return static_cast<int>(per_round_.size()); }
  const std::vector<double>& fractions(int round, Situation situation) const;
  int max_raises_per_round() const { return max_raises_; }

  // Drops finite fractions above `max_fraction` from every list (all-in stays).
  ActionGrid without_fractions_above(double max_fraction) const;

  std::string describe() const;
  std::uint64_t hash() const;

 private:
  std::vector<std::array<std::vector<double>, 2>> per_round_;
  int max_raises_ = 4;
};

struct GridConfig {
  // Tokens such as "0.1", "0.5", "1", "allin"; indexed [round][situation].
  // Empty inner lists fall back to `default_first` / `default_raise`.
  std::vector<std::string> default_first = {"0.5", "1", "allin"};
  std::vector<std::string> default_raise = {"1", "allin"};
  std::vector<std::array<std::vector<std::string>, 2>> per_round;
  int max_raises = 4;

  // [abstraction] keys: bet_fractions, raise_fractions, bet_fractions_r<k>,
  // raise_fractions_r<k>, max_raises.
  static GridConfig from_config(const Config& config);
};

// Throws std::invalid_argument on an empty list, a non-positive or
// non-finite fraction, or an unknown token.
ActionGrid build_action_grid(const GameSpec& spec, const GridConfig& config);

// Bet sizes (chips beyond a call) for a raw pot and stack:
// round(fraction * pot) clamped to [min_bet, stack], merged when equal.
std::vector<Chips> concrete_bet_sizes(const std::vector<double>& fractions,
                                      Chips pot, Chips stack, Chips min_bet);

Situation situation_of(const BettingState& state);

struct GridAction {
  double fraction = 0.0;  // smallest grid fraction that produced this size
  ActionDescriptor action;
};

// Abstract raise options at a decision state: grid fractions applied to the
// state's pot (after calling), clamped to the legal raise interval, merged.
std::vector<GridAction> grid_raises(const BettingState& state, const ActionGrid& grid);

// Abstract actions: fold (when facing a bet), check or call, then raises in
// increasing size. Fixed-limit games use their legal actions directly.
std::vector<ActionDescriptor> abstract_actions(const BettingState& state,
                                               const ActionGrid& grid);

// Chips a raise adds beyond calling, as a fraction of the pot after a call.
double pot_fraction(const BettingState& state, const ActionDescriptor& action);

// Intent expressed against the grid rather than in chips, so it can be
// replayed in another state (for example a misperceived one).
struct AbstractMove {
  enum class Kind { kFold, kPassive, kRaise } kind = Kind::kPassive;
  double fraction = 0.0;  // raises only; kAllIn for all-in

  friend bool operator==(const AbstractMove&, const AbstractMove&) = default;
};

AbstractMove to_abstract_move(const BettingState& state, const ActionDescriptor& action,
                              const ActionGrid& grid);

// Concrete legal action for `move` in `state`. Folding when checking is
// free becomes a check; raising when no raise is legal becomes check/call.
ActionDescriptor realize(const BettingState& state, const AbstractMove& move,
                         const ActionGrid& grid);

}  // namespace pokerlab
