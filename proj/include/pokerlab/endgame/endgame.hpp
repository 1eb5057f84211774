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
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pokerlab/abstraction/action_grid.hpp"
#include "pokerlab/abstraction/bucketing.hpp"
#include "pokerlab/game/betting.hpp"
#include "pokerlab/game/infoset.hpp"
#include "pokerlab/lp/sequence_form.hpp"
#include "pokerlab/solver/efg.hpp"
#include "pokerlab/solver/strategy_table.hpp"

namespace pokerlab {

// Posterior over one player's private hands given the public history.
struct RangeDistribution {
  int player = 0;
  std::vector<Hand> hands;
  // Prior times the player's own trunk action probabilities. This is the
  // likelihood the opponent conditions on after removing blocked hands.
  std::vector<double> reach;
  // Marginal posterior: reach times the opponent's compatible reach mass,
  // normalized. Sums to 1.
  std::vector<double> prob;

  int index_of(const Hand& hand) const;  // -1 when absent
};

// One decision on the abstract (perceived) path: the acting player, the
// round, the betting history before the action and the action's index
// among the abstract actions.
struct TrunkStep {
  int player = 0;
  int round = 0;
  std::string history;
  int action = 0;
};

// Walks the history of an abstract state from the start of the hand.
// Throws std::invalid_argument when an action is not an abstract action.
std::vector<TrunkStep> trunk_steps(const BettingState& abstract_state, const ActionGrid& grid);

class ZeroReachError : public std::runtime_error {
 public:
  ZeroReachError(int player, std::size_t steps)
      : std::runtime_error("history has zero trunk probability for player " +
                           std::to_string(player)),
        player(player),
        steps(steps) {}
  int player;
  std::size_t steps;
};

// Bayes ranges for both players: one pass over hands per trunk step. The
// board conflicts are removed up front; blockers between the two players
// are handled by per-card reach sums. `priors` may be empty (uniform) or
// hold one weight per hand in all_hands order for each player.
std::array<RangeDistribution, 2> compute_reach_ranges(
    const GameSpec& spec, const CardAbstraction& cards, const StrategyTable& trunk,
    const std::vector<TrunkStep>& steps, const std::vector<Card>& board,
    const std::array<std::vector<double>, 2>& priors = {});

// As above, but drops trailing steps until both ranges have mass.
struct RangeResult {
  std::array<RangeDistribution, 2> ranges;
  bool fallback = false;
  std::size_t steps_used = 0;
};
RangeResult compute_reach_ranges_with_fallback(const GameSpec& spec, const CardAbstraction& cards,
                                               const StrategyTable& trunk,
                                               const std::vector<TrunkStep>& steps,
                                               const std::vector<Card>& board);

// Equity of each of `own` hands against `opponent`, renormalizing the
// opponent's reach over hands disjoint from the own hand. Hands whose
// conditional opponent range is empty get 0.5 and `undefined` set.
struct ConditionalEquities {
  EquityVector equities;
  std::vector<bool> undefined;
};
ConditionalEquities conditional_equities(const std::vector<Card>& board,
                                         const std::vector<Hand>& own,
                                         const RangeDistribution& opponent);

struct EndgameConfig {
  std::array<int, 2> buckets{8, 8};
  // Finite bet fractions above this are removed from the endgame grid.
  double max_fraction = kAllIn;
  int max_sequences = 10'000;
};

// Final-round subgame over equity buckets. Chance deals a bucket pair with
// probability `joint`; a showdown pays `showdown` (expected win minus loss
// for player 0's bucket against player 1's) times the amount each side has
// committed.
struct EndgameInstance {
  std::shared_ptr<const GameSpec> spec;
  int round = 0;
  std::vector<Card> board;
  Chips pot = 0;  // true pot at the start of the round
  std::array<Chips, 2> stacks{};
  ActionGrid grid;
  std::array<RangeDistribution, 2> ranges;
  std::array<std::vector<double>, 2> equity;  // aligned with ranges[p].hands
  std::array<std::vector<int>, 2> bucket;     // -1 outside the range support
  std::array<int, 2> num_buckets{};
  std::vector<std::vector<double>> joint;
  std::vector<std::vector<double>> showdown;
  bool zero_reach_fallback = false;
  int max_sequences = 10'000;

  BettingState start_state() const;
  std::uint64_t hash() const;
};

// Chance joint and showdown tables from two ranges and bucket maps.
void fill_bucket_tables(EndgameInstance& instance);

// `true_state` is the real state anywhere in the final round; the pot comes
// from its completed rounds, never from the agent's perception.
EndgameInstance build_endgame(const StrategyTable& trunk, const CardAbstraction& cards,
                              const std::vector<TrunkStep>& steps, const BettingState& true_state,
                              const ActionGrid& grid, const EndgameConfig& config);

struct EndgameSolution {
  StrategyTable strategy;  // "<player>:b<bucket>:<history>"
  std::array<double, 2> value{};  // each player's expected chips from the hand start
  double pot_share_value = 0.0;    // player 0's value counting the pot as won chips
  double duality_gap = 0.0;
  double max_violation = 0.0;
  double best_response_gain = 0.0;
  std::array<int, 2> sequences{};
  int lp_rows = 0;
  int lp_columns = 0;
  long lp_iterations = 0;
  double seconds = 0.0;
};

std::string endgame_key(int player, int bucket, const std::string& history);

// Builds the endgame game; throws std::invalid_argument when a player has
// more than `max_sequences` sequences.
Efg endgame_efg(const EndgameInstance& instance);

EndgameSolution solve_endgame_lp(const EndgameInstance& instance);

// Strategy for `hand` at `state` (a state of the endgame tree). Hands
// outside the support get a uniform vector with `flagged` set. Throws
// std::out_of_range when the history is not in the endgame tree.
struct EndgamePolicy {
  std::vector<double> probs;
  std::vector<ActionDescriptor> actions;
  bool flagged = false;
};
EndgamePolicy endgame_policy(const EndgameInstance& instance, const EndgameSolution& solution,
                             int player, const Hand& hand, const BettingState& state);

// The one-shot rock-paper-scissors game seen as a subgame after player 0
// has committed to `p0` in secret. The returned player-1 strategy is an
// endgame equilibrium (value 0) that may still be exploitable in the full
// game.
struct SequentialRpsReport {
  std::vector<double> p1_strategy;
  double endgame_value = 0.0;       // player 1's value inside the subgame
  double full_game_exploitability = 0.0;
};
SequentialRpsReport sequential_rps_endgame(const std::vector<double>& p0 = {1.0 / 3, 1.0 / 3, 1.0 / 3});

// Clairvoyance game with pot 2: player 0 holds the winner or the loser with
// probability 1/2 each, player 1 a bluff catcher. Player 0 may check or
// move all-in for `bet` chips; the bet-to-pot ratio is bet / 2.
EndgameInstance clairvoyance_instance(Chips bet);

std::string instance_to_json(const EndgameInstance& instance);
EndgameInstance instance_from_json(const std::string& text);
std::string solution_to_json(const EndgameSolution& solution);

}  // namespace pokerlab
