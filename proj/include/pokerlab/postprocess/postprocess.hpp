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

#include <cstdint>
#include <string>
#include <vector>

#include "pokerlab/solver/strategy_table.hpp"
#include "pokerlab/util/stats.hpp"

namespace pokerlab {

class Config;

// Zeroes entries below theta and renormalizes. When every entry is below
// theta only the (first) largest survives. Throws for theta outside [0, 1).
std::vector<double> threshold_and_renormalize(const std::vector<double>& probs, double theta);

// One-hot on the largest entry, lowest index on ties.
std::vector<double> purify(const std::vector<double>& probs);

struct ThresholdSchedule {
  std::vector<double> per_round;

  double theta(int round) const;  // 0 for rounds without an entry
  bool nondecreasing() const;
  std::string describe() const;

  // [postprocess] thresholds = comma separated list, one per round.
  static ThresholdSchedule from_config(const Config& config);
};

// Thresholds every infoset with its round's theta; rounds come from the key.
StrategyTable apply_schedule(const StrategyTable& table, const ThresholdSchedule& schedule);

struct PurificationTrial {
  double purified = 0.0;
  double unpurified = 0.0;
};

struct PurificationSummary {
  std::size_t games = 0;
  double mean_purified = 0.0;
  double mean_unpurified = 0.0;
  SampleSummary difference;  // purified - unpurified
  Interval difference_ci;    // 95%
  std::vector<PurificationTrial> trials;
};

// Random 4x4 zero-sum games with uniform [0,1) payoffs. In each, the row
// player solves a random 3x3 restriction and plays that solution (mixed or
// purified) against the column player's full-game equilibrium strategy.
// Trial i uses a seed derived from (seed, i).
PurificationSummary matrix_purification_experiment(std::size_t n_games, std::uint64_t seed,
                                                   bool keep_trials = false,
                                                   int full_size = 4, int abstract_size = 3);

}  // namespace pokerlab
