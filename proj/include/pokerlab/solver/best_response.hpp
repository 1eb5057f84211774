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

#include <vector>

#include "pokerlab/solver/efg.hpp"
#include "pokerlab/solver/strategy_table.hpp"

namespace pokerlab {

// Behavior strategy for every infoset of `efg`, indexed by infoset id.
using Profile = std::vector<std::vector<double>>;

// Looks up every infoset owned by `player` (or both when player < 0).
// Throws std::out_of_range naming the first missing key, and
// std::invalid_argument on an action-count mismatch.
Profile profile_from_table(const Efg& efg, const StrategyTable& table, int player = -1);
Profile merge_profiles(const Efg& efg, const Profile& p0, const Profile& p1);

// Exact expected payoff to player 0.
double expected_value(const Efg& efg, const Profile& profile);
double expected_value(const Efg& efg, const StrategyTable& p0, const StrategyTable& p1);

// Value to `player` of a best response against the opponent's strategy in
// `profile` (player's own entries are ignored). Needs perfect recall.
double best_response_value(const Efg& efg, const Profile& profile, int player);
double best_response_value(const Efg& efg, const StrategyTable& opponent, int player);

// Best-response pure strategy for `player` as a profile (other entries empty).
Profile best_response(const Efg& efg, const Profile& profile, int player);

// (BR value against player 0 + BR value against player 1) / 2.
double exploitability(const Efg& efg, const Profile& profile);
double exploitability(const Efg& efg, const StrategyTable& table);

}  // namespace pokerlab
