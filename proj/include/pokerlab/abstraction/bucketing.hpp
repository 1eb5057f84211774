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
#include <span>
#include <string>
#include <vector>

#include "pokerlab/game/cards.hpp"
#include "pokerlab/game/game_spec.hpp"

namespace pokerlab {

using Hand = std::vector<Card>;

struct EquityEntry {
  Hand hand;
  double equity = 0.0;  // P(win) + P(tie) / 2
  double weight = 1.0;  // probability mass used for percentile splitting
};

using EquityVector = std::vector<EquityEntry>;

struct BucketAssignment {
  std::vector<int> bucket;  // aligned with the input entries
  int num_buckets = 0;      // nonempty buckets, ids 0..num_buckets-1
  // Largest equity in each bucket; a new equity e falls in the first bucket
  // whose upper bound is >= e.
  std::vector<double> upper;
};

// Splits hands sorted by equity into at most K groups of roughly equal
// mass. Hands with equal equity always share a bucket.
BucketAssignment bucket_by_equity_percentiles(const EquityVector& equities, int k);

int bucket_for_equity(const std::vector<double>& upper, double equity);

// All hands of `hole_cards` cards from the spec's deck avoiding `dead`, in
// increasing card order.
std::vector<Hand> all_hands(const GameSpec& spec, int hole_cards, CardSet dead);

// Equity of each hand at showdown on a complete board against an opponent
// drawn from `hands` with the given weights, excluding combinations that
// share a card with the hand. Uses per-card running sums, so the cost is
// linear in the number of hands after sorting. Hands with no compatible
// opponent mass get 0.5 and are reported in `undefined`.
struct ShowdownEquities {
  std::vector<double> equity;
  std::vector<bool> undefined;
};
ShowdownEquities showdown_equities(std::span<const Card> board, const std::vector<Hand>& hands,
                                   std::span<const double> weights);

// Equity against a uniformly random opponent hand with the rest of the
// board rolled out exhaustively. `board` may be incomplete.
EquityVector rollout_equities(const GameSpec& spec, std::span<const Card> board);

}  // namespace pokerlab
