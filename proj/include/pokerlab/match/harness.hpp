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
#include <optional>
#include <string>
#include <vector>

#include "pokerlab/game/betting.hpp"
#include "pokerlab/match/agent.hpp"
#include "pokerlab/util/stats.hpp"

namespace pokerlab {

// Cards for one hand: each seat's hole cards and the full board in deal
// order (only the part reached is shown to the agents).
struct Deal {
  std::array<std::vector<Card>, 2> hole;
  std::vector<Card> board;

  friend bool operator==(const Deal&, const Deal&) = default;
};

// Fisher-Yates over the spec's deck driven by `seed`.
Deal make_deal(const GameSpec& spec, std::uint64_t seed);

struct DecisionRecord {
  int seat = 0;
  int round = 0;
  std::string history;  // before the decision
  ActionDescriptor action;
  DecisionInfo info;
};

struct HandRecord {
  std::uint64_t hand_id = 0;
  std::uint64_t pair = 0;
  int play = 0;                     // 0 or 1 within its pair
  std::array<int, 2> side_at_seat{0, 1};  // 0 = side A
  std::array<std::string, 2> agent_at_seat;
  Deal deal;
  std::vector<ActionRecord> actions;
  std::string history;
  std::vector<Card> board_shown;
  std::vector<DecisionRecord> decisions;
  std::array<Chips, 2> result{};  // chips won per seat
  std::optional<int> forfeit_seat;
  std::string forfeit_reason;

  int seat_of_side(int side) const { return side_at_seat[0] == side ? 0 : 1; }
  Chips result_for_side(int side) const { return result[seat_of_side(side)]; }
};

// Seeds for one hand: one stream per seat.
struct HandSeeds {
  std::array<std::uint64_t, 2> agent{};
};

// Plays one hand. `agents` is indexed by seat. An exception from an agent or
// an illegal action forfeits the hand for that seat: it loses what it has
// committed.
HandRecord play_hand(std::shared_ptr<const GameSpec> spec, const std::array<Agent*, 2>& agents,
                     const Deal& deal, const HandSeeds& seeds);

struct PairResult {
  std::uint64_t pair = 0;
  std::array<Chips, 2> side_a{};  // side A's result in each play
  Chips combined() const { return side_a[0] + side_a[1]; }
};

struct DuplicateResult {
  std::string agent_a;
  std::string agent_b;
  std::uint64_t seed = 0;
  std::uint64_t spec_hash = 0;
  Chips big_blind = 1;
  std::vector<HandRecord> hands;  // two per pair, in pair order
  std::vector<PairResult> pairs;
  Chips total_a = 0;
  long long hands_played = 0;
  double bb_per_100 = 0.0;
  SampleSummary per_hand;  // side A, chips per hand
  SampleSummary per_pair;  // side A, combined chips per pair
  int forfeits = 0;
};

// One pair: the same deal played twice, side A in seat 0 first, then in
// seat 1. Agent streams differ between the two plays.
std::array<HandRecord, 2> play_duplicate_pair(std::shared_ptr<const GameSpec> spec, Agent& a,
                                              Agent& b, const Deal& deal,
                                              std::uint64_t pair_seed, std::uint64_t pair);

DuplicateResult play_duplicate_match(Agent& a, Agent& b, int n_pairs,
                                     std::shared_ptr<const GameSpec> spec, std::uint64_t seed);

// Chips per 100 hands in big blinds.
double bb_per_100(double total_chips, long long n_hands, double big_blind);

// Sum of several matches from side A's point of view, as when several
// players' results are pooled into one side.
struct GroupSummary {
  Chips total = 0;
  long long hands = 0;
  double bb_per_100 = 0.0;
  Interval bb_per_100_ci;  // normal approximation over pairs
};
GroupSummary summarize_group(const std::vector<const DuplicateResult*>& matches);

struct PerceptionPoint {
  int seat = 0;
  Chips true_pot = 0;
  Chips perceived_pot = 0;
  Chips divergence = 0;  // true minus perceived
  bool translated = false;  // a translation event arrived with this decision
  bool flagged = false;
};

// Per decision of the seat (or both seats when `seat` < 0), in order.
std::vector<PerceptionPoint> perception_trace(const HandRecord& record, int seat,
                                              Chips threshold);

struct OffTreeHand {
  std::uint64_t hand_id = 0;
  Chips max_divergence = 0;  // absolute
  int translation_events = 0;
};

struct OffTreeReport {
  long long hands = 0;
  long long translation_events = 0;
  long long randomized_events = 0;
  long long mapped_down = 0;
  long long hands_with_divergence = 0;
  std::vector<double> f_values;
  std::array<long long, 10> f_histogram{};  // tenths of [0, 1]
  std::vector<OffTreeHand> per_hand;
  std::vector<OffTreeHand> worst;  // by max divergence, at most `top`
};

OffTreeReport off_tree_report(const std::vector<HandRecord>& records, std::size_t top = 10);

struct VarianceComparison {
  long long n = 0;
  SampleSummary duplicate;    // per-pair means, seats swapped on one deal
  SampleSummary independent;  // means of two hands on independent deals
  Interval duplicate_ci;
  Interval independent_ci;
  // One-sided test statistic for var_independent > var_duplicate.
  double z = 0.0;
  bool duplicate_lower_95 = false;
};

VarianceComparison variance_comparison(Agent& a, Agent& b, int n,
                                       std::shared_ptr<const GameSpec> spec, std::uint64_t seed);

}  // namespace pokerlab
