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

#include "pokerlab/game/hand_eval.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace pokerlab {
namespace {

constexpr std::uint32_t kWheelMask = (1u << 12) | 0xFu;  // A2345

// Highest rank of the top card of a 5-run in mask, or -1.
int straight_high(std::uint32_t mask) {
  for (int high = 12; high >= 4; --high) {
    const std::uint32_t run = 0x1Fu << (high - 4);
    if ((mask & run) == run) return high;
  }
  if ((mask & kWheelMask) == kWheelMask) return 3;
  return -1;
}

HandValue pack(HandCategory cat, std::span<const int> ranks) {
  HandValue v = static_cast<HandValue>(cat) << 20;
  for (int i = 0; i < 5; ++i) {
    const HandValue slot = i < static_cast<int>(ranks.size())
                               ? static_cast<HandValue>(ranks[i] + 1)
                               : 0;
    v |= slot << (16 - 4 * i);
  }
  return v;
}

// Appends up to `count` highest ranks from mask to out.
void take_top(std::uint32_t mask, int count, std::array<int, 5>& out, int& n) {
  for (int r = 12; r >= 0 && count > 0; --r) {
    if (mask & (1u << r)) {
      out[n++] = r;
      --count;
    }
  }
}

}  // namespace

HandValue evaluate_hand(std::span<const Card> cards) {
  std::array<int, kNumRanks> counts{};
  std::array<std::uint32_t, kNumSuits> suit_masks{};
  std::uint32_t rank_mask = 0;
  for (Card c : cards) {
    ++counts[c.rank()];
    suit_masks[c.suit()] |= 1u << c.rank();
    rank_mask |= 1u << c.rank();
  }

  std::array<int, 5> ranks{};
  int n = 0;

  for (std::uint32_t sm : suit_masks) {
    if (std::popcount(sm) >= 5) {
      if (int high = straight_high(sm); high >= 0) {
        ranks[n++] = high;
        return pack(HandCategory::kStraightFlush, std::span(ranks.data(), n));
      }
    }
  }

  int quad = -1, trip = -1, second_trip = -1;
  int pairs[3] = {-1, -1, -1};
  int num_pairs = 0;
  for (int r = 12; r >= 0; --r) {
    if (counts[r] == 4 && quad < 0) {
      quad = r;
    } else if (counts[r] == 3) {
      if (trip < 0) trip = r;
      else if (second_trip < 0) second_trip = r;
    } else if (counts[r] == 2 && num_pairs < 3) {
      pairs[num_pairs++] = r;
    }
  }

  if (quad >= 0) {
    ranks[n++] = quad;
    take_top(rank_mask & ~(1u << quad), 1, ranks, n);
    return pack(HandCategory::kQuads, std::span(ranks.data(), n));
  }
  if (trip >= 0 && (second_trip >= 0 || num_pairs > 0)) {
    const int pair_rank = std::max(second_trip, pairs[0]);
    ranks[n++] = trip;
    ranks[n++] = pair_rank;
    return pack(HandCategory::kFullHouse, std::span(ranks.data(), n));
  }
  for (std::uint32_t sm : suit_masks) {
    if (std::popcount(sm) >= 5) {
      take_top(sm, 5, ranks, n);
      return pack(HandCategory::kFlush, std::span(ranks.data(), n));
    }
  }
  if (int high = straight_high(rank_mask); high >= 0) {
    ranks[n++] = high;
    return pack(HandCategory::kStraight, std::span(ranks.data(), n));
  }
  if (trip >= 0) {
    ranks[n++] = trip;
    take_top(rank_mask & ~(1u << trip), 2, ranks, n);
    return pack(HandCategory::kTrips, std::span(ranks.data(), n));
  }
  if (num_pairs >= 2) {
    ranks[n++] = pairs[0];
    ranks[n++] = pairs[1];
    take_top(rank_mask & ~(1u << pairs[0]) & ~(1u << pairs[1]), 1, ranks, n);
    return pack(HandCategory::kTwoPair, std::span(ranks.data(), n));
  }
  if (num_pairs == 1) {
    ranks[n++] = pairs[0];
    take_top(rank_mask & ~(1u << pairs[0]), 3, ranks, n);
    return pack(HandCategory::kPair, std::span(ranks.data(), n));
  }
  take_top(rank_mask, 5, ranks, n);
  return pack(HandCategory::kHighCard, std::span(ranks.data(), n));
}

Showdown evaluate_showdown(std::span<const Card> board,
                           std::span<const Card> hand1,
                           std::span<const Card> hand2) {
  CardSet seen;
  std::array<Card, 7> cards1{}, cards2{};
  std::size_t n1 = 0, n2 = 0;
  auto add = [&](Card c) {
    if (seen.contains(c)) {
      throw std::invalid_argument("duplicate card " + to_string(c));
    }
    seen.insert(c);
  };
  for (Card c : board) add(c);
  for (Card c : hand1) add(c);
  for (Card c : hand2) add(c);
  if (board.size() + std::max(hand1.size(), hand2.size()) > 7) {
    throw std::invalid_argument("showdown with more than seven cards per player");
  }
  for (Card c : board) cards1[n1++] = c, cards2[n2++] = c;
  for (Card c : hand1) cards1[n1++] = c;
  for (Card c : hand2) cards2[n2++] = c;
  const HandValue v1 = evaluate_hand(std::span(cards1.data(), n1));
  const HandValue v2 = evaluate_hand(std::span(cards2.data(), n2));
  if (v1 > v2) return Showdown::kWin;
  if (v1 < v2) return Showdown::kLose;
  return Showdown::kTie;
}

}  // namespace pokerlab
