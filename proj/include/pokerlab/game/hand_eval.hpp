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

#include "pokerlab/game/cards.hpp"

namespace pokerlab {

enum class HandCategory : std::uint8_t {
  kHighCard = 0,
  kPair,
  kTwoPair,
  kTrips,
  kStraight,
  kFlush,
  kFullHouse,
  kQuads,
  kStraightFlush,
};

// Totally ordered strength of the best hand that can be formed from 1 to 7
// cards. Straights and flushes need five cards, so with fewer cards the
// ordering degenerates to pairs over high cards, which is exactly the
// Kuhn and Leduc showdown rule.
//
// Layout: category << 20 | five 4-bit rank slots (rank + 1, 0 = absent).
using HandValue = std::uint32_t;

HandValue evaluate_hand(std::span<const Card> cards);

inline HandCategory category_of(HandValue v) {
  return static_cast<HandCategory>(v >> 20);
}

enum class Showdown { kWin, kLose, kTie };

// Result for the holder of hand1. Throws std::invalid_argument when any card
// appears twice across the three groups.
Showdown evaluate_showdown(std::span<const Card> board,
                           std::span<const Card> hand1,
                           std::span<const Card> hand2);

}  // namespace pokerlab
