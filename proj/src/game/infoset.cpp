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

#include "pokerlab/game/infoset.hpp"

#include <algorithm>
#include <vector>

#include "pokerlab/util/hashing.hpp"

namespace pokerlab {

std::uint64_t CardAbstraction::hash() const { return fnv1a(describe()); }

namespace {

std::string canonical(std::span<const Card> cards, bool ranks_only) {
  std::vector<Card> sorted(cards.begin(), cards.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::string out;
  for (Card c : sorted) {
    if (ranks_only) out += kRankChars[c.rank()];
    else out += to_string(c);
  }
  return out;
}

}  // namespace

std::string LosslessCardAbstraction::label(int, std::span<const Card> hole,
                                           std::span<const Card> board) const {
  std::string out = canonical(hole, ranks_only_);
  if (!board.empty()) out += "|" + canonical(board, ranks_only_);
  return out;
}

std::string LosslessCardAbstraction::describe() const {
  return ranks_only_ ? "lossless ranks" : "lossless cards";
}

std::string infoset_key(const BettingState& state, int player, const CardAbstraction& cards) {
  std::string key = std::to_string(player);
  key += ':';
  key += cards.label(state.round(), state.hole(player), state.board());
  key += ':';
  key += state.history_string();
  return key;
}

int infoset_round(const std::string& key) {
  const auto pos = key.rfind(':');
  const auto from = pos == std::string::npos ? key.begin() : key.begin() + pos + 1;
  return static_cast<int>(std::count(from, key.end(), '/'));
}

}  // namespace pokerlab
