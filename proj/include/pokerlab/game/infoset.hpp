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

#include "pokerlab/game/betting.hpp"
#include "pokerlab/game/cards.hpp"
#include "pokerlab/game/game_spec.hpp"

namespace pokerlab {

// Maps a player's private view in one round to a label. Labels may merge
// distinct card combinations; they only ever depend on the player's own
// hole cards and the public board.
class CardAbstraction {
 public:
  virtual ~CardAbstraction() = default;
  virtual std::string label(int round, std::span<const Card> hole,
                            std::span<const Card> board) const = 0;
  virtual std::string describe() const = 0;
  std::uint64_t hash() const;
};

// Canonical cards with no merging beyond suit-blindness in games where
// suits can never matter (rank characters only, e.g. "K" or "K|Q").
class LosslessCardAbstraction final : public CardAbstraction {
 public:
  explicit LosslessCardAbstraction(const GameSpec& spec) : ranks_only_(spec.suits_irrelevant()) {}
  std::string label(int round, std::span<const Card> hole,
                    std::span<const Card> board) const override;
  std::string describe() const override;

 private:
  bool ranks_only_;
};

// "<player>:<label>:<history>", with the label for the state's round.
std::string infoset_key(const BettingState& state, int player, const CardAbstraction& cards);

// Round of an infoset key: the number of '/' in its history part.
int infoset_round(const std::string& key);

}  // namespace pokerlab
