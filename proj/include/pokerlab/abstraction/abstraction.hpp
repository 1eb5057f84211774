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
#include <memory>
#include <string>

#include "pokerlab/abstraction/action_grid.hpp"
#include "pokerlab/game/game_spec.hpp"
#include "pokerlab/game/infoset.hpp"

namespace pokerlab {

class Config;

// Everything that turns the real game into the abstract one.
struct Abstraction {
  std::uint64_t spec_hash = 0;
  ActionGrid grid;
  std::shared_ptr<const CardAbstraction> cards;

  std::uint64_t hash() const;
  // Throws std::invalid_argument when built for a different game.
  void check_matches(const GameSpec& spec) const;
};

// Lossless cards for small games, bucketed cards for hold'em decks.
// Reads [abstraction] keys; a `bucket_file` key loads saved buckets.
Abstraction make_abstraction(const GameSpec& spec, const Config& config);
Abstraction make_abstraction(const GameSpec& spec, ActionGrid grid,
                             std::shared_ptr<const CardAbstraction> cards);

}  // namespace pokerlab
