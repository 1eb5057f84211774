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

#include "pokerlab/abstraction/abstraction.hpp"

#include <fstream>
#include <stdexcept>

#include "pokerlab/abstraction/holdem_abstraction.hpp"
#include "pokerlab/util/config.hpp"
#include "pokerlab/util/hashing.hpp"

namespace pokerlab {

std::uint64_t Abstraction::hash() const {
  std::uint64_t h = derive_seed(spec_hash, grid.hash());
  return derive_seed(h, cards ? cards->hash() : 0);
}

void Abstraction::check_matches(const GameSpec& spec) const {
  if (spec.hash() != spec_hash) {
    throw std::invalid_argument("abstraction was built for a different game spec (hash " +
                                std::to_string(spec_hash) + ", game has " +
                                std::to_string(spec.hash()) + ")");
  }
}

Abstraction make_abstraction(const GameSpec& spec, ActionGrid grid,
                             std::shared_ptr<const CardAbstraction> cards) {
  return Abstraction{spec.hash(), std::move(grid), std::move(cards)};
}

Abstraction make_abstraction(const GameSpec& spec, const Config& config) {
  ActionGrid grid = build_action_grid(spec, GridConfig::from_config(config));
  const bool small = spec.hole_cards == 1 || spec.suits_irrelevant();
  const std::string kind = config.get_or("abstraction.cards", small ? "lossless" : "buckets");
  std::shared_ptr<const CardAbstraction> cards;
  if (kind == "lossless") {
    cards = std::make_shared<LosslessCardAbstraction>(spec);
  } else if (kind == "buckets") {
    if (const auto file = config.get("abstraction.bucket_file")) {
      std::ifstream in(*file);
      if (!in) throw std::runtime_error("cannot open bucket file " + *file);
      cards = std::make_shared<HoldemCardAbstraction>(HoldemCardAbstraction::load(spec, in));
    } else {
      cards = std::make_shared<HoldemCardAbstraction>(
          HoldemCardAbstraction::build(spec, HoldemAbstractionConfig::from_config(config)));
    }
  } else {
    throw std::invalid_argument("abstraction.cards must be 'lossless' or 'buckets', got '" +
                                kind + "'");
  }
  return make_abstraction(spec, std::move(grid), std::move(cards));
}

}  // namespace pokerlab
