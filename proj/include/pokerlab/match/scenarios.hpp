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
#include <vector>

#include "pokerlab/match/harness.hpp"

namespace pokerlab {

// Scripted off-tree hand in river hold'em: the opponent opens to a size
// between calling and the smallest grid raise; the agent (big blind) holds
// a trunk that checks behind a limp, so a mapped-down translation leaves
// it believing the pot is smaller than it is. The agent's stream seed is
// searched until the translation maps down.
struct OffTreeScenarioOptions {
  Chips open_to = 250;
  int max_seeds = 1000;
  EndgameConfig endgame{{6, 6}};
};

struct OffTreeScenario {
  std::uint64_t agent_seed = 0;
  int seeds_tried = 0;
  HandRecord record;
  std::optional<TranslationEvent> event;
  std::vector<PerceptionPoint> trace;  // the agent's decisions
  Chips river_true_pot = 0;
  Chips river_perceived_pot = 0;
  std::optional<Chips> endgame_pot;
};

OffTreeScenario run_off_tree_scenario(const OffTreeScenarioOptions& options = {});

}  // namespace pokerlab
