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

#include <json.hpp>

#include "pokerlab/abstraction/action_grid.hpp"
#include "pokerlab/game/betting.hpp"
#include "pokerlab/game/cards.hpp"
#include "pokerlab/game/game_spec.hpp"

namespace pokerlab {

using Json = nlohmann::json;

Json spec_to_json(const GameSpec& spec);
GameSpec spec_from_json(const Json& j);

// Fractions as numbers, all-in as the string "allin".
Json grid_to_json(const ActionGrid& grid);
ActionGrid grid_from_json(const Json& j);

Json cards_to_json(const std::vector<Card>& cards);  // "AsKd"
std::vector<Card> cards_from_json(const Json& j);

Json action_to_json(const ActionDescriptor& action);
ActionDescriptor action_from_json(const Json& j);

Json legal_to_json(const LegalActions& legal);

}  // namespace pokerlab
