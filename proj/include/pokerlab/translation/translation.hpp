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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pokerlab/abstraction/action_grid.hpp"
#include "pokerlab/game/betting.hpp"
#include "pokerlab/util/rng.hpp"

namespace pokerlab {

// Probability of mapping a bet of pot fraction x down to A rather than up to
// B. Requires A < B and A <= x <= B; throws std::invalid_argument otherwise.
double pseudo_harmonic_probability(double a, double b, double x);

struct TranslationEvent {
  double x = 0.0;
  double a = 0.0;
  double b = 0.0;
  double f = 1.0;
  double u = 0.0;
  bool mapped_down = true;
  bool randomized = false;  // false for exact matches and extremes
  AbstractMove chosen;
};

struct Translation {
  AbstractMove move;
  // Set only for raises that were not exactly on the grid.
  std::optional<TranslationEvent> event;
};

// Neighbouring sizes for an observed raise: pot fractions of the passive
// action (0) and of each abstract raise available in `state`, paired with
// the grid move that produces them.
struct TranslationCandidate {
  double fraction = 0.0;
  AbstractMove move;
};
std::vector<TranslationCandidate> translation_candidates(const BettingState& state,
                                                         const ActionGrid& grid);

// Interprets the opponent's real action in `state` (the true state, so pot
// fractions use the true pot). Folds and passive actions pass through.
// Raises strictly between two candidates draw one uniform from `rng`.
Translation translate_action(const BettingState& state, const ActionDescriptor& action,
                             const ActionGrid& grid, Rng& rng);
// Same, with the uniform supplied by `draw` (called at most once).
Translation translate_action(const BettingState& state, const ActionDescriptor& action,
                             const ActionGrid& grid, const std::function<double()>& draw);

}  // namespace pokerlab
