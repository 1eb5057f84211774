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

#include "pokerlab/translation/translation.hpp"

#include <cmath>
#include <stdexcept>

namespace pokerlab {

double pseudo_harmonic_probability(double a, double b, double x) {
  if (!(a < b)) throw std::invalid_argument("pseudo_harmonic_probability: need A < B");
  if (x < a || x > b) throw std::invalid_argument("pseudo_harmonic_probability: x outside [A, B]");
  if (std::isinf(b)) return 1.0;
  return ((b - x) * (1.0 + a)) / ((b - a) * (1.0 + x));
}

std::vector<TranslationCandidate> translation_candidates(const BettingState& state,
                                                         const ActionGrid& grid) {
  std::vector<TranslationCandidate> out;
  out.push_back({0.0, {AbstractMove::Kind::kPassive, 0.0}});
  const LegalActions legal = legal_actions(state);
  for (const auto& g : grid_raises(state, grid)) {
    const bool all_in = legal.raise && g.action.amount == legal.raise->max_to;
    out.push_back({pot_fraction(state, g.action),
                   {AbstractMove::Kind::kRaise, all_in ? kAllIn : g.fraction}});
  }
  return out;
}

Translation translate_action(const BettingState& state, const ActionDescriptor& action,
                             const ActionGrid& grid, Rng& rng) {
  return translate_action(state, action, grid, [&rng] { return rng.uniform(); });
}

Translation translate_action(const BettingState& state, const ActionDescriptor& action,
                             const ActionGrid& grid, const std::function<double()>& draw) {
  if (action.kind == ActionKind::kFold) return {{AbstractMove::Kind::kFold, 0.0}, std::nullopt};
  if (action.passive()) return {{AbstractMove::Kind::kPassive, 0.0}, std::nullopt};
  if (state.spec().is_limit()) return {{AbstractMove::Kind::kRaise, 0.0}, std::nullopt};
  if (grid.num_rounds() == 0) throw std::invalid_argument("translate_action: empty action grid");

  const auto candidates = translation_candidates(state, grid);
  TranslationEvent ev;
  ev.x = pot_fraction(state, action);

  for (const auto& c : candidates) {
    if (c.move.kind == AbstractMove::Kind::kRaise && realize(state, c.move, grid) == action) {
      return {c.move, std::nullopt};
    }
  }

  std::size_t hi = 0;
  while (hi < candidates.size() && candidates[hi].fraction < ev.x) ++hi;
  if (hi == candidates.size()) {
    // Larger than every abstract size: map to the largest.
    const auto& top = candidates.back();
    ev.a = ev.b = top.fraction;
    ev.f = 1.0;
    ev.chosen = top.move;
    return {top.move, ev};
  }
  const auto& lo_c = candidates[hi - 1];
  const auto& hi_c = candidates[hi];
  ev.a = lo_c.fraction;
  ev.b = hi_c.fraction;
  ev.f = pseudo_harmonic_probability(ev.a, ev.b, ev.x);
  ev.randomized = true;
  ev.u = draw();
  ev.mapped_down = ev.u < ev.f;
  ev.chosen = ev.mapped_down ? lo_c.move : hi_c.move;
  return {ev.chosen, ev};
}

}  // namespace pokerlab
