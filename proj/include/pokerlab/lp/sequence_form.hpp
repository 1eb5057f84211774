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

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "pokerlab/lp/simplex.hpp"
#include "pokerlab/solver/best_response.hpp"
#include "pokerlab/solver/efg.hpp"

namespace pokerlab {

// Sequence-form representation of a perfect-recall game. Sequence 0 of
// each player is the empty sequence; infoset I's actions own the
// consecutive sequences first_seq[I] .. first_seq[I] + |A(I)| - 1.
struct SequenceForm {
  std::array<int, 2> num_sequences{1, 1};
  std::vector<int> first_seq;   // per infoset
  std::vector<int> parent_seq;  // per infoset, in its owner's sequences
  std::vector<int> num_actions;  // per infoset
  std::array<std::vector<int>, 2> infosets;
  // (seq0, seq1) -> sum over leaves of chance probability x payoff to player 0.
  std::map<std::pair<int, int>, double> payoff;
};

SequenceForm build_sequence_form(const Efg& efg);

struct SequenceFormSolution {
  Profile profile;                       // behavior strategies, both players
  std::array<std::vector<double>, 2> plan;  // realization plans
  std::array<double, 2> value{};         // each player's LP optimum (own payoff)
  double max_violation = 0.0;            // realization-plan constraint residual
  std::array<LpResult, 2> lp;            // solver statistics (x omitted)
  double seconds = 0.0;
};

// Solves the two sequence-form LPs (one per player). Throws
// std::runtime_error with the LP diagnostic when a solve fails.
SequenceFormSolution solve_sequence_form(const Efg& efg, const SimplexOptions& options = {});

struct MatrixGameSolution {
  std::vector<double> row;
  std::vector<double> col;
  double value = 0.0;  // to the row player
};

// Zero-sum matrix game, payoffs to the row player.
MatrixGameSolution solve_matrix_game(const std::vector<std::vector<double>>& payoff,
                                     const SimplexOptions& options = {});

}  // namespace pokerlab
