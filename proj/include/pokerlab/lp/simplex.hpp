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

#include <string>
#include <utility>
#include <vector>

namespace pokerlab {

enum class RowSense { kLe, kEq, kGe };

// maximize c^T x subject to rows, with each variable either >= 0 or free.
struct LinearProgram {
  struct Row {
    std::vector<std::pair<int, double>> coeffs;
    RowSense sense = RowSense::kLe;
    double rhs = 0.0;
  };

  std::vector<double> objective;
  std::vector<bool> is_free;
  std::vector<Row> rows;

  int add_variable(double objective_coeff, bool free = false);
  void add_row(std::vector<std::pair<int, double>> coeffs, RowSense sense, double rhs);
  int num_variables() const { return static_cast<int>(objective.size()); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit, kTooLarge };

std::string to_string(LpStatus status);

struct SimplexOptions {
  double pivot_tol = 1e-9;
  double optimality_tol = 1e-9;
  double feasibility_tol = 1e-7;
  long max_iterations = 1'000'000;
  double max_cells = 4e7;  // tableau size guard (doubles)
  int degenerate_before_bland = 500;
  // Relative size of the random right-hand-side shift used against
  // degeneracy; 0 disables it. The exact right-hand side is restored at the
  // end and any infeasibility repaired with dual simplex pivots.
  double perturbation = 1e-7;
  unsigned long long seed = 1;
};

struct LpResult {
  LpStatus status = LpStatus::kOptimal;
  double objective = 0.0;
  std::vector<double> x;
  long iterations = 0;
  int rows = 0;
  int columns = 0;
  std::string diagnostic;
};

// Dense two-phase primal simplex with Dantzig pricing on a perturbed
// right-hand side, followed by a dual simplex cleanup on the exact one.
// Switches to Bland's rule after a long run of degenerate pivots.
LpResult solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace pokerlab
