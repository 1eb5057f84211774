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

#include "pokerlab/lp/sequence_form.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace pokerlab {

SequenceForm build_sequence_form(const Efg& efg) {
  SequenceForm sf;
  sf.first_seq.assign(efg.num_infosets(), -1);
  sf.parent_seq.assign(efg.num_infosets(), -1);
  sf.num_actions.assign(efg.num_infosets(), 0);
  for (int i = 0; i < efg.num_infosets(); ++i) {
    sf.num_actions[i] = static_cast<int>(efg.infoset(i).actions.size());
  }
  std::function<void(int, std::array<int, 2>, double)> walk = [&](int n, std::array<int, 2> seq,
                                                                   double chance) {
    const EfgNode& node = efg.node(n);
    switch (node.kind) {
      case EfgNodeKind::kTerminal:
        if (chance != 0.0 && node.payoff != 0.0) {
          sf.payoff[{seq[0], seq[1]}] += chance * node.payoff;
        }
        return;
      case EfgNodeKind::kChance:
        for (std::size_t a = 0; a < node.children.size(); ++a) {
          walk(node.children[a], seq, chance * node.chance_probs[a]);
        }
        return;
      case EfgNodeKind::kDecision: {
        const int p = node.player;
        const int info = node.infoset;
        if (sf.first_seq[info] < 0) {
          sf.first_seq[info] = sf.num_sequences[p];
          sf.num_sequences[p] += static_cast<int>(node.children.size());
          sf.parent_seq[info] = seq[p];
          sf.infosets[p].push_back(info);
        } else if (sf.parent_seq[info] != seq[p]) {
          throw std::logic_error("sequence form needs perfect recall (infoset " +
                                 efg.infoset(info).key + ")");
        }
        for (std::size_t a = 0; a < node.children.size(); ++a) {
          std::array<int, 2> next = seq;
          next[p] = sf.first_seq[info] + static_cast<int>(a);
          walk(node.children[a], next, chance);
        }
        return;
      }
    }
  };
  walk(efg.root(), {0, 0}, 1.0);
  return sf;
}

namespace {

// LP for player p: variables are p's realization plan and one free dual
// per constraint row of the opponent (root row 0, then one per infoset).
// maximize q_0 s.t. F_o^T q - B^T x <= 0, E_p x = e, x >= 0, where B is the
// payoff to p indexed [p-seq][o-seq].
LpResult solve_player(const SequenceForm& sf, int p, const SimplexOptions& options) {
  const int o = 1 - p;
  const double sign = p == 0 ? 1.0 : -1.0;
  LinearProgram lp;
  const int nx = sf.num_sequences[p];
  for (int j = 0; j < nx; ++j) lp.add_variable(0.0);
  const int q0 = lp.add_variable(1.0, true);
  std::vector<int> q_of_infoset(sf.first_seq.size(), -1);
  for (int info : sf.infosets[o]) q_of_infoset[info] = lp.add_variable(0.0, true);

  // E_p x = e
  lp.add_row({{0, 1.0}}, RowSense::kEq, 1.0);
  for (int info : sf.infosets[p]) {
    std::vector<std::pair<int, double>> row;
    for (int a = 0; a < sf.num_actions[info]; ++a) row.push_back({sf.first_seq[info] + a, 1.0});
    row.push_back({sf.parent_seq[info], -1.0});
    lp.add_row(std::move(row), RowSense::kEq, 0.0);
  }

  // Columns of F_o: for each opponent sequence, the rows it appears in.
  std::vector<std::vector<std::pair<int, double>>> rows(sf.num_sequences[o]);
  rows[0].push_back({q0, 1.0});
  for (int info : sf.infosets[o]) {
    const int q = q_of_infoset[info];
    rows[sf.parent_seq[info]].push_back({q, -1.0});
    for (int a = 0; a < sf.num_actions[info]; ++a) rows[sf.first_seq[info] + a].push_back({q, 1.0});
  }
  for (const auto& [key, v] : sf.payoff) {
    const int sp = p == 0 ? key.first : key.second;
    const int so = p == 0 ? key.second : key.first;
    rows[so].push_back({sp, -sign * v});
  }
  for (auto& row : rows) lp.add_row(std::move(row), RowSense::kLe, 0.0);
  return solve_lp(lp, options);
}

}  // namespace

SequenceFormSolution solve_sequence_form(const Efg& efg, const SimplexOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const SequenceForm sf = build_sequence_form(efg);
  SequenceFormSolution out;
  out.profile.assign(efg.num_infosets(), {});
  for (int p = 0; p < 2; ++p) {
    LpResult r = solve_player(sf, p, options);
    if (r.status != LpStatus::kOptimal) {
      throw std::runtime_error("sequence-form LP for player " + std::to_string(p) + " " +
                               to_string(r.status) + " (" + std::to_string(r.rows) + " rows, " +
                               std::to_string(r.columns) + " columns): " + r.diagnostic);
    }
    out.value[p] = r.objective;
    out.plan[p].assign(r.x.begin(), r.x.begin() + sf.num_sequences[p]);
    for (int info : sf.infosets[p]) {
      const int start = sf.first_seq[info];
      const int end = start + sf.num_actions[info];
      const double parent = out.plan[p][sf.parent_seq[info]];
      double total = 0.0;
      for (int s = start; s < end; ++s) total += out.plan[p][s];
      out.max_violation = std::max(out.max_violation, std::abs(total - parent));
      std::vector<double> probs(end - start, 1.0 / (end - start));
      if (parent > 1e-12 && total > 0.0) {
        for (int s = start; s < end; ++s) probs[s - start] = std::max(0.0, out.plan[p][s]) / total;
      }
      out.profile[info] = std::move(probs);
    }
    out.max_violation = std::max(out.max_violation, std::abs(out.plan[p][0] - 1.0));
    r.x.clear();
    out.lp[p] = std::move(r);
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

MatrixGameSolution solve_matrix_game(const std::vector<std::vector<double>>& payoff,
                                     const SimplexOptions& options) {
  const int m = static_cast<int>(payoff.size());
  if (m == 0) throw std::invalid_argument("empty matrix game");
  const int n = static_cast<int>(payoff[0].size());
  auto solve_side = [&](bool row_player) {
    // max v s.t. sum_i s_i A(i,j) >= v for all j, sum s = 1, s >= 0.
    const int k = row_player ? m : n;
    const int other = row_player ? n : m;
    LinearProgram lp;
    for (int i = 0; i < k; ++i) lp.add_variable(0.0);
    const int v = lp.add_variable(1.0, true);
    for (int j = 0; j < other; ++j) {
      std::vector<std::pair<int, double>> row;
      for (int i = 0; i < k; ++i) {
        const double a = row_player ? payoff[i][j] : -payoff[j][i];
        row.push_back({i, -a});
      }
      row.push_back({v, 1.0});
      lp.add_row(std::move(row), RowSense::kLe, 0.0);
    }
    std::vector<std::pair<int, double>> sum;
    for (int i = 0; i < k; ++i) sum.push_back({i, 1.0});
    lp.add_row(std::move(sum), RowSense::kEq, 1.0);
    LpResult r = solve_lp(lp, options);
    if (r.status != LpStatus::kOptimal) {
      throw std::runtime_error("matrix game LP " + to_string(r.status) + ": " + r.diagnostic);
    }
    std::vector<double> s(r.x.begin(), r.x.begin() + k);
    double total = 0.0;
    for (auto& x : s) {
      x = std::max(0.0, x);
      total += x;
    }
    for (auto& x : s) x /= total;
    return std::make_pair(s, r.objective);
  };
  MatrixGameSolution out;
  auto [row, v] = solve_side(true);
  auto [col, w] = solve_side(false);
  out.row = std::move(row);
  out.col = std::move(col);
  out.value = v;
  (void)w;
  return out;
}

}  // namespace pokerlab
