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

#include "pokerlab/lp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pokerlab/util/rng.hpp"

namespace pokerlab {

int LinearProgram::add_variable(double objective_coeff, bool free) {
  objective.push_back(objective_coeff);
  is_free.push_back(free);
  return num_variables() - 1;
}

void LinearProgram::add_row(std::vector<std::pair<int, double>> coeffs, RowSense sense,
                            double rhs) {
  for (const auto& [j, v] : coeffs) {
    if (j < 0 || j >= num_variables()) throw std::out_of_range("LP row references unknown variable");
    (void)v;
  }
  rows.push_back({std::move(coeffs), sense, rhs});
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration limit";
    case LpStatus::kTooLarge: return "too large";
  }
  return "unknown";
}

namespace {

// Columns 0..n-1 are variables, n is the working right-hand side and n+1
// the exact one, carried through the same pivots.
class Tableau {
 public:
  Tableau(int m, int n) : m_(m), n_(n), a_(static_cast<std::size_t>(m) * width(), 0.0) {}

  int width() const { return n_ + 2; }
  double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * width() + j]; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * width() + j]; }
  double& rhs(int i) { return at(i, n_); }
  double rhs(int i) const { return at(i, n_); }
  double& exact(int i) { return at(i, n_ + 1); }
  int rows() const { return m_; }
  int cols() const { return n_; }

  void pivot(int r, int c, std::vector<double>& obj) {
    const int w = width();
    double* pr = &a_[static_cast<std::size_t>(r) * w];
    const double inv = 1.0 / pr[c];
    for (int j = 0; j < w; ++j) pr[j] *= inv;
    pr[c] = 1.0;
    nz_.clear();
    for (int j = 0; j < w; ++j) {
      if (pr[j] != 0.0) nz_.push_back(j);
    }
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* pi = &a_[static_cast<std::size_t>(i) * w];
      const double f = pi[c];
      if (f == 0.0) continue;
      for (int j : nz_) pi[j] -= f * pr[j];
      pi[c] = 0.0;
    }
    const double f = obj[c];
    if (f != 0.0) {
      for (int j : nz_) obj[j] -= f * pr[j];
      obj[c] = 0.0;
    }
  }

 private:
  int m_, n_;
  std::vector<double> a_;
  std::vector<int> nz_;
};

struct Engine {
  Tableau t;
  std::vector<int> basis;
  std::vector<char> allowed;  // columns that may enter
  const SimplexOptions& opt;
  long iterations = 0;

  // Reduced-cost row for "maximize c": obj[j] = c_B B^-1 A_j - c_j, obj[n]
  // = current objective. Column j improves when obj[j] < 0.
  LpStatus primal(std::vector<double>& obj) {
    int degenerate = 0;
    while (true) {
      if (iterations >= opt.max_iterations) return LpStatus::kIterationLimit;
      const bool bland = degenerate >= opt.degenerate_before_bland;
      int enter = -1;
      double best = -opt.optimality_tol;
      for (int j = 0; j < t.cols(); ++j) {
        if (!allowed[j]) continue;
        if (obj[j] < best) {
          enter = j;
          if (bland) break;
          best = obj[j];
        }
      }
      if (enter < 0) return LpStatus::kOptimal;
      // Two-pass (Harris) ratio test: bound the step with a small
      // feasibility slack, then take the largest pivot within that bound.
      const double slack = opt.feasibility_tol * 1e-2;
      double bound = std::numeric_limits<double>::infinity();
      for (int i = 0; i < t.rows(); ++i) {
        const double v = t.at(i, enter);
        if (v > opt.pivot_tol) bound = std::min(bound, (std::max(0.0, t.rhs(i)) + slack) / v);
      }
      int leave = -1;
      double ratio = 0.0;
      for (int i = 0; i < t.rows(); ++i) {
        const double v = t.at(i, enter);
        if (v <= opt.pivot_tol) continue;
        const double r = std::max(0.0, t.rhs(i)) / v;
        if (r > bound) continue;
        const bool better = leave < 0 ||
                            (bland ? basis[i] < basis[leave] : v > t.at(leave, enter));
        if (better) {
          leave = i;
          ratio = r;
        }
      }
      if (leave < 0) return LpStatus::kUnbounded;
      degenerate = ratio <= 1e-12 ? degenerate + 1 : 0;
      t.pivot(leave, enter, obj);
      basis[leave] = enter;
      for (int i = 0; i < t.rows(); ++i) {
        if (t.rhs(i) < 0.0) t.rhs(i) = 0.0;
      }
      ++iterations;
    }
  }

  // Restores primal feasibility while keeping the reduced costs optimal.
  LpStatus dual(std::vector<double>& obj, const std::vector<char>& dead) {
    while (true) {
      if (iterations >= opt.max_iterations) return LpStatus::kIterationLimit;
      int leave = -1;
      double worst = -opt.feasibility_tol * 1e-2;
      for (int i = 0; i < t.rows(); ++i) {
        if (!dead[i] && t.rhs(i) < worst) {
          worst = t.rhs(i);
          leave = i;
        }
      }
      if (leave < 0) return LpStatus::kOptimal;
      int enter = -1;
      double ratio = std::numeric_limits<double>::infinity();
      for (int j = 0; j < t.cols(); ++j) {
        const double v = t.at(leave, j);
        if (!allowed[j] || v >= -opt.pivot_tol) continue;
        const double r = std::max(0.0, obj[j]) / -v;
        if (r < ratio || (r == ratio && -v > -t.at(leave, enter))) {
          ratio = r;
          enter = j;
        }
      }
      if (enter < 0) return LpStatus::kInfeasible;
      t.pivot(leave, enter, obj);
      basis[leave] = enter;
      ++iterations;
    }
  }
};

LpResult solve_once(const LinearProgram& lp, const SimplexOptions& opt, bool perturb) {
  LpResult result;
  const int nv = lp.num_variables();
  // Column layout: structural (free variables split into +/-), slack or
  // surplus per inequality row, artificial per >= or = row.
  std::vector<int> pos_col(nv), neg_col(nv, -1);
  int n = 0;
  for (int j = 0; j < nv; ++j) {
    pos_col[j] = n++;
    if (lp.is_free[j]) neg_col[j] = n++;
  }
  const int m = static_cast<int>(lp.rows.size());
  std::vector<double> sign(m, 1.0);
  std::vector<RowSense> sense(m);
  for (int i = 0; i < m; ++i) {
    sense[i] = lp.rows[i].sense;
    if (lp.rows[i].rhs < 0.0) {
      sign[i] = -1.0;
      if (sense[i] == RowSense::kLe) sense[i] = RowSense::kGe;
      else if (sense[i] == RowSense::kGe) sense[i] = RowSense::kLe;
    }
  }
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  for (int i = 0; i < m; ++i) {
    if (sense[i] != RowSense::kEq) slack_col[i] = n++;
  }
  const int first_art = n;
  for (int i = 0; i < m; ++i) {
    if (sense[i] != RowSense::kLe) art_col[i] = n++;
  }
  result.rows = m;
  result.columns = n;
  if (static_cast<double>(m) * (n + 2) > opt.max_cells) {
    result.status = LpStatus::kTooLarge;
    result.diagnostic = "tableau " + std::to_string(m) + " x " + std::to_string(n + 2) +
                        " exceeds the dense solver limit";
    return result;
  }

  Engine e{Tableau(m, n), std::vector<int>(m, -1), std::vector<char>(n, 1), opt};
  Rng rng(opt.seed);
  for (int i = 0; i < m; ++i) {
    for (const auto& [j, v] : lp.rows[i].coeffs) {
      e.t.at(i, pos_col[j]) += sign[i] * v;
      if (neg_col[j] >= 0) e.t.at(i, neg_col[j]) -= sign[i] * v;
    }
    const double b = sign[i] * lp.rows[i].rhs;
    e.t.exact(i) = b;
    e.t.rhs(i) = perturb ? b + opt.perturbation * (1.0 + b) * (0.5 + rng.uniform()) : b;
    if (sense[i] == RowSense::kLe) {
      e.t.at(i, slack_col[i]) = 1.0;
      e.basis[i] = slack_col[i];
    } else {
      if (sense[i] == RowSense::kGe) e.t.at(i, slack_col[i]) = -1.0;
      e.t.at(i, art_col[i]) = 1.0;
      e.basis[i] = art_col[i];
    }
  }

  // Phase 1: maximize -sum(artificials).
  const int w = n + 2;
  std::vector<double> obj(w, 0.0);
  for (int j = first_art; j < n; ++j) obj[j] = 1.0;
  for (int i = 0; i < m; ++i) {
    if (e.basis[i] >= first_art) {
      for (int j = 0; j < w; ++j) obj[j] -= e.t.at(i, j);
    }
  }
  LpStatus st = e.primal(obj);
  if (st == LpStatus::kIterationLimit) {
    result.status = st;
    result.iterations = e.iterations;
    result.diagnostic = "phase 1 hit the iteration limit";
    return result;
  }
  if (obj[n] < -opt.feasibility_tol) {
    result.status = LpStatus::kInfeasible;
    result.iterations = e.iterations;
    result.diagnostic = "phase 1 residual " + std::to_string(obj[n]);
    return result;
  }
  // Drive zero-level artificials out of the basis.
  std::vector<char> dead_row(m, 0);
  for (int i = 0; i < m; ++i) {
    if (e.basis[i] < first_art) continue;
    int col = -1;
    double best = opt.pivot_tol;
    for (int j = 0; j < first_art; ++j) {
      if (std::abs(e.t.at(i, j)) > best) {
        best = std::abs(e.t.at(i, j));
        col = j;
      }
    }
    if (col < 0) {
      dead_row[i] = 1;  // redundant constraint
      continue;
    }
    e.t.pivot(i, col, obj);
    e.basis[i] = col;
  }
  for (int j = first_art; j < n; ++j) e.allowed[j] = 0;

  // Phase 2.
  std::fill(obj.begin(), obj.end(), 0.0);
  std::vector<double> c(n, 0.0);
  for (int j = 0; j < nv; ++j) {
    c[pos_col[j]] = lp.objective[j];
    if (neg_col[j] >= 0) c[neg_col[j]] = -lp.objective[j];
  }
  for (int j = 0; j < n; ++j) obj[j] = -c[j];
  for (int i = 0; i < m; ++i) {
    if (dead_row[i]) continue;
    const double cb = c[e.basis[i]];
    if (cb == 0.0) continue;
    for (int j = 0; j < w; ++j) obj[j] += cb * e.t.at(i, j);
  }
  st = e.primal(obj);
  if (st == LpStatus::kOptimal && perturb) {
    for (int i = 0; i < m; ++i) e.t.rhs(i) = e.t.exact(i);
    st = e.dual(obj, dead_row);
    if (st == LpStatus::kInfeasible) {
      result.status = st;
      result.iterations = e.iterations;
      result.diagnostic = "exact right-hand side infeasible after cleanup";
      return result;
    }
  }
  result.iterations = e.iterations;
  result.status = st;
  if (st != LpStatus::kOptimal) {
    result.diagnostic = "phase 2 ended " + to_string(st);
    return result;
  }
  std::vector<double> col_value(n, 0.0);
  for (int i = 0; i < m; ++i) {
    if (!dead_row[i]) col_value[e.basis[i]] = std::max(0.0, e.t.rhs(i));
  }
  result.x.assign(nv, 0.0);
  result.objective = 0.0;
  for (int j = 0; j < nv; ++j) {
    result.x[j] = col_value[pos_col[j]] - (neg_col[j] >= 0 ? col_value[neg_col[j]] : 0.0);
    result.objective += lp.objective[j] * result.x[j];
  }
  return result;
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp, const SimplexOptions& opt) {
  if (opt.perturbation <= 0.0) return solve_once(lp, opt, false);
  LpResult r = solve_once(lp, opt, true);
  // Redundant equalities can make the shifted system inconsistent.
  if (r.status == LpStatus::kInfeasible) {
    LpResult exact = solve_once(lp, opt, false);
    exact.iterations += r.iterations;
    return exact;
  }
  return r;
}

}  // namespace pokerlab
