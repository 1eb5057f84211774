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

#include "pokerlab/postprocess/postprocess.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pokerlab/game/infoset.hpp"
#include "pokerlab/lp/sequence_form.hpp"
#include "pokerlab/util/config.hpp"
#include "pokerlab/util/hashing.hpp"
#include "pokerlab/util/rng.hpp"

namespace pokerlab {

namespace {

std::size_t argmax(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

}  // namespace

std::vector<double> threshold_and_renormalize(const std::vector<double>& probs, double theta) {
  if (!(theta >= 0.0 && theta < 1.0)) {
    throw std::invalid_argument("threshold must lie in [0, 1)");
  }
  if (probs.empty()) return probs;
  std::vector<double> out(probs.size(), 0.0);
  double kept = 0.0;
  bool dropped = false;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] >= theta && probs[i] > 0.0) {
      out[i] = probs[i];
      kept += probs[i];
    } else if (probs[i] > 0.0) {
      dropped = true;
    }
  }
  if (!dropped) return probs;
  if (kept <= 0.0) {
    out[argmax(probs)] = 1.0;
    return out;
  }
  for (double& p : out) p /= kept;
  return out;
}

std::vector<double> purify(const std::vector<double>& probs) {
  std::vector<double> out(probs.size(), 0.0);
  if (!probs.empty()) out[argmax(probs)] = 1.0;
  return out;
}

double ThresholdSchedule::theta(int round) const {
  if (round < 0 || round >= static_cast<int>(per_round.size())) return 0.0;
  return per_round[static_cast<std::size_t>(round)];
}

bool ThresholdSchedule::nondecreasing() const {
  return std::is_sorted(per_round.begin(), per_round.end());
}

std::string ThresholdSchedule::describe() const {
  std::ostringstream os;
  os << "thresholds=";
  for (std::size_t i = 0; i < per_round.size(); ++i) {
    if (i) os << ',';
    os << per_round[i];
  }
  return os.str();
}

ThresholdSchedule ThresholdSchedule::from_config(const Config& config) {
  ThresholdSchedule s;
  for (const auto& tok : config.get_list("postprocess.thresholds")) {
    const double t = std::stod(tok);
    if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("threshold out of range: " + tok);
    s.per_round.push_back(t);
  }
  if (!s.nondecreasing() && !config.get_bool("postprocess.allow_decreasing", false)) {
    throw std::invalid_argument("postprocess.thresholds must be nondecreasing by round");
  }
  return s;
}

StrategyTable apply_schedule(const StrategyTable& table, const ThresholdSchedule& schedule) {
  StrategyTable out;
  out.meta = table.meta;
  out.meta.postprocess = schedule.describe();
  for (const auto& [key, probs] : table.entries()) {
    const double theta = schedule.theta(infoset_round(key));
    out.set(key, theta > 0.0 ? threshold_and_renormalize(probs, theta) : probs);
  }
  return out;
}

namespace {

std::vector<int> random_subset(Rng& rng, int n, int k) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(n - i));
    std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
  }
  idx.resize(static_cast<std::size_t>(k));
  std::sort(idx.begin(), idx.end());
  return idx;
}

PurificationTrial run_trial(std::uint64_t seed, int n, int k) {
  Rng rng(seed);
  std::vector<std::vector<double>> a(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n)));
  for (auto& row : a) {
    for (double& v : row) v = rng.uniform();
  }
  const auto rows = random_subset(rng, n, k);
  const auto cols = random_subset(rng, n, k);
  std::vector<std::vector<double>> sub(static_cast<std::size_t>(k),
                                       std::vector<double>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      sub[i][j] = a[static_cast<std::size_t>(rows[i])][static_cast<std::size_t>(cols[j])];
    }
  }
  const auto full = solve_matrix_game(a);
  const auto abst = solve_matrix_game(sub);

  auto payoff = [&](const std::vector<double>& s) {
    double v = 0.0;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < n; ++j) {
        v += s[i] * a[static_cast<std::size_t>(rows[i])][static_cast<std::size_t>(j)] * full.col[j];
      }
    }
    return v;
  };
  return {payoff(purify(abst.row)), payoff(abst.row)};
}

}  // namespace

PurificationSummary matrix_purification_experiment(std::size_t n_games, std::uint64_t seed,
                                                   bool keep_trials, int full_size,
                                                   int abstract_size) {
  if (n_games < 1) throw std::invalid_argument("n_games must be at least 1");
  if (abstract_size < 1 || abstract_size > full_size) {
    throw std::invalid_argument("abstract size must lie in [1, full size]");
  }
  PurificationSummary out;
  out.games = n_games;
  std::vector<double> diff;
  diff.reserve(n_games);
  double sp = 0.0, su = 0.0;
  for (std::size_t t = 0; t < n_games; ++t) {
    const auto trial = run_trial(derive_seed(seed, t), full_size, abstract_size);
    sp += trial.purified;
    su += trial.unpurified;
    diff.push_back(trial.purified - trial.unpurified);
    if (keep_trials) out.trials.push_back(trial);
  }
  out.mean_purified = sp / static_cast<double>(n_games);
  out.mean_unpurified = su / static_cast<double>(n_games);
  out.difference = summarize(diff);
  out.difference_ci = out.difference.mean_ci();
  return out;
}

}  // namespace pokerlab
