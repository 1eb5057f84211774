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

#include <gtest/gtest.h>

#include <numeric>

#include "pokerlab/abstraction/abstraction.hpp"
#include "pokerlab/game/infoset.hpp"
#include "pokerlab/postprocess/postprocess.hpp"
#include "pokerlab/solver/cfr.hpp"
#include "pokerlab/util/config.hpp"
#include "pokerlab/util/rng.hpp"

namespace pokerlab {
namespace {

void expect_vec_near(const std::vector<double>& got, const std::vector<double>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-12) << i;
}

TEST(ThresholdTest, Examples) {
  expect_vec_near(threshold_and_renormalize({0.02, 0.98}, 0.05), {0.0, 1.0});
  expect_vec_near(threshold_and_renormalize({0.3, 0.3, 0.4}, 0.25), {0.3, 0.3, 0.4});
  expect_vec_near(threshold_and_renormalize({0.1, 0.15, 0.75}, 0.2), {0.0, 0.0, 1.0});
  expect_vec_near(threshold_and_renormalize({0.2, 0.3, 0.5}, 0.25), {0.0, 0.375, 0.625});
}

TEST(ThresholdTest, AllBelowKeepsTheArgmax) {
  expect_vec_near(threshold_and_renormalize({0.3, 0.4, 0.3}, 0.5), {0.0, 1.0, 0.0});
}

TEST(ThresholdTest, RejectsThetaOfOneOrMore) {
  EXPECT_THROW(threshold_and_renormalize({0.5, 0.5}, 1.0), std::invalid_argument);
  EXPECT_THROW(threshold_and_renormalize({0.5, 0.5}, -0.1), std::invalid_argument);
}

TEST(PurifyTest, Examples) {
  expect_vec_near(purify({0.2, 0.5, 0.3}), {0.0, 1.0, 0.0});
  expect_vec_near(purify({0.0, 1.0}), {0.0, 1.0});
  expect_vec_near(purify({0.5, 0.5}), {1.0, 0.0});
}

std::vector<double> random_simplex(Rng& rng, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  double s = 0.0;
  for (double& x : v) {
    // Some exact zeros so supports differ.
    x = rng.uniform() < 0.2 ? 0.0 : -std::log(1.0 - rng.uniform());
    s += x;
  }
  if (s == 0.0) {
    v[0] = 1.0;
    return v;
  }
  for (double& x : v) x /= s;
  return v;
}

TEST(ThresholdTest, PropertiesOnRandomVectors) {
  Rng rng(77);
  for (int t = 0; t < 2000; ++t) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const auto v = random_simplex(rng, n);
    const double theta = rng.uniform() * 0.6;
    const auto out = threshold_and_renormalize(v, theta);
    EXPECT_NEAR(std::accumulate(out.begin(), out.end(), 0.0), 1.0, 1e-12);
    for (std::size_t i = 0; i < v.size(); ++i) {
      EXPECT_GE(out[i], 0.0);
      if (v[i] == 0.0) EXPECT_EQ(out[i], 0.0) << "support grew";
    }
    // Idempotent for a fixed theta.
    expect_vec_near(threshold_and_renormalize(out, theta), out);
    // Argmax invariance whenever the argmax survives.
    const auto pv = purify(v);
    const auto top = std::max_element(v.begin(), v.end()) - v.begin();
    if (v[static_cast<std::size_t>(top)] >= theta) expect_vec_near(purify(out), pv);
  }
}

TEST(ScheduleTest, ZeroScheduleIsIdentity) {
  StrategyTable t;
  t.set("0:K:", {0.3, 0.7});
  t.set("1:Q:r2", {0.01, 0.99});
  const auto out = apply_schedule(t, ThresholdSchedule{{0.0}});
  EXPECT_EQ(out.entries(), t.entries());
  EXPECT_EQ(out.meta.postprocess, "thresholds=0");
}

TEST(ScheduleTest, RoundsWithoutThetaAreUntouched) {
  StrategyTable t;
  t.set("0:K:", {0.1, 0.9});
  t.set("0:K|Q:k/", {0.1, 0.9});
  const auto out = apply_schedule(t, ThresholdSchedule{{0.2}});
  expect_vec_near(out.at("0:K:"), {0.0, 1.0});
  expect_vec_near(out.at("0:K|Q:k/"), {0.1, 0.9});
}

TEST(ScheduleTest, NearOneThetaPurifiesKuhn) {
  const GameSpec spec = kuhn_spec();
  const auto abs = make_abstraction(spec, Config());
  CfrOptions opt;
  opt.iterations = 2000;
  const auto table = run_cfr(spec, abs, opt);
  const auto out = apply_schedule(table, ThresholdSchedule{{1.0 - 1e-9}});
  for (const auto& [key, probs] : out.entries()) {
    expect_vec_near(probs, purify(table.at(key)));
  }
}

TEST(ScheduleTest, LeducPerRoundThresholds) {
  const GameSpec spec = leduc_spec();
  const auto abs = make_abstraction(spec, Config());
  CfrOptions opt;
  opt.iterations = 20000;
  opt.variant = CfrVariant::kChanceSampled;
  opt.seed = 3;
  const auto table = run_cfr(spec, abs, opt);
  const ThresholdSchedule sched{{0.05, 0.15}};
  const auto out = apply_schedule(table, sched);
  int round2 = 0;
  for (const auto& [key, probs] : out.entries()) {
    const double cut = infoset_round(key) == 1 ? 0.15 : 0.05;
    if (infoset_round(key) == 1) ++round2;
    for (double p : probs) EXPECT_TRUE(p == 0.0 || p >= cut) << key << ' ' << p;
  }
  EXPECT_GT(round2, 0);
  EXPECT_TRUE(out.is_normalized());
  // Idempotent on whole tables too.
  EXPECT_EQ(apply_schedule(out, sched).entries(), out.entries());
}

TEST(ScheduleTest, FromConfigRejectsDecreasing) {
  const auto ok = ThresholdSchedule::from_config(Config::from_string("[postprocess]\nthresholds = 0, 0.05, 0.1\n"));
  EXPECT_DOUBLE_EQ(ok.theta(2), 0.1);
  EXPECT_DOUBLE_EQ(ok.theta(7), 0.0);
  EXPECT_THROW(ThresholdSchedule::from_config(Config::from_string("[postprocess]\nthresholds = 0.2, 0.1\n")),
               std::invalid_argument);
  EXPECT_THROW(ThresholdSchedule::from_config(Config::from_string("[postprocess]\nthresholds = 1\n")),
               std::invalid_argument);
}

TEST(PurificationExperimentTest, DeterministicForSeed) {
  const auto a = matrix_purification_experiment(200, 5);
  const auto b = matrix_purification_experiment(200, 5);
  EXPECT_EQ(a.mean_purified, b.mean_purified);
  EXPECT_EQ(a.mean_unpurified, b.mean_unpurified);
  EXPECT_EQ(a.difference.variance, b.difference.variance);
}

TEST(PurificationExperimentTest, FullAbstractionHasNoGap) {
  // Without abstraction the solved strategy is a full-game equilibrium;
  // every action in its support earns the value against the opponent's
  // equilibrium, so purifying changes nothing.
  const auto s = matrix_purification_experiment(300, 11, true, 4, 4);
  for (const auto& t : s.trials) EXPECT_NEAR(t.purified, t.unpurified, 1e-7);
}

TEST(PurificationExperimentTest, RejectsBadArguments) {
  EXPECT_THROW(matrix_purification_experiment(0, 1), std::invalid_argument);
  EXPECT_THROW(matrix_purification_experiment(5, 1, false, 3, 4), std::invalid_argument);
}

}  // namespace
}  // namespace pokerlab
