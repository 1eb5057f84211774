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

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "pokerlab/abstraction/action_grid.hpp"
#include "pokerlab/abstraction/board_clusters.hpp"
#include "pokerlab/abstraction/bucketing.hpp"
#include "pokerlab/abstraction/holdem_abstraction.hpp"
#include "pokerlab/game/betting.hpp"
#include "pokerlab/game/hand_eval.hpp"
#include "pokerlab/util/config.hpp"

namespace pokerlab {
namespace {

TEST(ActionGridTest, ConcreteSizesFromPotFractions) {
  EXPECT_EQ(concrete_bet_sizes({0.1, 0.5, 1.0, kAllIn}, 500, 19750, 1),
            (std::vector<Chips>{50, 250, 500, 19750}));
  // Clamped to the stack, merging with all-in.
  EXPECT_EQ(concrete_bet_sizes({2.0, kAllIn}, 15000, 10000, 1), (std::vector<Chips>{10000}));
  // 5 and 5.5 both round to 5 (ties round down).
  EXPECT_EQ(concrete_bet_sizes({0.5, 0.55}, 10, 100, 1), (std::vector<Chips>{5}));
}

TEST(ActionGridTest, RoundingTiesGoDown) {
  EXPECT_EQ(round_chips(5.5), 5);
  EXPECT_EQ(round_chips(5.51), 6);
  EXPECT_EQ(round_chips(5.49), 5);
  EXPECT_EQ(round_chips(6.5), 6);
}

TEST(ActionGridTest, BuildValidatesAndTerminatesWithAllIn) {
  GridConfig cfg;
  cfg.default_first = {"1", "0.1", "0.5", "0.5"};
  const ActionGrid grid = build_action_grid(nlhe_spec(), cfg);
  const auto& f = grid.fractions(1, Situation::kFirstBet);
  ASSERT_EQ(f.size(), 4u);
  EXPECT_DOUBLE_EQ(f[0], 0.1);
  EXPECT_TRUE(std::isinf(f.back()));
  EXPECT_EQ(std::count_if(f.begin(), f.end(), [](double x) { return std::isinf(x); }), 1);

  cfg.default_first = {};
  EXPECT_THROW(build_action_grid(nlhe_spec(), cfg), std::invalid_argument);
  cfg.default_first = {"-0.5"};
  EXPECT_THROW(build_action_grid(nlhe_spec(), cfg), std::invalid_argument);
  cfg.default_first = {"inf"};
  EXPECT_THROW(build_action_grid(nlhe_spec(), cfg), std::invalid_argument);
  cfg.default_first = {"big"};
  EXPECT_THROW(build_action_grid(nlhe_spec(), cfg), std::invalid_argument);
}

TEST(ActionGridTest, ConfigPerRoundOverride) {
  const Config config = Config::from_string(
      "[abstraction]\nbet_fractions = 0.5 allin\nraise_fractions_r1 = 0.75, 2, allin\n");
  const ActionGrid grid = build_action_grid(nlhe_spec(), GridConfig::from_config(config));
  EXPECT_EQ(grid.fractions(0, Situation::kFirstBet).size(), 2u);
  EXPECT_EQ(grid.fractions(1, Situation::kRaise).size(), 3u);
  EXPECT_EQ(grid.fractions(2, Situation::kRaise).size(), 2u);  // default "1 allin"
}

TEST(ActionGridTest, StateSizesStrictlyIncreaseAndEndAllIn) {
  const auto spec = std::make_shared<const GameSpec>(nlhe_spec());
  GridConfig cfg;
  cfg.default_first = {"0.1", "0.5", "1", "3", "allin"};
  cfg.default_raise = {"0.5", "1", "2", "allin"};
  const ActionGrid grid = build_action_grid(*spec, cfg);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    auto s = BettingState::deal_hand(spec, parse_cards("AsAd"), parse_cards("KcKh"));
    while (!s.is_terminal()) {
      if (s.is_chance()) {
        const auto outcomes = enumerate_chance(s);
        s = deal_cards(s, outcomes[rng() % outcomes.size()].cards);
        continue;
      }
      const auto actions = abstract_actions(s, grid);
      const auto legal = legal_actions(s);
      Chips prev = 0;
      for (const auto& a : actions) {
        ASSERT_TRUE(legal.allows(a)) << to_string(a);
        if (a.kind == ActionKind::kRaise) {
          ASSERT_GT(a.amount, prev);
          prev = a.amount;
        }
      }
      if (legal.raise && s.raises_this_round() < grid.max_raises_per_round()) {
        EXPECT_EQ(prev, legal.raise->max_to);
      }
      s = apply_action(s, actions[rng() % actions.size()]);
    }
  }
}

TEST(ActionGridTest, RealizeRoundTripsGridActions) {
  const auto spec = std::make_shared<const GameSpec>(nlhe_spec());
  const ActionGrid grid = build_action_grid(*spec, GridConfig{});
  auto s = BettingState::deal_hand(spec, parse_cards("AsAd"), parse_cards("KcKh"));
  for (const auto& a : abstract_actions(s, grid)) {
    EXPECT_EQ(realize(s, to_abstract_move(s, a, grid), grid), a) << to_string(a);
  }
  s = apply_history(s, "c");
  const AbstractMove fold{AbstractMove::Kind::kFold, 0.0};
  EXPECT_EQ(realize(s, fold, grid), ActionDescriptor::check());
}

TEST(ActionGridTest, PotFractionUsesPotAfterCall) {
  const auto spec = std::make_shared<const GameSpec>(nlhe_spec());
  auto s = BettingState::deal_hand(spec, parse_cards("AsAd"), parse_cards("KcKh"));
  // Pot 150, SB needs 50 to call: basis 200. Raise to 300 adds 200 = 1 pot.
  EXPECT_DOUBLE_EQ(pot_fraction(s, ActionDescriptor::raise_to(300)), 1.0);
}

// Sort-and-split oracle written independently of the implementation.
std::vector<int> split_oracle(std::vector<double> eq, int k) {
  std::vector<std::size_t> idx(eq.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return eq[a] < eq[b]; });
  std::vector<int> out(eq.size());
  const std::size_t n = eq.size();
  for (std::size_t r = 0; r < n; ++r) out[idx[r]] = static_cast<int>(r * k / n);
  // Renumber densely when k > n leaves gaps.
  std::map<int, int> dense;
  for (std::size_t r = 0; r < n; ++r) dense.emplace(out[idx[r]], static_cast<int>(dense.size()));
  for (auto& b : out) b = dense[b];
  return out;
}

TEST(BucketingTest, SplitsByPercentile) {
  const EquityVector ev = {{{Card(0)}, 0.10, 1}, {{Card(1)}, 0.20, 1},
                           {{Card(2)}, 0.90, 1}, {{Card(3)}, 0.95, 1}};
  const auto b = bucket_by_equity_percentiles(ev, 2);
  EXPECT_EQ(b.bucket, (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(b.bucket, split_oracle({0.10, 0.20, 0.90, 0.95}, 2));
  EXPECT_EQ(b.num_buckets, 2);
  EXPECT_EQ(bucket_by_equity_percentiles(ev, 1).bucket, (std::vector<int>{0, 0, 0, 0}));
}

TEST(BucketingTest, DistinctEquitiesMatchOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const int n = 5 + static_cast<int>(rng() % 40);
    const int k = 1 + static_cast<int>(rng() % 8);
    EquityVector ev;
    std::vector<double> raw;
    for (int i = 0; i < n; ++i) {
      raw.push_back(u(rng));
      ev.push_back({{Card(i % 52)}, raw.back(), 1.0});
    }
    const auto oracle = split_oracle(raw, k);
    const auto got = bucket_by_equity_percentiles(ev, k);
    // Same partition up to dense renumbering (oracle ids are already dense
    // when every hand has equal mass and n >= k).
    EXPECT_EQ(got.bucket, oracle);
  }
}

TEST(BucketingTest, EqualEquitiesShareBucketAndMonotone) {
  EquityVector ev;
  for (int i = 0; i < 10; ++i) ev.push_back({{Card(i)}, i < 7 ? 0.3 : 0.1 * i, 1.0});
  const auto b = bucket_by_equity_percentiles(ev, 4);
  for (int i = 1; i < 7; ++i) EXPECT_EQ(b.bucket[i], b.bucket[0]);
  for (std::size_t i = 0; i < ev.size(); ++i) {
    for (std::size_t j = 0; j < ev.size(); ++j) {
      if (ev[i].equity < ev[j].equity) EXPECT_LE(b.bucket[i], b.bucket[j]);
    }
  }
  // Ids are contiguous.
  EXPECT_EQ(*std::max_element(b.bucket.begin(), b.bucket.end()) + 1, b.num_buckets);
}

TEST(BucketingTest, MoreBucketsThanEquitiesIsFine) {
  const EquityVector ev = {{{Card(0)}, 0.5, 1}, {{Card(1)}, 0.5, 1}, {{Card(2)}, 0.7, 1}};
  const auto b = bucket_by_equity_percentiles(ev, 10);
  EXPECT_EQ(b.num_buckets, 2);
  EXPECT_THROW(bucket_by_equity_percentiles(ev, 0), std::invalid_argument);
  EXPECT_THROW(bucket_by_equity_percentiles({}, 2), std::invalid_argument);
}

// Quadratic equity oracle.
double naive_equity(const std::vector<Card>& board, const Hand& h,
                    const std::vector<Hand>& hands, const std::vector<double>& w) {
  double win = 0, tie = 0, all = 0;
  for (std::size_t j = 0; j < hands.size(); ++j) {
    if (CardSet(h).intersects(CardSet(hands[j]))) continue;
    all += w[j];
    const auto r = evaluate_showdown(board, h, hands[j]);
    if (r == Showdown::kWin) win += w[j];
    if (r == Showdown::kTie) tie += w[j];
  }
  return (win + 0.5 * tie) / all;
}

TEST(BucketingTest, LinearShowdownEquitiesMatchPairwiseOracle) {
  const GameSpec spec = nlhe_spec();
  const auto board = parse_cards("JsTs4sKcQh");
  const auto hands = all_hands(spec, 2, CardSet(board));
  std::mt19937_64 rng(5);
  std::vector<double> w(hands.size());
  for (auto& x : w) x = static_cast<double>(rng() % 1000) / 1000.0;
  const auto eq = showdown_equities(board, hands, w);
  for (std::size_t i = 0; i < hands.size(); i += 37) {
    EXPECT_NEAR(eq.equity[i], naive_equity(board, hands[i], hands, w), 1e-12);
  }
}

TEST(BucketingTest, ExampleBoardWorstHandsShareLowestBucket) {
  const GameSpec spec = nlhe_spec();
  const auto board = parse_cards("JsTs4sKcQh");
  const EquityVector ev = rollout_equities(spec, board);
  const auto b = bucket_by_equity_percentiles(ev, 8);
  int b1 = -1, b2 = -1;
  double e1 = 0, e2 = 0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const std::string h = to_string(ev[i].hand);
    if (h == "2c3c") { b1 = b.bucket[i]; e1 = ev[i].equity; }
    if (h == "2c3s") { b2 = b.bucket[i]; e2 = ev[i].equity; }
  }
  EXPECT_EQ(b1, 0);
  EXPECT_EQ(b2, 0);
  // Against a uniform opponent card removal separates them slightly; both
  // stay above zero only through ties with other 3-2 hands.
  EXPECT_GT(e1, 0.0);
  EXPECT_NEAR(e1, e2, 1e-3);
  const double min_eq = std::min_element(ev.begin(), ev.end(), [](auto& a, auto& c) {
                          return a.equity < c.equity;
                        })->equity;
  EXPECT_DOUBLE_EQ(e1, min_eq);
}

TEST(BoardClusterTest, SeparatesMonotoneFromRainbow) {
  const std::vector<std::vector<Card>> boards = {parse_cards("AsKsQs"), parse_cards("2c7d9h")};
  const auto r = cluster_boards(boards, 2, 1);
  std::vector<Card> a = parse_cards("AsKsQs"), b = parse_cards("2c7d9h");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_NE(r.assignment.at(a), r.assignment.at(b));
}

TEST(BoardClusterTest, IdenticalFeaturesShareCluster) {
  // Same suit pattern and ranks, different suits.
  EXPECT_EQ(board_features(parse_cards("AsKsQd")), board_features(parse_cards("AhKhQc")));
  const std::vector<std::vector<Card>> boards = {parse_cards("AsKsQd"), parse_cards("AhKhQc"),
                                                 parse_cards("2c7d9h"), parse_cards("3c3d3h")};
  const auto r = cluster_boards(boards, 3, 7);
  const auto key = [](const char* s) {
    auto v = parse_cards(s);
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(r.assignment.at(key("AsKsQd")), r.assignment.at(key("AhKhQc")));
}

TEST(BoardClusterTest, KAtLeastBoardsGivesSingletons) {
  const std::vector<std::vector<Card>> boards = {parse_cards("AsKsQs"), parse_cards("2c7d9h"),
                                                 parse_cards("3c3d3h")};
  for (int k : {3, 10}) {
    const auto r = cluster_boards(boards, k, 1);
    std::set<int> ids;
    for (const auto& [b, c] : r.assignment) ids.insert(c);
    EXPECT_EQ(ids.size(), 3u);
  }
}

TEST(BoardClusterTest, PermutationInvariantAndDeterministic) {
  std::vector<std::vector<Card>> boards;
  const auto deck = nlhe_spec().deck();
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    std::vector<Card> d = deck;
    std::shuffle(d.begin(), d.end(), rng);
    boards.emplace_back(d.begin(), d.begin() + 3);
  }
  const auto a = cluster_boards(boards, 4, 42);
  auto shuffled = boards;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  for (auto& b : shuffled) std::reverse(b.begin(), b.end());
  const auto b = cluster_boards(shuffled, 4, 42);
  EXPECT_EQ(a.assignment, b.assignment);
  EXPECT_EQ(a.model.centroids(), b.model.centroids());
}

TEST(HoldemAbstractionTest, PreflopClasses) {
  EXPECT_EQ(preflop_class(parse_cards("KsAs")), "AKs");
  EXPECT_EQ(preflop_class(parse_cards("9d8c")), "98o");
  EXPECT_EQ(preflop_class(parse_cards("QhQc")), "QQ");
  std::set<std::string> classes;
  const auto hands = all_hands(nlhe_spec(), 2, CardSet());
  for (const auto& h : hands) classes.insert(preflop_class(h));
  EXPECT_EQ(classes.size(), 169u);
}

TEST(HoldemAbstractionTest, MiniNlheBuildIsReproducibleAndSerializable) {
  HoldemAbstractionConfig cfg;
  cfg.boards_per_cluster = 4;
  const GameSpec spec = mini_nlhe_spec();
  const auto a = HoldemCardAbstraction::build(spec, cfg);
  const auto b = HoldemCardAbstraction::build(spec, cfg);
  EXPECT_EQ(a.describe(), b.describe());
  std::stringstream io;
  a.save(io);
  const auto c = HoldemCardAbstraction::load(spec, io);
  EXPECT_EQ(a.describe(), c.describe());

  const auto hole = parse_cards("AsKs");
  const auto flop = parse_cards("QsJsTd");
  const std::string label = a.label(1, hole, flop);
  EXPECT_EQ(label, c.label(1, hole, flop));
  EXPECT_EQ(label.front(), 'c');
  EXPECT_EQ(a.label(0, hole, {}), "AKs");
  // A made straight on this flop is in the top bucket of its cluster.
  EXPECT_EQ(a.bucket_of(1, hole, flop) + 1, cfg.buckets);
  std::stringstream bad("pokerlab-buckets 1\nspec 1\n");
  EXPECT_THROW(HoldemCardAbstraction::load(spec, bad), std::runtime_error);
}

}  // namespace
}  // namespace pokerlab
