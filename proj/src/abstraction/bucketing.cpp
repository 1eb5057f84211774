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

#include "pokerlab/abstraction/bucketing.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "pokerlab/game/hand_eval.hpp"

namespace pokerlab {

namespace {
constexpr double kEqualEquity = 1e-12;
}

BucketAssignment bucket_by_equity_percentiles(const EquityVector& equities, int k) {
  if (k < 1) throw std::invalid_argument("bucketing: K must be >= 1");
  if (equities.empty()) throw std::invalid_argument("bucketing: no hands");
  const std::size_t n = equities.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return equities[a].equity < equities[b].equity;
  });
  double total = 0.0;
  for (const auto& e : equities) {
    if (e.weight < 0.0) throw std::invalid_argument("bucketing: negative weight");
    total += e.weight;
  }
  const bool by_count = total <= 0.0;
  if (by_count) total = static_cast<double>(n);

  BucketAssignment out;
  out.bucket.assign(n, 0);
  double before = 0.0;
  int raw_prev = -1;
  int dense = -1;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    double group_mass = 0.0;
    const double lo = equities[order[i]].equity;
    while (j < n && equities[order[j]].equity - lo <= kEqualEquity) {
      group_mass += by_count ? 1.0 : equities[order[j]].weight;
      ++j;
    }
    const int raw = std::min(k - 1, static_cast<int>(k * before / total));
    if (raw != raw_prev) {
      ++dense;
      raw_prev = raw;
      out.upper.push_back(0.0);
    }
    for (std::size_t t = i; t < j; ++t) out.bucket[order[t]] = dense;
    out.upper[dense] = equities[order[j - 1]].equity;
    before += group_mass;
    i = j;
  }
  out.num_buckets = dense + 1;
  return out;
}

int bucket_for_equity(const std::vector<double>& upper, double equity) {
  for (std::size_t b = 0; b < upper.size(); ++b) {
    if (equity <= upper[b] + kEqualEquity) return static_cast<int>(b);
  }
  return static_cast<int>(upper.size()) - 1;
}

std::vector<Hand> all_hands(const GameSpec& spec, int hole_cards, CardSet dead) {
  std::vector<Card> live;
  for (Card c : spec.deck()) {
    if (!dead.contains(c)) live.push_back(c);
  }
  std::sort(live.begin(), live.end());
  std::vector<Hand> out;
  if (hole_cards == 1) {
    for (Card c : live) out.push_back({c});
  } else if (hole_cards == 2) {
    for (std::size_t i = 0; i < live.size(); ++i) {
      for (std::size_t j = i + 1; j < live.size(); ++j) out.push_back({live[i], live[j]});
    }
  } else {
    throw std::invalid_argument("all_hands: only 1 or 2 hole cards supported");
  }
  return out;
}

ShowdownEquities showdown_equities(std::span<const Card> board, const std::vector<Hand>& hands,
                                   std::span<const double> weights) {
  const std::size_t n = hands.size();
  if (weights.size() != n) throw std::invalid_argument("showdown_equities: weight size mismatch");
  std::vector<HandValue> value(n);
  std::vector<Card> cards;
  for (std::size_t i = 0; i < n; ++i) {
    cards.assign(board.begin(), board.end());
    cards.insert(cards.end(), hands[i].begin(), hands[i].end());
    value[i] = evaluate_hand(cards);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });

  double all_total = 0.0;
  std::array<double, kDeckSize> all_card{};
  for (std::size_t i = 0; i < n; ++i) {
    all_total += weights[i];
    for (Card c : hands[i]) all_card[c.index()] += weights[i];
  }
  // Mass of opponents disjoint from hand i among a set with running sums.
  // Mass of opponents disjoint from hand i within a set given by its total
  // and per-card sums. A two-card hand is the only one holding both of its
  // cards, so it was subtracted twice when it belongs to the set.
  auto disjoint = [&](std::size_t i, double total, const std::array<double, kDeckSize>& per_card,
                      bool includes_self) {
    double m = total;
    for (Card c : hands[i]) m -= per_card[c.index()];
    if (hands[i].size() == 2 && includes_self) m += weights[i];
    return m;
  };

  ShowdownEquities out;
  out.equity.assign(n, 0.5);
  out.undefined.assign(n, false);
  double lower_total = 0.0;
  std::array<double, kDeckSize> lower_card{};
  for (std::size_t s = 0; s < n;) {
    std::size_t e = s;
    double tie_total = 0.0;
    std::array<double, kDeckSize> tie_card{};
    while (e < n && value[order[e]] == value[order[s]]) {
      const std::size_t i = order[e];
      tie_total += weights[i];
      for (Card c : hands[i]) tie_card[c.index()] += weights[i];
      ++e;
    }
    for (std::size_t t = s; t < e; ++t) {
      const std::size_t i = order[t];
      const double win = std::max(0.0, disjoint(i, lower_total, lower_card, false));
      const double tie = std::max(0.0, disjoint(i, tie_total, tie_card, true));
      const double all = std::max(0.0, disjoint(i, all_total, all_card, true));
      if (all <= 0.0) {
        out.undefined[i] = true;
        continue;
      }
      out.equity[i] = std::clamp((win + 0.5 * tie) / all, 0.0, 1.0);
    }
    lower_total += tie_total;
    for (int c = 0; c < kDeckSize; ++c) lower_card[c] += tie_card[c];
    s = e;
  }
  return out;
}

EquityVector rollout_equities(const GameSpec& spec, std::span<const Card> board) {
  const int need = spec.total_board_cards() - static_cast<int>(board.size());
  if (need < 0) throw std::invalid_argument("rollout_equities: board too long");
  const CardSet board_set(board);
  const std::vector<Hand> hands = all_hands(spec, spec.hole_cards, board_set);
  std::vector<Card> live;
  for (Card c : spec.deck()) {
    if (!board_set.contains(c)) live.push_back(c);
  }
  std::sort(live.begin(), live.end());

  std::vector<double> sum(hands.size(), 0.0);
  std::vector<double> count(hands.size(), 0.0);
  std::vector<Card> full(board.begin(), board.end());
  std::vector<int> pick(need);
  std::vector<Hand> sub_hands;
  std::vector<std::size_t> sub_index;
  auto run = [&](const std::vector<Card>& runout) {
    const CardSet dead(runout);
    sub_hands.clear();
    sub_index.clear();
    for (std::size_t i = 0; i < hands.size(); ++i) {
      bool clash = false;
      for (Card c : hands[i]) clash = clash || dead.contains(c);
      if (!clash) {
        sub_hands.push_back(hands[i]);
        sub_index.push_back(i);
      }
    }
    std::vector<Card> b = full;
    b.insert(b.end(), runout.begin(), runout.end());
    const std::vector<double> w(sub_hands.size(), 1.0);
    const ShowdownEquities eq = showdown_equities(b, sub_hands, w);
    for (std::size_t t = 0; t < sub_hands.size(); ++t) {
      if (eq.undefined[t]) continue;
      sum[sub_index[t]] += eq.equity[t];
      count[sub_index[t]] += 1.0;
    }
  };

  std::vector<Card> runout;
  // Enumerate need-subsets of the live cards.
  std::vector<int> idx(need);
  std::iota(idx.begin(), idx.end(), 0);
  const int m = static_cast<int>(live.size());
  if (need == 0) {
    run({});
  } else if (need <= m) {
    while (true) {
      runout.clear();
      for (int i : idx) runout.push_back(live[i]);
      run(runout);
      int p = need - 1;
      while (p >= 0 && idx[p] == m - need + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < need; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  EquityVector out;
  out.reserve(hands.size());
  for (std::size_t i = 0; i < hands.size(); ++i) {
    out.push_back({hands[i], count[i] > 0 ? sum[i] / count[i] : 0.5, 1.0});
  }
  return out;
}

}  // namespace pokerlab
