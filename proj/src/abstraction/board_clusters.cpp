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

#include "pokerlab/abstraction/board_clusters.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <stdexcept>

#include "pokerlab/util/rng.hpp"

namespace pokerlab {

std::vector<double> board_features(std::span<const Card> board,
                                   const BoardFeatureWeights& w) {
  const double n = static_cast<double>(board.size());
  if (board.empty()) return std::vector<double>(10, 0.0);
  std::array<int, kNumSuits> suits{};
  std::array<int, kNumRanks> ranks{};
  for (Card c : board) {
    ++suits[c.suit()];
    ++ranks[c.rank()];
  }
  const int max_suit = *std::max_element(suits.begin(), suits.end());
  const int distinct_suits =
      static_cast<int>(std::count_if(suits.begin(), suits.end(), [](int s) { return s > 0; }));
  std::vector<int> sorted_ranks;
  for (Card c : board) sorted_ranks.push_back(c.rank());
  std::sort(sorted_ranks.begin(), sorted_ranks.end(), std::greater<>());
  std::vector<int> distinct(sorted_ranks.begin(), sorted_ranks.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  const double denom = std::max(1.0, n - 1.0);
  std::vector<double> f;
  f.push_back(w.suit * (max_suit - 1) / denom);
  f.push_back(w.suit * (n - distinct_suits) / denom);
  // Rank profile: top three ranks, missing entries repeat the lowest.
  for (int i = 0; i < 3; ++i) {
    const int r = sorted_ranks[std::min<std::size_t>(i, sorted_ranks.size() - 1)];
    f.push_back(w.rank * r / 12.0);
  }
  f.push_back(w.paired * (n - static_cast<double>(distinct.size())) / denom);
  const int max_count = *std::max_element(ranks.begin(), ranks.end());
  f.push_back(w.paired * (max_count - 1) / denom);
  // Connectedness: adjacent distinct ranks within two steps, ace plays low too.
  int close = 0;
  for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
    if (distinct[i] - distinct[i + 1] <= 2) ++close;
  }
  if (distinct.size() > 1 && distinct.front() == 12 && distinct.back() <= 1) ++close;
  f.push_back(w.connected * close / denom);
  const int span = distinct.size() > 1 ? distinct.front() - distinct.back() : 0;
  f.push_back(w.connected * (1.0 - span / 12.0));
  f.push_back(w.high * sorted_ranks.front() / 12.0);
  return f;
}

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] - b[i]) * (a[i] - b[i]);
  return d;
}

int nearest(const std::vector<std::vector<double>>& centroids, const std::vector<double>& x) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centroids.size(); ++c) {
    const double d = sq_dist(centroids[c], x);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(c);
    }
  }
  return best;
}

}  // namespace

int BoardClustering::assign(std::span<const Card> board) const {
  if (centroids_.empty()) throw std::logic_error("board clustering has no clusters");
  return nearest(centroids_, board_features(board, weights_));
}

BoardClusterResult cluster_boards(const std::vector<std::vector<Card>>& boards, int k,
                                  std::uint64_t seed, const BoardFeatureWeights& weights) {
  if (k < 1) throw std::invalid_argument("cluster_boards: k must be >= 1");
  std::set<std::vector<Card>> unique;
  for (auto b : boards) {
    std::sort(b.begin(), b.end());
    unique.insert(std::move(b));
  }
  const std::vector<std::vector<Card>> sorted(unique.begin(), unique.end());
  const std::size_t n = sorted.size();
  BoardClusterResult out;
  if (n == 0) return out;

  std::vector<std::vector<double>> x;
  x.reserve(n);
  for (const auto& b : sorted) x.push_back(board_features(b, weights));

  std::vector<std::vector<double>> centroids;
  std::vector<int> label(n, 0);
  if (static_cast<std::size_t>(k) >= n) {
    centroids = x;
    for (std::size_t i = 0; i < n; ++i) label[i] = static_cast<int>(i);
  } else {
    Rng rng(seed);
    centroids.push_back(x[rng.below(n)]);
    std::vector<double> d2(n);
    while (static_cast<int>(centroids.size()) < k) {
      for (std::size_t i = 0; i < n; ++i) d2[i] = sq_dist(x[i], centroids[nearest(centroids, x[i])]);
      double total = 0.0;
      for (double d : d2) total += d;
      if (total <= 0.0) break;  // fewer distinct feature vectors than k
      for (double& d : d2) d /= total;
      centroids.push_back(x[rng.sample(d2)]);
    }
    for (int iter = 0; iter < 100; ++iter) {
      bool changed = iter == 0;
      for (std::size_t i = 0; i < n; ++i) {
        const int c = nearest(centroids, x[i]);
        if (c != label[i]) changed = true;
        label[i] = c;
      }
      if (!changed) break;
      std::vector<std::vector<double>> sum(centroids.size(), std::vector<double>(x[0].size(), 0.0));
      std::vector<int> count(centroids.size(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        ++count[label[i]];
        for (std::size_t d = 0; d < x[i].size(); ++d) sum[label[i]][d] += x[i][d];
      }
      for (std::size_t c = 0; c < centroids.size(); ++c) {
        if (count[c] == 0) continue;
        for (auto& v : sum[c]) v /= count[c];
        centroids[c] = sum[c];
      }
    }
  }
  // Renumber by first appearance and drop empty clusters.
  std::vector<int> remap(centroids.size(), -1);
  std::vector<std::vector<double>> kept;
  for (std::size_t i = 0; i < n; ++i) {
    int& r = remap[label[i]];
    if (r < 0) {
      r = static_cast<int>(kept.size());
      kept.push_back(centroids[label[i]]);
    }
    out.assignment.emplace(sorted[i], r);
  }
  out.model = BoardClustering(std::move(kept), weights);
  return out;
}

}  // namespace pokerlab
