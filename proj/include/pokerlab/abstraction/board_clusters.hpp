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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pokerlab/game/cards.hpp"

namespace pokerlab {

struct BoardFeatureWeights {
  double suit = 2.0;
  double rank = 1.0;
  double paired = 1.5;
  double connected = 1.0;
  double high = 1.0;
};

// Suit pattern (largest suit share, distinct suits), sorted rank profile,
// pairedness, connectedness and high card, each roughly in [0, 1] and
// scaled by its weight. Depends only on the set of cards.
std::vector<double> board_features(std::span<const Card> board,
                                   const BoardFeatureWeights& weights = {});

class BoardClustering {
 public:
  BoardClustering() = default;
  BoardClustering(std::vector<std::vector<double>> centroids, BoardFeatureWeights weights)
      : centroids_(std::move(centroids)), weights_(weights) {}

  int num_clusters() const { return static_cast<int>(centroids_.size()); }
  // Nearest centroid; ties go to the lowest id.
  int assign(std::span<const Card> board) const;
  const std::vector<std::vector<double>>& centroids() const { return centroids_; }
  const BoardFeatureWeights& weights() const { return weights_; }

 private:
  std::vector<std::vector<double>> centroids_;
  BoardFeatureWeights weights_;
};

struct BoardClusterResult {
  // Keyed by the sorted board so lookups ignore card order.
  std::map<std::vector<Card>, int> assignment;
  BoardClustering model;
};

// Seeded k-means++ over board features. Boards are canonicalized and
// sorted first, and cluster ids are numbered by first appearance in that
// order, so the result does not depend on the input order. k >= number of
// distinct boards gives one cluster per board.
BoardClusterResult cluster_boards(const std::vector<std::vector<Card>>& boards, int k,
                                  std::uint64_t seed, const BoardFeatureWeights& weights = {});

}  // namespace pokerlab
