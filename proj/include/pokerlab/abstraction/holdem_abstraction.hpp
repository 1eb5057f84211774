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
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "pokerlab/abstraction/board_clusters.hpp"
#include "pokerlab/game/game_spec.hpp"
#include "pokerlab/game/infoset.hpp"

namespace pokerlab {

class Config;

struct HoldemAbstractionConfig {
  int buckets = 8;            // K, hand buckets per public cluster
  int clusters = 4;           // k, public board clusters per round
  std::uint64_t seed = 1;
  int max_boards = 20000;     // boards clustered per round (sampled above this)
  int boards_per_cluster = 16;  // boards pooled to fit bucket thresholds

  // [abstraction] keys: buckets, clusters, seed, max_boards, boards_per_cluster.
  static HoldemAbstractionConfig from_config(const Config& config);
};

// "AKs", "T9o", "QQ": the 169 preflop classes. One-card hands give the rank.
std::string preflop_class(std::span<const Card> hole);

// Preflop: lossless up to suit isomorphism. Later rounds: the board's public
// cluster and the hand's equity bucket, "c<cluster>b<bucket>". Only the
// current round enters the label (imperfect recall of earlier buckets).
class HoldemCardAbstraction final : public CardAbstraction {
 public:
  static HoldemCardAbstraction build(const GameSpec& spec, const HoldemAbstractionConfig& config);
  static HoldemCardAbstraction load(const GameSpec& spec, std::istream& in);
  void save(std::ostream& out) const;

  HoldemCardAbstraction(const HoldemCardAbstraction& other);
  HoldemCardAbstraction& operator=(const HoldemCardAbstraction&) = delete;

  std::string label(int round, std::span<const Card> hole,
                    std::span<const Card> board) const override;
  std::string describe() const override;

  int cluster_of(int round, std::span<const Card> board) const;
  int bucket_of(int round, std::span<const Card> hole, std::span<const Card> board) const;
  // Rollout equity against a uniform opponent, cached per board.
  double equity(std::span<const Card> hole, std::span<const Card> board) const;
  const HoldemAbstractionConfig& config() const { return config_; }

 private:
  struct RoundModel {
    BoardClustering clustering;
    std::vector<std::vector<double>> upper;  // per cluster bucket bounds
  };

  HoldemCardAbstraction(std::shared_ptr<const GameSpec> spec, HoldemAbstractionConfig config)
      : spec_(std::move(spec)), config_(config) {}

  std::shared_ptr<const GameSpec> spec_;
  HoldemAbstractionConfig config_;
  std::vector<RoundModel> rounds_;  // index 0 unused (preflop)

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, double>> cache_;
};

}  // namespace pokerlab
