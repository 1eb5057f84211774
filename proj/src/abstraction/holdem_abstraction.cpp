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

#include "pokerlab/abstraction/holdem_abstraction.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pokerlab/abstraction/bucketing.hpp"
#include "pokerlab/game/hand_eval.hpp"
#include "pokerlab/util/config.hpp"
#include "pokerlab/util/hashing.hpp"
#include "pokerlab/util/rng.hpp"

namespace pokerlab {

HoldemAbstractionConfig HoldemAbstractionConfig::from_config(const Config& config) {
  HoldemAbstractionConfig c;
  c.buckets = static_cast<int>(config.get_int("abstraction.buckets", c.buckets));
  c.clusters = static_cast<int>(config.get_int("abstraction.clusters", c.clusters));
  c.seed = static_cast<std::uint64_t>(config.get_int("abstraction.seed", static_cast<long long>(c.seed)));
  c.max_boards = static_cast<int>(config.get_int("abstraction.max_boards", c.max_boards));
  c.boards_per_cluster =
      static_cast<int>(config.get_int("abstraction.boards_per_cluster", c.boards_per_cluster));
  return c;
}

std::string preflop_class(std::span<const Card> hole) {
  if (hole.size() == 1) return std::string(1, kRankChars[hole[0].rank()]);
  if (hole.size() != 2) throw std::invalid_argument("preflop_class: expected 1 or 2 cards");
  Card hi = hole[0], lo = hole[1];
  if (lo.rank() > hi.rank()) std::swap(hi, lo);
  std::string out{kRankChars[hi.rank()], kRankChars[lo.rank()]};
  if (hi.rank() != lo.rank()) out += hi.suit() == lo.suit() ? 's' : 'o';
  return out;
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// All boards of `size` cards when few enough, otherwise a seeded sample.
std::vector<std::vector<Card>> candidate_boards(const GameSpec& spec, int size, int cap,
                                                std::uint64_t seed) {
  std::vector<Card> deck = spec.deck();
  std::sort(deck.begin(), deck.end());
  const int n = static_cast<int>(deck.size());
  std::vector<std::vector<Card>> out;
  if (binomial(n, size) <= static_cast<std::uint64_t>(cap)) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Card> b;
      for (int i : idx) b.push_back(deck[i]);
      out.push_back(std::move(b));
      int p = size - 1;
      while (p >= 0 && idx[p] == n - size + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
    }
    return out;
  }
  Rng rng(seed);
  std::set<std::vector<Card>> seen;
  while (static_cast<int>(seen.size()) < cap) {
    std::vector<Card> d = deck;
    for (int i = 0; i < size; ++i) std::swap(d[i], d[i + rng.below(n - i)]);
    std::vector<Card> b(d.begin(), d.begin() + size);
    std::sort(b.begin(), b.end());
    seen.insert(std::move(b));
  }
  return {seen.begin(), seen.end()};
}

std::uint64_t mask_of(std::span<const Card> cards) { return CardSet(cards).mask(); }

}  // namespace

HoldemCardAbstraction HoldemCardAbstraction::build(const GameSpec& spec,
                                                   const HoldemAbstractionConfig& config) {
  if (config.buckets < 1 || config.clusters < 1) {
    throw std::invalid_argument("holdem abstraction: buckets and clusters must be >= 1");
  }
  HoldemCardAbstraction a(std::make_shared<const GameSpec>(spec), config);
  a.rounds_.resize(spec.num_rounds);
  for (int r = 1; r < spec.num_rounds; ++r) {
    const int size = spec.board_cards_before(r);
    const std::uint64_t round_seed = derive_seed(config.seed, static_cast<std::uint64_t>(r));
    const auto boards = candidate_boards(spec, size, config.max_boards, round_seed);
    BoardClusterResult clusters = cluster_boards(boards, config.clusters, round_seed);
    RoundModel& model = a.rounds_[r];
    model.upper.assign(clusters.model.num_clusters(), {});

    std::vector<std::vector<std::vector<Card>>> members(clusters.model.num_clusters());
    for (const auto& [board, c] : clusters.assignment) members[c].push_back(board);
    Rng rng(derive_seed(round_seed, 0xb0c4));
    for (std::size_t c = 0; c < members.size(); ++c) {
      auto& list = members[c];
      for (std::size_t i = 0; i < list.size(); ++i) {
        std::swap(list[i], list[i + rng.below(list.size() - i)]);
      }
      if (static_cast<int>(list.size()) > config.boards_per_cluster) {
        list.resize(config.boards_per_cluster);
      }
      EquityVector pooled;
      for (const auto& board : list) {
        EquityVector ev = rollout_equities(spec, board);
        pooled.insert(pooled.end(), ev.begin(), ev.end());
      }
      model.upper[c] = bucket_by_equity_percentiles(pooled, config.buckets).upper;
    }
    model.clustering = std::move(clusters.model);
  }
  return a;
}

HoldemCardAbstraction::HoldemCardAbstraction(const HoldemCardAbstraction& other)
    : spec_(other.spec_), config_(other.config_), rounds_(other.rounds_) {}

int HoldemCardAbstraction::cluster_of(int round, std::span<const Card> board) const {
  return rounds_.at(round).clustering.assign(board);
}

double HoldemCardAbstraction::equity(std::span<const Card> hole, std::span<const Card> board) const {
  if (static_cast<int>(board.size()) == spec_->total_board_cards()) {
    // Complete boards are cheap to score directly and too many to cache.
    const CardSet dead = CardSet(board) | CardSet(hole);
    double score = 0.0, count = 0.0;
    for (const Hand& opp : all_hands(*spec_, spec_->hole_cards, dead)) {
      const Showdown r = evaluate_showdown(board, hole, opp);
      score += r == Showdown::kWin ? 1.0 : r == Showdown::kTie ? 0.5 : 0.0;
      count += 1.0;
    }
    return count > 0.0 ? score / count : 0.5;
  }
  const std::uint64_t board_key = mask_of(board);
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(board_key);
    if (it != cache_.end()) return it->second.at(mask_of(hole));
  }
  std::unordered_map<std::uint64_t, double> table;
  for (const auto& e : rollout_equities(*spec_, board)) table.emplace(mask_of(e.hand), e.equity);
  const double value = table.at(mask_of(hole));
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(board_key, std::move(table));
  return value;
}

int HoldemCardAbstraction::bucket_of(int round, std::span<const Card> hole,
                                     std::span<const Card> board) const {
  const int c = cluster_of(round, board);
  return bucket_for_equity(rounds_.at(round).upper.at(c), equity(hole, board));
}

std::string HoldemCardAbstraction::label(int round, std::span<const Card> hole,
                                         std::span<const Card> board) const {
  if (round == 0 || board.empty()) return preflop_class(hole);
  return "c" + std::to_string(cluster_of(round, board)) + "b" +
         std::to_string(bucket_of(round, hole, board));
}

std::string HoldemCardAbstraction::describe() const {
  std::ostringstream out;
  save(out);
  return out.str();
}

void HoldemCardAbstraction::save(std::ostream& out) const {
  out.precision(17);
  out << "pokerlab-buckets 1\n";
  out << "spec " << spec_->hash() << '\n';
  out << "config " << config_.buckets << ' ' << config_.clusters << ' ' << config_.seed << ' '
      << config_.max_boards << ' ' << config_.boards_per_cluster << '\n';
  for (int r = 1; r < static_cast<int>(rounds_.size()); ++r) {
    const RoundModel& m = rounds_[r];
    out << "round " << r << ' ' << m.clustering.num_clusters() << '\n';
    for (int c = 0; c < m.clustering.num_clusters(); ++c) {
      out << "centroid";
      for (double v : m.clustering.centroids()[c]) out << ' ' << v;
      out << "\nupper";
      for (double v : m.upper[c]) out << ' ' << v;
      out << '\n';
    }
  }
}

HoldemCardAbstraction HoldemCardAbstraction::load(const GameSpec& spec, std::istream& in) {
  auto fail = [](const std::string& why) -> HoldemCardAbstraction {
    throw std::runtime_error("bucket file: " + why);
  };
  std::string word;
  int version = 0;
  if (!(in >> word >> version) || word != "pokerlab-buckets" || version != 1) {
    return fail("bad header");
  }
  std::uint64_t hash = 0;
  if (!(in >> word >> hash) || word != "spec") return fail("missing spec hash");
  if (hash != spec.hash()) return fail("game spec hash mismatch");
  HoldemAbstractionConfig config;
  if (!(in >> word >> config.buckets >> config.clusters >> config.seed >> config.max_boards >>
        config.boards_per_cluster) ||
      word != "config") {
    return fail("missing config line");
  }
  HoldemCardAbstraction a(std::make_shared<const GameSpec>(spec), config);
  a.rounds_.resize(spec.num_rounds);
  std::string line;
  std::getline(in, line);
  for (int r = 1; r < spec.num_rounds; ++r) {
    int round = 0, count = 0;
    if (!(in >> word >> round >> count) || word != "round" || round != r) {
      return fail("missing round " + std::to_string(r));
    }
    std::getline(in, line);
    std::vector<std::vector<double>> centroids;
    RoundModel& m = a.rounds_[r];
    for (int c = 0; c < count; ++c) {
      for (int which = 0; which < 2; ++which) {
        if (!std::getline(in, line)) return fail("truncated round " + std::to_string(r));
        std::istringstream row(line);
        row >> word;
        std::vector<double> values;
        double v;
        while (row >> v) values.push_back(v);
        if (which == 0 && word == "centroid") centroids.push_back(values);
        else if (which == 1 && word == "upper") m.upper.push_back(values);
        else return fail("unexpected row '" + word + "'");
      }
    }
    m.clustering = BoardClustering(std::move(centroids), BoardFeatureWeights{});
  }
  return a;
}

}  // namespace pokerlab
