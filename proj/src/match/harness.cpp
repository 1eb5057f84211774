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

#include "pokerlab/match/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pokerlab/util/hashing.hpp"

namespace pokerlab {

Deal make_deal(const GameSpec& spec, std::uint64_t seed) {
  std::vector<Card> deck = spec.deck();
  Rng rng(seed);
  for (std::size_t i = deck.size(); i > 1; --i) {
    std::swap(deck[i - 1], deck[rng.below(i)]);
  }
  const auto h = static_cast<std::size_t>(spec.hole_cards);
  const auto b = static_cast<std::size_t>(spec.total_board_cards());
  if (2 * h + b > deck.size()) throw std::invalid_argument("deck too small for a deal");
  Deal d;
  d.hole[0].assign(deck.begin(), deck.begin() + static_cast<long>(h));
  d.hole[1].assign(deck.begin() + static_cast<long>(h), deck.begin() + static_cast<long>(2 * h));
  d.board.assign(deck.begin() + static_cast<long>(2 * h),
                 deck.begin() + static_cast<long>(2 * h + b));
  return d;
}

namespace {

void forfeit(HandRecord& rec, const BettingState& state, int seat, std::string why) {
  rec.forfeit_seat = seat;
  rec.forfeit_reason = std::move(why);
  const Chips lost = state.total_committed(seat);
  rec.result[seat] = -lost;
  rec.result[1 - seat] = lost;
}

void finish(HandRecord& rec, const BettingState& state) {
  rec.actions = state.history();
  rec.history = state.history_string();
  rec.board_shown = state.board();
}

}  // namespace

HandRecord play_hand(std::shared_ptr<const GameSpec> spec, const std::array<Agent*, 2>& agents,
                     const Deal& deal, const HandSeeds& seeds) {
  HandRecord rec;
  rec.deal = deal;
  for (int s = 0; s < 2; ++s) rec.agent_at_seat[s] = agents[s]->name();
  BettingState state = BettingState::deal_hand(spec, deal.hole[0], deal.hole[1]);
  for (int s = 0; s < 2; ++s) {
    try {
      agents[s]->begin_hand(state.redacted_for(s), s, seeds.agent[s]);
    } catch (const std::exception& e) {
      forfeit(rec, state, s, e.what());
      finish(rec, state);
      return rec;
    }
  }
  std::size_t board_pos = 0;
  while (!state.is_terminal()) {
    if (state.is_chance()) {
      const auto n = static_cast<std::size_t>(state.pending_deal_size());
      const std::vector<Card> cards(deal.board.begin() + static_cast<long>(board_pos),
                                    deal.board.begin() + static_cast<long>(board_pos + n));
      board_pos += n;
      state = deal_cards(state, cards);
      continue;
    }
    const int s = state.to_act();
    Decision d;
    try {
      d = agents[s]->act(state.redacted_for(s));
    } catch (const std::exception& e) {
      forfeit(rec, state, s, std::string("agent error: ") + e.what());
      finish(rec, state);
      return rec;
    }
    if (!legal_actions(state).allows(d.action)) {
      forfeit(rec, state, s, "illegal action " + to_string(d.action) + " after '" +
                                 state.history_string() + "'");
      finish(rec, state);
      return rec;
    }
    rec.decisions.push_back({s, state.round(), state.history_string(), d.action, std::move(d.info)});
    for (int t = 0; t < 2; ++t) {
      try {
        agents[t]->observe(state.redacted_for(t), d.action);
      } catch (const std::exception& e) {
        forfeit(rec, state, t, std::string("agent error: ") + e.what());
        finish(rec, state);
        return rec;
      }
    }
    state = apply_action(state, d.action);
  }
  rec.result[0] = state.outcome()->payoff;
  rec.result[1] = -rec.result[0];
  finish(rec, state);
  return rec;
}

std::array<HandRecord, 2> play_duplicate_pair(std::shared_ptr<const GameSpec> spec, Agent& a,
                                              Agent& b, const Deal& deal,
                                              std::uint64_t pair_seed, std::uint64_t pair) {
  std::array<HandRecord, 2> out;
  for (int play = 0; play < 2; ++play) {
    const std::array<Agent*, 2> seats = play == 0 ? std::array<Agent*, 2>{&a, &b}
                                                  : std::array<Agent*, 2>{&b, &a};
    const std::array<int, 2> side_at_seat = play == 0 ? std::array<int, 2>{0, 1}
                                                      : std::array<int, 2>{1, 0};
    HandSeeds seeds;
    for (int s = 0; s < 2; ++s) {
      seeds.agent[s] = derive_seed(pair_seed, static_cast<std::uint64_t>(1 + 2 * play + side_at_seat[s]));
    }
    out[play] = play_hand(spec, seats, deal, seeds);
    out[play].pair = pair;
    out[play].play = play;
    out[play].hand_id = 2 * pair + static_cast<std::uint64_t>(play);
    out[play].side_at_seat = side_at_seat;
  }
  return out;
}

double bb_per_100(double total_chips, long long n_hands, double big_blind) {
  if (n_hands < 1) throw std::invalid_argument("bb_per_100 needs at least one hand");
  if (!(big_blind > 0.0)) throw std::invalid_argument("big blind must be positive");
  return total_chips / big_blind / (static_cast<double>(n_hands) / 100.0);
}

DuplicateResult play_duplicate_match(Agent& a, Agent& b, int n_pairs,
                                     std::shared_ptr<const GameSpec> spec, std::uint64_t seed) {
  if (n_pairs < 1) throw std::invalid_argument("a match needs at least one pair");
  DuplicateResult r;
  r.agent_a = a.name();
  r.agent_b = b.name();
  r.seed = seed;
  r.spec_hash = spec->hash();
  r.big_blind = spec->big_blind;
  r.hands.reserve(2 * static_cast<std::size_t>(n_pairs));
  std::vector<double> per_hand, per_pair;
  for (int p = 0; p < n_pairs; ++p) {
    const auto pair = static_cast<std::uint64_t>(p);
    const std::uint64_t pair_seed = derive_seed(seed, pair);
    const Deal deal = make_deal(*spec, derive_seed(pair_seed, 0));
    auto plays = play_duplicate_pair(spec, a, b, deal, pair_seed, pair);
    PairResult pr;
    pr.pair = pair;
    for (int q = 0; q < 2; ++q) {
      pr.side_a[q] = plays[q].result_for_side(0);
      per_hand.push_back(static_cast<double>(pr.side_a[q]));
      if (plays[q].forfeit_seat) ++r.forfeits;
      r.hands.push_back(std::move(plays[q]));
    }
    per_pair.push_back(static_cast<double>(pr.combined()));
    r.total_a += pr.combined();
    r.pairs.push_back(pr);
  }
  r.hands_played = 2LL * n_pairs;
  r.bb_per_100 = bb_per_100(static_cast<double>(r.total_a), r.hands_played,
                            static_cast<double>(r.big_blind));
  r.per_hand = summarize(per_hand);
  r.per_pair = summarize(per_pair);
  return r;
}

GroupSummary summarize_group(const std::vector<const DuplicateResult*>& matches) {
  GroupSummary g;
  std::vector<double> pairs;
  double bb = 0.0;
  for (const auto* m : matches) {
    g.total += m->total_a;
    g.hands += m->hands_played;
    bb = static_cast<double>(m->big_blind);
    for (const auto& p : m->pairs) pairs.push_back(static_cast<double>(p.combined()));
  }
  if (g.hands == 0) return g;
  g.bb_per_100 = bb_per_100(static_cast<double>(g.total), g.hands, bb);
  // A pair is two hands, so the per-hand rate is half the pair mean.
  const auto s = summarize(pairs);
  const Interval ci = s.mean_ci();
  g.bb_per_100_ci = {ci.low / 2.0 / bb * 100.0, ci.high / 2.0 / bb * 100.0};
  return g;
}

std::vector<PerceptionPoint> perception_trace(const HandRecord& record, int seat,
                                              Chips threshold) {
  std::vector<PerceptionPoint> out;
  for (const auto& d : record.decisions) {
    if (seat >= 0 && d.seat != seat) continue;
    PerceptionPoint p;
    p.seat = d.seat;
    p.true_pot = d.info.true_pot;
    p.perceived_pot = d.info.perceived_pot;
    p.divergence = p.true_pot - p.perceived_pot;
    p.translated = !d.info.translations.empty();
    p.flagged = std::abs(p.divergence) > threshold;
    out.push_back(p);
  }
  return out;
}

OffTreeReport off_tree_report(const std::vector<HandRecord>& records, std::size_t top) {
  OffTreeReport r;
  r.hands = static_cast<long long>(records.size());
  for (const auto& rec : records) {
    OffTreeHand h;
    h.hand_id = rec.hand_id;
    for (const auto& d : rec.decisions) {
      h.max_divergence = std::max(h.max_divergence, std::abs(d.info.true_pot - d.info.perceived_pot));
      for (const auto& e : d.info.translations) {
        ++h.translation_events;
        if (e.randomized) ++r.randomized_events;
        if (e.mapped_down) ++r.mapped_down;
        r.f_values.push_back(e.f);
        const int bin = std::clamp(static_cast<int>(std::floor(e.f * 10.0)), 0, 9);
        ++r.f_histogram[static_cast<std::size_t>(bin)];
      }
    }
    r.translation_events += h.translation_events;
    if (h.max_divergence > 0) ++r.hands_with_divergence;
    r.per_hand.push_back(h);
  }
  r.worst = r.per_hand;
  std::stable_sort(r.worst.begin(), r.worst.end(), [](const OffTreeHand& x, const OffTreeHand& y) {
    return x.max_divergence > y.max_divergence;
  });
  std::erase_if(r.worst, [](const OffTreeHand& h) { return h.max_divergence == 0; });
  if (r.worst.size() > top) r.worst.resize(top);
  return r;
}

VarianceComparison variance_comparison(Agent& a, Agent& b, int n,
                                       std::shared_ptr<const GameSpec> spec, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("variance comparison needs at least two pairs");
  VarianceComparison v;
  v.n = n;
  const DuplicateResult dup = play_duplicate_match(a, b, n, spec, seed);
  std::vector<double> dup_means, ind_means;
  dup_means.reserve(dup.pairs.size());
  for (const auto& p : dup.pairs) dup_means.push_back(static_cast<double>(p.combined()) / 2.0);

  const std::uint64_t ind_seed = derive_seed(seed, 0x1d1d1d1dULL);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t ps = derive_seed(ind_seed, static_cast<std::uint64_t>(i));
    Chips sum = 0;
    for (int play = 0; play < 2; ++play) {
      const Deal deal = make_deal(*spec, derive_seed(ps, static_cast<std::uint64_t>(10 + play)));
      const std::array<Agent*, 2> seats = play == 0 ? std::array<Agent*, 2>{&a, &b}
                                                    : std::array<Agent*, 2>{&b, &a};
      const int a_seat = play == 0 ? 0 : 1;
      HandSeeds seeds;
      for (int s = 0; s < 2; ++s) {
        seeds.agent[s] = derive_seed(ps, static_cast<std::uint64_t>(1 + 2 * play + (s == a_seat ? 0 : 1)));
      }
      sum += play_hand(spec, seats, deal, seeds).result[a_seat];
    }
    ind_means.push_back(static_cast<double>(sum) / 2.0);
  }
  v.duplicate = summarize(dup_means);
  v.independent = summarize(ind_means);
  v.duplicate_ci = v.duplicate.variance_ci();
  v.independent_ci = v.independent.variance_ci();
  const double se = std::hypot(v.duplicate.variance_std_error(), v.independent.variance_std_error());
  const double diff = v.independent.variance - v.duplicate.variance;
  if (se > 0.0) {
    v.z = diff / se;
  } else {
    v.z = diff > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  v.duplicate_lower_95 = v.z > 1.6448536269514722;
  return v;
}

}  // namespace pokerlab
