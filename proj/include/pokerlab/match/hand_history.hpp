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

#include <iosfwd>
#include <string>
#include <vector>

#include "pokerlab/io/json.hpp"
#include "pokerlab/match/harness.hpp"

namespace pokerlab {

// One JSON object per line. Every object carries "schema".
inline constexpr const char* kHandSchema = "pokerlab.hand/1";

Json translation_event_to_json(const TranslationEvent& event);
TranslationEvent translation_event_from_json(const Json& j);
Json decision_info_to_json(const DecisionInfo& info);
DecisionInfo decision_info_from_json(const Json& j);

Json hand_to_json(const HandRecord& record);
// Throws std::invalid_argument on a schema mismatch or missing field.
HandRecord hand_from_json(const Json& j);

void write_hand_history(std::ostream& out, const std::vector<HandRecord>& records);
std::vector<HandRecord> read_hand_history(std::istream& in);
void write_hand_history_file(const std::string& path, const std::vector<HandRecord>& records);
std::vector<HandRecord> read_hand_history_file(const std::string& path);

struct MatchReport {
  std::string agent_a;
  std::string agent_b;
  long long hands = 0;
  long long pairs = 0;
  Chips total_a = 0;
  double bb_per_100 = 0.0;
  Interval bb_per_100_ci;  // 95%, over complete pairs
  SampleSummary per_hand;
  SampleSummary per_pair;
  std::vector<std::uint64_t> forfeited_hands;
  OffTreeReport off_tree;
  // Complete pairs whose two plays do not share one deal.
  std::vector<std::uint64_t> broken_pairs;
  // Hands where the two seats' results do not cancel.
  std::vector<std::uint64_t> unbalanced_hands;
};

MatchReport build_report(const std::vector<HandRecord>& records, Chips big_blind);
Json report_to_json(const MatchReport& report);
std::string report_to_text(const MatchReport& report);

}  // namespace pokerlab
