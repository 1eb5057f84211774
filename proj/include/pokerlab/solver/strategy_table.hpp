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
#include <string>
#include <vector>

namespace pokerlab {

struct StrategyMetadata {
  std::uint64_t spec_hash = 0;
  std::uint64_t abstraction_hash = 0;
  std::uint64_t iterations = 0;
  std::string postprocess;  // empty, or a description of the applied schedule
};

// Infoset key -> probability vector over the infoset's abstract actions.
class StrategyTable {
 public:
  StrategyMetadata meta;

  bool contains(const std::string& key) const { return table_.count(key) > 0; }
  // Throws std::out_of_range naming the key.
  const std::vector<double>& at(const std::string& key) const;
  void set(const std::string& key, std::vector<double> probs);
  std::size_t size() const { return table_.size(); }
  const std::map<std::string, std::vector<double>>& entries() const { return table_; }

  // Every vector nonnegative and summing to 1 within `tol`.
  bool is_normalized(double tol = 1e-9) const;

  // Binary layout: "PLST", u32 version, u64 spec hash, u64 abstraction hash,
  // u64 iterations, u32 postprocess length + bytes, u64 record count, then
  // sorted records of u32 key length + key bytes + u32 n + n float64.
  // Little-endian host order.
  void save(std::ostream& out) const;
  static StrategyTable load(std::istream& in);
  void save_file(const std::string& path) const;
  static StrategyTable load_file(const std::string& path);

 private:
  std::map<std::string, std::vector<double>> table_;
};

}  // namespace pokerlab
