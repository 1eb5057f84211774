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

#include "pokerlab/solver/strategy_table.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace pokerlab {

namespace {

constexpr char kMagic[4] = {'P', 'L', 'S', 'T'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  T v{};
  if (!in.read(reinterpret_cast<char*>(&v), sizeof(T))) {
    throw std::runtime_error("strategy file truncated");
  }
  return v;
}

std::string get_string(std::istream& in) {
  const auto n = get<std::uint32_t>(in);
  std::string s(n, '\0');
  if (n > 0 && !in.read(s.data(), n)) throw std::runtime_error("strategy file truncated");
  return s;
}

}  // namespace

const std::vector<double>& StrategyTable::at(const std::string& key) const {
  auto it = table_.find(key);
  if (it == table_.end()) throw std::out_of_range("strategy has no infoset '" + key + "'");
  return it->second;
}

void StrategyTable::set(const std::string& key, std::vector<double> probs) {
  table_[key] = std::move(probs);
}

bool StrategyTable::is_normalized(double tol) const {
  for (const auto& [key, v] : table_) {
    double total = 0.0;
    for (double p : v) {
      if (p < 0.0 || !std::isfinite(p)) return false;
      total += p;
    }
    if (std::abs(total - 1.0) > tol) return false;
  }
  return true;
}

void StrategyTable::save(std::ostream& out) const {
  out.write(kMagic, 4);
  put(out, kVersion);
  put(out, meta.spec_hash);
  put(out, meta.abstraction_hash);
  put(out, meta.iterations);
  put(out, static_cast<std::uint32_t>(meta.postprocess.size()));
  out.write(meta.postprocess.data(), static_cast<std::streamsize>(meta.postprocess.size()));
  put(out, static_cast<std::uint64_t>(table_.size()));
  for (const auto& [key, v] : table_) {
    put(out, static_cast<std::uint32_t>(key.size()));
    out.write(key.data(), static_cast<std::streamsize>(key.size()));
    put(out, static_cast<std::uint32_t>(v.size()));
    for (double p : v) put(out, p);
  }
}

StrategyTable StrategyTable::load(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    throw std::runtime_error("not a strategy file (bad magic)");
  }
  const auto version = get<std::uint32_t>(in);
  if (version != kVersion) {
    throw std::runtime_error("unsupported strategy file version " + std::to_string(version));
  }
  StrategyTable t;
  t.meta.spec_hash = get<std::uint64_t>(in);
  t.meta.abstraction_hash = get<std::uint64_t>(in);
  t.meta.iterations = get<std::uint64_t>(in);
  t.meta.postprocess = get_string(in);
  const auto count = get<std::uint64_t>(in);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::string key = get_string(in);
    const auto n = get<std::uint32_t>(in);
    std::vector<double> v(n);
    for (auto& p : v) p = get<double>(in);
    t.table_.emplace(std::move(key), std::move(v));
  }
  return t;
}

void StrategyTable::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  save(out);
}

StrategyTable StrategyTable::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open strategy file " + path);
  return load(in);
}

}  // namespace pokerlab
