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

#include <optional>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>

namespace pokerlab {

// Key/value configuration in INI syntax:
//
//   # comment
//   [game]
//   preset = river-nlhe
//   starting_stack = 20000
//
// Keys are addressed as "section.key". Environment overrides of the form
// POKERLAB_<SECTION>_<KEY> (upper case) take precedence when enabled.
class Config {
 public:
  Config() = default;
  explicit Config(boost::property_tree::ptree tree) : tree_(std::move(tree)) {}

  static Config from_file(const std::string& path);
  static Config from_string(const std::string& text);

  void apply_env_overrides(const std::vector<std::string>& keys);

  bool has(const std::string& key) const;
  std::optional<std::string> get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  // Whitespace or comma separated list.
  std::vector<std::string> get_list(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  const boost::property_tree::ptree& tree() const { return tree_; }

 private:
  boost::property_tree::ptree tree_;
};

}  // namespace pokerlab
