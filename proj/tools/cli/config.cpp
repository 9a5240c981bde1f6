/*
   Copyright 2026 The frobinc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace frobinc::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("config: bad value for " + key + ": '" + text + "'");
  return value;
}

}  // namespace

Config parse_config(std::istream& in, Config base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "max_pairs") {
      base.max_pairs = parse_number<std::uint64_t>(key, value);
    } else if (key == "max_code_dim") {
      base.max_code_dim = parse_number<int>(key, value);
      if (base.max_code_dim < 0 || base.max_code_dim > 40) throw std::invalid_argument("config: max_code_dim must be in [0, 40]");
    } else if (key == "precision_bits") {
      base.precision_bits = parse_number<int>(key, value);
      if (base.precision_bits < 8 || base.precision_bits > 160) {
        throw std::invalid_argument("config: precision_bits must be in [8, 160]");
      }
    } else if (key == "threads") {
      base.threads = parse_number<unsigned>(key, value);
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return base;
}

Config load_config_file(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  return parse_config(in, base);
}

std::optional<std::string> config_path_from_env() {
  const char* v = std::getenv("FROBINC_CONFIG");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

int digits_for_bits(int bits) { return static_cast<int>(std::floor(bits * std::log10(2.0))); }

}  // namespace frobinc::cli
