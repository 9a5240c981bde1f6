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


#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace frobinc::cli {

/// Budgets and precision shared by all subcommands. Precedence: command
/// line flags, then the config file, then these defaults.
struct Config {
  std::uint64_t max_pairs = 100'000'000;
  int max_code_dim = 26;
  int precision_bits = 64;
  /// 0 means one worker per available core.
  unsigned threads = 0;
};

/// Parses flat "key = value" lines; '#' starts a comment. Throws
/// std::invalid_argument on unknown keys or malformed values.
Config parse_config(std::istream& in, Config base = {});
Config load_config_file(const std::string& path, Config base = {});

/// Path named by FROBINC_CONFIG, if set and non-empty.
std::optional<std::string> config_path_from_env();

/// Significant decimal digits for `bits` of mantissa.
int digits_for_bits(int bits);

}  // namespace frobinc::cli
