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

#include <string>
#include <vector>

#include "cli/config.hpp"

namespace frobinc::cli {

/// One expected-versus-computed comparison of a reproduction run.
struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct Report {
  std::string target;
  std::vector<Check> checks;
  bool pass() const;
};

/// Names accepted by reproduce().
const std::vector<std::string>& reproduce_targets();

/// Runs one end-to-end reproduction pipeline. Throws std::invalid_argument
/// for an unknown target.
Report reproduce(const std::string& target, const Config& config);

}  // namespace frobinc::cli
