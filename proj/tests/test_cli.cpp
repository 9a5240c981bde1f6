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


#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "cli/config.hpp"

using frobinc::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "frobinc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("frobinc_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("help lists every subcommand") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  for (const char* cmd : {"betti", "tau", "npoly", "count", "intersect", "gram", "lattice", "code", "reproduce",
                          "density", "mh-bound"})
    CHECK(r.out.find(cmd) != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(invoke({"betti", "--n", "abc", "--l", "1", "--c", "1", "--r", "2", "--s", "2"}).code == 2);
  CHECK(invoke({"betti", "--n", "4"}).code == 2);
  CHECK(invoke({"--frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"reproduce", "everything"}).code == 2);
  CHECK(invoke({"--precision-bits", "4", "mh-bound", "--rank", "8"}).code == 2);
}

TEST_CASE("betti JSON") {
  const auto r = invoke({"betti", "--n", "4", "--l", "1", "--c", "1", "--r", "2", "--s", "2", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"b\":[1,2,87,2,1]}\n");
  const auto plain = invoke({"betti", "--n", "3", "--l", "1", "--c", "1", "--r", "2", "--s", "2"});
  CHECK(plain.out.find("b2 22") != std::string::npos);
}

TEST_CASE("large values are emitted as JSON strings") {
  const auto r = invoke({"--json", "betti", "--n", "7", "--l", "2", "--c", "2", "--r", "16", "--s", "16"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"") != std::string::npos);
}

TEST_CASE("domain errors exit with status 1") {
  const auto r = invoke({"betti", "--n", "4", "--l", "1", "--c", "1", "--r", "2", "--s", "3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") == 0);
  CHECK(invoke({"count", "--n", "3", "--l", "1", "--c", "1", "--r", "2", "--s", "2", "--nu", "1", "--max-pairs",
                "10"})
            .code == 1);
  CHECK(invoke({"code", "weights", "--level", "7"}).code == 1);
}

TEST_CASE("polynomials as term lists") {
  const auto r = invoke({"npoly", "--n", "3", "--l", "1", "--c", "1"});
  CHECK(r.out == "1 x^0 y^0\n2 x^0 y^1\n1 x^0 y^2\n1 x^1 y^1\n1 x^2 y^1\n");
  const auto t = invoke({"--json", "tau", "--n", "3", "--l", "1", "--d", "0"});
  CHECK(t.out == "{\"n\":3,\"l\":1,\"d\":0,\"terms\":[{\"coeff\":1,\"x\":0,\"y\":1},{\"coeff\":-1,\"x\":1,\"y\":0},"
                "{\"coeff\":1,\"x\":0,\"y\":2},{\"coeff\":-1,\"x\":2,\"y\":0}]}\n");
}

TEST_CASE("count and intersect") {
  const auto r = invoke({"--json", "count", "--n", "3", "--l", "1", "--c", "1", "--r", "2", "--s", "2", "--nu", "2"});
  CHECK(r.out == "{\"count\":609,\"formula\":609,\"match\":true}\n");
  CHECK(invoke({"intersect", "--n", "4", "--r", "2", "--s", "2", "--m", "1", "--k", "3"}).out == "4\n");
  CHECK(invoke({"intersect", "--n", "6", "--r", "2", "--s", "2", "--m", "3", "--k", "3", "--l", "2"}).out == "21\n");
}

TEST_CASE("lattice commands on a Gram file") {
  const auto path = temp_file("a2.txt", "2\n2 -1\n-1 2\n");
  CHECK(invoke({"lattice", "disc", "--gram", path}).out == "3\n");
  CHECK(invoke({"lattice", "even", "--gram", path}).out == "true\n");
  const auto d = invoke({"--json", "lattice", "density", "--gram", path, "--min-norm", "2"});
  CHECK(d.code == 0);
  CHECK(d.out.find("\"rank\":2,\"disc\":3") != std::string::npos);
  CHECK(invoke({"lattice", "disc", "--gram", "/nonexistent/gram.txt"}).code == 2);
}

TEST_CASE("gram output for the projective plane") {
  const auto r = invoke({"gram", "--n", "3", "--r", "2", "--s", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 3) == "44\n");
  CHECK(invoke({"gram", "--n", "3", "--r", "2", "--s", "2", "--q", "8"}).code == 1);
}

TEST_CASE("JSON output is deterministic") {
  const std::vector<std::string> args{"--json", "density", "--rank", "84", "--disc", "5570560", "--min-norm", "8"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("{\"rank\":84,\"disc\":5570560,\"min_norm\":8,\"delta\":", 0) == 0);
}

TEST_CASE("config files and precedence") {
  using frobinc::cli::Config;
  std::istringstream good("# budgets\nmax_pairs = 1000\nmax_code_dim=20\nprecision_bits = 100\nthreads = 3\n");
  const Config c = frobinc::cli::parse_config(good);
  CHECK(c.max_pairs == 1000);
  CHECK(c.max_code_dim == 20);
  CHECK(c.precision_bits == 100);
  CHECK(c.threads == 3);
  std::istringstream unknown("colour = blue\n");
  CHECK_THROWS_AS(frobinc::cli::parse_config(unknown), std::invalid_argument);
  std::istringstream bad("max_pairs = many\n");
  CHECK_THROWS_AS(frobinc::cli::parse_config(bad), std::invalid_argument);

  const auto tight = temp_file("tight.conf", "max_pairs = 10\n");
  const std::vector<std::string> count{"count", "--n", "3", "--l", "1", "--c", "1", "--r", "2", "--s", "2", "--nu", "1"};
  auto with_config = count;
  with_config.insert(with_config.begin(), {"--config", tight});
  CHECK(invoke(with_config).code == 1);
  with_config.insert(with_config.end(), {"--max-pairs", "1000"});
  CHECK(invoke(with_config).code == 0);

  const auto broken = temp_file("broken.conf", "max_pairs\n");
  CHECK(invoke({"--config", broken, "mh-bound", "--rank", "8"}).code == 2);
  ::setenv("FROBINC_CONFIG", broken.c_str(), 1);
  CHECK(invoke({"mh-bound", "--rank", "8"}).code == 2);
  ::unsetenv("FROBINC_CONFIG");

  const auto coarse = invoke({"--precision-bits", "10", "mh-bound", "--rank", "84"});
  const auto fine = invoke({"--precision-bits", "150", "mh-bound", "--rank", "84"});
  CHECK(coarse.out.size() < fine.out.size());
}

TEST_CASE("reproduce reports every check") {
  const auto r = invoke({"reproduce", "k3-surface"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS count[nu=1]  expected=105  computed=105") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const auto j = invoke({"--json", "reproduce", "betti-n7"});
  CHECK(j.out.rfind("{\"target\":\"betti-n7\",\"pass\":true", 0) == 0);
}
