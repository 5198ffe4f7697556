// Copyright 2026 The rookgon Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the installed command-line binary and checks its exit codes.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run Cli(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / "rookgon_cli_out.txt";
  const std::string cmd = std::string(ROOKGON_CLI) + " -q " + args + " > " + out.string() +
                          " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

}  // namespace

TEST_CASE("successful commands exit 0") {
  CHECK(Cli("graph gen --dims 2,3").code == 0);
  CHECK(Cli("graph gen --family complete --n 4").code == 0);
  const Run gon = Cli("gonality --dims 2,3 --threads 2");
  CHECK(gon.code == 0);
  CHECK(gon.out.find("\"value\": 3") != std::string::npos);
  CHECK(Cli("reduce --dims 2,2 --divisor 2,0,0,0 --vertex 3").code == 0);
  CHECK(Cli("rank --dims 2,2 --divisor 1,1,1,1 --at-least 3").code == 0);
  CHECK(Cli("winnable --dims 2,2 --divisor -1,1,0,0").code == 0);
  CHECK(Cli("scramble order --family uniform --dims 2,3 --k 1 --format csv").code == 0);
  CHECK(Cli("scramble avoidance --construction thm56 --params 4,5").code == 0);
  CHECK(Cli("verify --suite smoke --seed 0").code == 0);

  const fs::path report = fs::temp_directory_path() / "rookgon_cli_report.json";
  CHECK(Cli("gonality --dims 2,2 -o " + report.string()).code == 0);
  const Run table = Cli("table " + report.string());
  CHECK(table.code == 0);
  CHECK(table.out.rfind("dims,k,value", 0) == 0);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(Cli("").code == 2);
  CHECK(Cli("frobnicate").code == 2);
  CHECK(Cli("gonality").code == 2);                       // no graph
  CHECK(Cli("gonality --dims 2,x").code == 2);            // bad number
  CHECK(Cli("gonality --dims 2,3 --symmetry maybe").code == 2);
  CHECK(Cli("rank --dims 2,2 --divisor 1,1").code == 2);  // wrong length
  CHECK(Cli("scramble order --file /nonexistent.json").code == 2);
  CHECK(Cli("verify --suite enormous").code == 2);
  CHECK(Cli("scramble avoidance --construction thm56 --params 4,6").code == 2);
  CHECK(Cli("--help").code == 0);
}
