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

// rookgon command-line tool. Every command is forwarded as a JSON request to
// rookgon_run() in the shared library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rookgon/rookgon.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitClaimFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Json ReadJsonFile(const std::string& path) {
  try {
    return Json::parse(ReadFile(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void LogToStderr(const char* line, void*) { std::fprintf(stderr, "rookgon: %s\n", line); }

struct Globals {
  int threads = 1;
  std::uint64_t seed = 0;
  std::string cache_dir;
  std::optional<double> budget_secs;
  std::string output;
  bool timing = false;
  bool quiet = false;
};

int Run(const std::string& command, Json request, const Globals& g) {
  request["threads"] = g.threads;
  if (g.timing) request["timing"] = true;
  if (!g.cache_dir.empty()) request["cache_dir"] = g.cache_dir;

  char* report = nullptr;
  int exit_code = 0;
  const rookgon_status status =
      rookgon_run(command.c_str(), request.dump().c_str(), g.quiet ? nullptr : LogToStderr,
                  nullptr, &report, &exit_code);
  if (status != ROOKGON_OK) {
    std::fprintf(stderr, "rookgon: error: %s\n", rookgon_last_error());
    return status == ROOKGON_ERR_INTERNAL ? kExitClaimFailed : kExitUsage;
  }
  const std::string text = report;
  rookgon_string_free(report);
  if (g.output.empty() || g.output == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    std::ofstream out(g.output, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text)) {
      std::fprintf(stderr, "rookgon: error: cannot write %s\n", g.output.c_str());
      return kExitUsage;
    }
  }
  return exit_code;
}

// Graph from --graph FILE or --dims.
void AddGraphSource(CLI::App* cmd, std::string* graph_file, std::vector<int>* dims) {
  auto* file = cmd->add_option("--graph", *graph_file, "graph JSON file");
  cmd->add_option("--dims", *dims, "rook graph dimensions, e.g. 3,4")
      ->delimiter(',')
      ->excludes(file);
}

void PutGraph(Json& request, const std::string& graph_file, const std::vector<int>& dims) {
  if (!graph_file.empty()) {
    request["graph"] = ReadJsonFile(graph_file);
  } else if (!dims.empty()) {
    request["dims"] = dims;
  } else {
    throw UsageError("give --graph FILE or --dims");
  }
}

Json ParseDivisor(const std::string& chips, const std::string& file) {
  if (!file.empty()) return ReadJsonFile(file);
  if (chips.empty()) throw UsageError("give --divisor a,b,... or --divisor-file FILE");
  Json out = Json::array();
  std::stringstream in(chips);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad chip count '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rookgon: chip-firing gonality and scramble orders of rook graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(rookgon_version()));

  Globals g;
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--cache-dir", g.cache_dir, "report cache directory")->envname("ROOKGON_CACHE");
  app.add_option("--budget-secs", g.budget_secs, "wall-clock budget for verify");
  app.add_option("-o,--output", g.output, "write the report here instead of stdout");
  app.add_flag("--timing", g.timing, "record wall time in reports (disables the cache)");
  app.add_flag("-q,--quiet", g.quiet, "no log lines on stderr");

  std::string command;
  Json request = Json::object();

  // graph gen
  auto* graph = app.add_subcommand("graph", "graph utilities")->require_subcommand(1);
  auto* gen = graph->add_subcommand("gen", "print a rook or complete graph as JSON");
  std::string family = "rook";
  std::vector<int> gen_dims;
  int complete_n = 0;
  gen->add_option("--family", family, "rook or complete")
      ->check(CLI::IsMember({"rook", "complete"}));
  gen->add_option("--dims", gen_dims, "rook dimensions")->delimiter(',');
  gen->add_option("--n", complete_n, "size of the complete graph");
  gen->callback([&] {
    command = "graph.gen";
    request["family"] = family;
    if (family == "rook") request["dims"] = gen_dims;
    if (family == "complete") request["n"] = complete_n;
  });

  // reduce / rank / winnable share their inputs
  std::string graph_file, chips, divisor_file;
  std::vector<int> dims;
  int vertex = 0;
  std::optional<int> at_least;
  auto divisor_command = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    AddGraphSource(cmd, &graph_file, &dims);
    cmd->add_option("--divisor", chips, "chip counts, e.g. 2,0,-1,0");
    cmd->add_option("--divisor-file", divisor_file, "divisor JSON file");
    cmd->callback([&, name] {
      command = name;
      PutGraph(request, graph_file, dims);
      request["divisor"] = ParseDivisor(chips, divisor_file);
      if (command == "reduce") request["vertex"] = vertex;
      if (command == "rank" && at_least) request["at_least"] = *at_least;
    });
    return cmd;
  };
  divisor_command("reduce", "v-reduced form of a divisor")
      ->add_option("--vertex", vertex, "base vertex");
  divisor_command("rank", "Baker-Norine rank of a divisor")
      ->add_option("--at-least", at_least, "only check rank >= K, with a counterexample");
  divisor_command("winnable", "whether a divisor is equivalent to an effective one");

  // gonality
  auto* gon = app.add_subcommand("gonality", "k-th gonality by exhaustive search");
  int k = 1;
  std::optional<int> cap, lower_bound;
  std::string symmetry = "on";
  bool poorest = false;
  AddGraphSource(gon, &graph_file, &dims);
  gon->add_option("--k", k, "rank target")->check(CLI::PositiveNumber);
  gon->add_option("--cap", cap, "largest degree to search");
  gon->add_option("--symmetry", symmetry, "orbit pruning on rook graphs")
      ->check(CLI::IsMember({"on", "off"}));
  gon->add_option("--lower-bound", lower_bound, "skip degrees below B");
  gon->add_flag("--poorest-lines", poorest, "report row/column chip totals of the witness");
  gon->callback([&] {
    command = "gonality";
    PutGraph(request, graph_file, dims);
    request["k"] = k;
    request["symmetry"] = symmetry == "on";
    if (cap) request["cap"] = *cap;
    if (lower_bound) request["lower_bound"] = *lower_bound;
    if (poorest) request["poorest_lines"] = true;
  });

  // scramble order / avoidance
  auto* scramble = app.add_subcommand("scramble", "scramble orders")->require_subcommand(1);
  auto* order = scramble->add_subcommand("order", "hitting number, egg cut and order");
  std::string scramble_family, scramble_file, format = "json";
  std::vector<int> scramble_dims;
  std::optional<int> egg_size;
  auto* fam = order->add_option("--family", scramble_family, "star, uniform, tstar, square-star")
                  ->check(CLI::IsMember({"star", "uniform", "tstar", "square-star"}));
  order->add_option("--dims", scramble_dims, "host dimensions")->delimiter(',');
  order->add_option("--k", egg_size, "egg size for the uniform family");
  order->add_option("--file", scramble_file, "scramble JSON file")->excludes(fam);
  order->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  order->callback([&] {
    command = "scramble.order";
    if (!scramble_file.empty()) {
      request["scramble"] = ReadJsonFile(scramble_file);
    } else if (!scramble_family.empty()) {
      request["family"] = scramble_family;
      if (!scramble_dims.empty()) request["dims"] = scramble_dims;
      if (egg_size) request["k"] = *egg_size;
    } else {
      throw UsageError("give --family or --file");
    }
    request["format"] = format;
  });

  auto* avoid = scramble->add_subcommand("avoidance", "explicit avoidance set constructions");
  std::string construction;
  std::vector<int> params;
  avoid->add_option("--construction", construction, "thm56 (staircase) or setA (diagonal)")
      ->required()
      ->check(CLI::IsMember({"thm56", "staircase", "setA", "diagonal"}));
  avoid->add_option("--params", params, "n,m for thm56; n for setA")->required()->delimiter(',');
  avoid->callback([&] {
    command = "scramble.avoidance";
    request["construction"] = construction;
    request["n"] = params.at(0);
    if (params.size() > 1) request["m"] = params[1];
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "smoke";
  verify->add_option("--suite", suite, "smoke, paper-small or paper-full");
  verify->callback([&] {
    command = "verify";
    request["suite"] = suite;
    request["seed"] = g.seed;
    if (g.budget_secs) request["budget_secs"] = *g.budget_secs;
  });

  // table
  auto* table = app.add_subcommand("table", "tabulate gonality or scramble order reports");
  std::vector<std::string> report_files;
  std::string table_format = "csv";
  table->add_option("reports", report_files, "report JSON files")->required();
  table->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->callback([&] {
    command = "table";
    request["reports"] = Json::array();
    for (const std::string& f : report_files) request["reports"].push_back(ReadJsonFile(f));
    request["format"] = table_format;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "rookgon: error: %s\n", e.what());
    return kExitUsage;
  }
  return Run(command, std::move(request), g);
}
