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

#include "rookgon/commands.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "rookgon/cache.hpp"
#include "rookgon/divisor.hpp"
#include "rookgon/error.hpp"
#include "rookgon/families.hpp"
#include "rookgon/gonality.hpp"
#include "rookgon/graph.hpp"
#include "rookgon/rank.hpp"
#include "rookgon/report.hpp"
#include "rookgon/scramble.hpp"
#include "rookgon/suite.hpp"
#include "rookgon/symmetry.hpp"

namespace rookgon {

namespace {

using Clock = std::chrono::steady_clock;

struct Env {
  const Json& request;
  const LogFn& log;

  void Log(const std::string& line) const {
    if (log) log(line);
  }
  bool Has(const char* key) const {
    return request.contains(key) && !request.at(key).is_null();
  }
  template <typename T>
  T Get(const char* key) const {
    if (!Has(key)) Fail(ErrorCode::kUsage, std::string("missing field '") + key + "'");
    try {
      return request.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
      Fail(ErrorCode::kUsage, std::string("field '") + key + "' has the wrong type");
    }
  }
  template <typename T>
  T Get(const char* key, T fallback) const {
    return Has(key) ? Get<T>(key) : fallback;
  }
  int threads() const {
    const int t = Get<int>("threads", 1);
    if (t < 1) Fail(ErrorCode::kUsage, "threads must be >= 1");
    return t;
  }
  bool timing() const { return Get<bool>("timing", false); }
};

double MillisSince(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

MultiGraph LoadGraph(const Env& env) {
  if (env.Has("graph")) return GraphFromJson(env.request.at("graph"));
  if (env.Has("dims")) return RookGraph(env.Get<std::vector<int>>("dims"));
  Fail(ErrorCode::kUsage, "request needs 'graph' or 'dims'");
}

Divisor LoadDivisor(const Env& env, const MultiGraph& g) {
  if (!env.Has("divisor")) Fail(ErrorCode::kUsage, "missing field 'divisor'");
  const Json& j = env.request.at("divisor");
  Divisor d = j.is_array() ? j.get<Divisor>() : DivisorFromJson(j);
  if (d.size() != static_cast<size_t>(g.vertex_count())) {
    Fail(ErrorCode::kInvalidArgument, "divisor has " + std::to_string(d.size()) +
                                          " entries but the graph has " +
                                          std::to_string(g.vertex_count()) + " vertices");
  }
  return d;
}

Json GraphGen(const Env& env) {
  const std::string family = env.Get<std::string>("family", "rook");
  if (family == "rook") return GraphToJson(RookGraph(env.Get<std::vector<int>>("dims")));
  if (family == "complete") return GraphToJson(CompleteGraph(env.Get<int>("n")));
  Fail(ErrorCode::kUsage, "unknown graph family '" + family + "' (rook, complete)");
}

Json ReduceCommand(const Env& env) {
  const MultiGraph g = LoadGraph(env);
  const Divisor d = LoadDivisor(env, g);
  const int v = env.Get<int>("vertex", 0);
  const ReductionResult r = Reduce(g, d, v);
  return {{"vertex", v}, {"reduced", r.reduced}, {"firing_counts", r.firing_counts}};
}

Json RankCommand(const Env& env) {
  const MultiGraph g = LoadGraph(env);
  const Divisor d = LoadDivisor(env, g);
  if (env.Has("at_least")) {
    const int k = env.Get<int>("at_least");
    const RankCheck check = VerifyRankAtLeast(g, d, k);
    return {{"at_least", k},
            {"holds", check.holds},
            {"counterexample",
             check.counterexample ? Json(*check.counterexample) : Json(nullptr)}};
  }
  return {{"rank", Rank(g, d)}, {"degree", Degree(d)}};
}

Json WinnableCommand(const Env& env) {
  const MultiGraph g = LoadGraph(env);
  const Divisor d = LoadDivisor(env, g);
  const ReductionResult r = Reduce(g, d, 0);
  return {{"winnable", r.reduced[0] >= 0}, {"reduced", r.reduced}};
}

Json GonalityCommand(const Env& env) {
  const MultiGraph g = LoadGraph(env);
  GonalityOptions options;
  options.k = env.Get<int>("k", 1);
  options.threads = env.threads();
  if (env.Has("cap")) options.degree_cap = env.Get<int>("cap");
  if (env.Has("lower_bound")) options.lower_bound = env.Get<int>("lower_bound");
  if (env.Get<bool>("symmetry", true) && g.IsRook()) options.symmetry = RookSymmetry(g.dims());

  const Clock::time_point t0 = Clock::now();
  const GonalityResult r = KGonality(g, options);
  const double ms = MillisSince(t0);
  env.Log("gonality: " + std::to_string(ms) + " ms");

  Json report = GonalityResultToJson(r);
  report["dims"] = g.has_labels() ? Json(g.dims()) : Json(nullptr);
  report["symmetry"] = options.symmetry.has_value();
  if (env.Get<bool>("poorest_lines", false) && r.found()) {
    const LineTotals lines = PoorestLineStatistics(g, r.witness);
    report["line_totals"] = {{"rows", lines.rows}, {"columns", lines.columns}};
  }
  if (env.timing()) report["wall_ms"] = ms;
  return report;
}

struct LoadedScramble {
  Scramble scramble;
  Json dims;
  int k = 0;
  std::string family;
};

LoadedScramble LoadScramble(const Env& env) {
  if (env.Has("scramble")) {
    Scramble s = ScrambleFromJson(env.request.at("scramble"));
    Json dims = s.host().has_labels() ? Json(s.host().dims()) : Json(nullptr);
    return {std::move(s), std::move(dims), 0, "file"};
  }
  const std::string family = env.Get<std::string>("family");
  const std::vector<int> dims = env.Get<std::vector<int>>("dims", std::vector<int>{6, 6});
  auto need_2d = [&] {
    if (dims.size() != 2) Fail(ErrorCode::kUsage, family + " scrambles need two dims");
  };
  if (family == "star") {
    need_2d();
    return {StarScramble(dims[0], dims[1]), dims, std::min(dims[0], dims[1]) - 1, family};
  }
  if (family == "uniform") {
    const int k = env.Get<int>("k");
    return {UniformScramble(std::make_shared<const MultiGraph>(RookGraph(dims)), k), dims, k,
            family};
  }
  if (family == "tstar") {
    if (dims != std::vector<int>{6, 6}) {
      Fail(ErrorCode::kUnsupported, "the tstar scramble is only defined on 6x6");
    }
    return {TStarScramble(), dims, 0, family};
  }
  if (family == "square-star") {
    need_2d();
    env.Log("warning: square-augmented star scrambles other than 6x6 are experimental");
    return {SquareAugmentedStarScramble(dims[0], dims[1]), dims, 0, family};
  }
  Fail(ErrorCode::kUsage, "unknown scramble family '" + family +
                              "' (star, uniform, tstar, square-star)");
}

std::string ScrambleOrderCommand(const Env& env) {
  const LoadedScramble loaded = LoadScramble(env);
  const std::vector<EggViolation> bad = ValidateScramble(loaded.scramble);
  if (!bad.empty()) {
    Fail(ErrorCode::kInvalidArgument,
         "egg " + std::to_string(bad.front().egg_index) + " is " +
             (bad.front().kind == EggViolation::Kind::kEmpty ? "empty" : "disconnected"));
  }
  const Clock::time_point t0 = Clock::now();
  const OrderReport r = ScrambleOrder(loaded.scramble, env.threads());
  const double ms = MillisSince(t0);
  env.Log("scramble order: " + std::to_string(ms) + " ms");

  Json report = OrderReportToJson(r);
  report["dims"] = loaded.dims;
  report["k"] = loaded.k;
  report["family"] = loaded.family;
  report["egg_count"] = loaded.scramble.eggs().size();
  report["scramble_digest"] = loaded.scramble.Digest();
  if (env.timing()) report["wall_ms"] = ms;

  const std::string format = env.Get<std::string>("format", "json");
  if (format == "csv") {
    const ResultRow row = RowFromReport(report);
    return EmitTable(std::span<const ResultRow>(&row, 1), TableFormat::kCsv);
  }
  if (format != "json") Fail(ErrorCode::kUsage, "format must be json or csv");
  return Dump(report);
}

Json AvoidanceCommand(const Env& env) {
  const std::string construction = env.Get<std::string>("construction");
  const int n = env.Get<int>("n");
  std::vector<int> dims;
  VertexList set;
  std::optional<Scramble> scramble;
  if (construction == "thm56" || construction == "staircase") {
    const int m = env.Get<int>("m");
    dims = {n, m};
    set = StaircaseAvoidanceSet(n, m);
    scramble = StarScramble(n, m);
  } else if (construction == "setA" || construction == "diagonal") {
    dims = {n, n, n};
    set = DiagonalLayerAvoidanceSet(n);
    scramble = UniformScramble(std::make_shared<const MultiGraph>(RookGraph(dims)), n);
  } else {
    Fail(ErrorCode::kUsage, "unknown construction '" + construction +
                                "' (thm56/staircase, setA/diagonal)");
  }
  const MultiGraph& g = scramble->host();
  const VertexMask mask = ToMask(set);
  bool egg_free = true;
  for (VertexMask egg : scramble->eggs()) egg_free = egg_free && (egg & ~mask) != 0;
  Json sizes = Json::array();
  for (VertexMask c : InducedComponents(g, mask)) sizes.push_back(Count(c));
  Json coordinates = Json::array();
  for (int v : set) coordinates.push_back(g.Coordinates(v));
  return {{"construction", construction},
          {"dims", dims},
          {"set", set},
          {"coordinates", coordinates},
          {"size", set.size()},
          {"component_sizes", sizes},
          {"egg_free", egg_free},
          {"eggs_checked", scramble->eggs().size()},
          {"hitting_upper_bound", g.vertex_count() - static_cast<int>(set.size())}};
}

CommandResult VerifyCommand(const Env& env) {
  SuiteOptions options;
  options.threads = env.threads();
  options.seed = env.Get<std::uint64_t>("seed", 0);
  options.timing = env.timing();
  if (env.Has("budget_secs")) options.budget_secs = env.Get<double>("budget_secs");
  options.on_claim = [&env](const ClaimResult& c) {
    std::string line = std::string(StatusName(c.status)) + "  " + c.id;
    if (!c.reason.empty()) line += "  (" + c.reason + ")";
    env.Log(line);
  };
  const VerificationReport report = RunSuite(env.Get<std::string>("suite", "smoke"), options);
  return {Dump(VerificationReportToJson(report)), report.passed() ? 0 : 1};
}

std::string TableCommand(const Env& env) {
  const Json reports = env.Get<Json>("reports");
  if (!reports.is_array()) Fail(ErrorCode::kUsage, "'reports' must be an array");
  std::vector<ResultRow> rows;
  for (const Json& r : reports) rows.push_back(RowFromReport(r));
  const std::string format = env.Get<std::string>("format", "csv");
  if (format != "csv" && format != "json") Fail(ErrorCode::kUsage, "format must be csv or json");
  return EmitTable(rows, format == "csv" ? TableFormat::kCsv : TableFormat::kJson);
}

CommandResult Dispatch(const std::string& command, const Env& env) {
  if (command == "graph.gen") return {Dump(GraphGen(env)), 0};
  if (command == "reduce") return {Dump(ReduceCommand(env)), 0};
  if (command == "rank") return {Dump(RankCommand(env)), 0};
  if (command == "winnable") return {Dump(WinnableCommand(env)), 0};
  if (command == "gonality") return {Dump(GonalityCommand(env)), 0};
  if (command == "scramble.order") return {ScrambleOrderCommand(env), 0};
  if (command == "scramble.avoidance") return {Dump(AvoidanceCommand(env)), 0};
  if (command == "verify") return VerifyCommand(env);
  if (command == "table") return {TableCommand(env), 0};
  Fail(ErrorCode::kUsage, "unknown command '" + command + "'");
}

}  // namespace

std::vector<std::string> CommandNames() {
  return {"graph.gen", "reduce", "rank", "winnable", "gonality",
          "scramble.order", "scramble.avoidance", "verify", "table"};
}

CommandResult RunCommand(const std::string& command, const Json& request, const LogFn& log) {
  if (!request.is_object()) Fail(ErrorCode::kUsage, "request must be a JSON object");
  const Env env{request, log};

  std::optional<ReportCache> cache;
  std::string key;
  if (!env.timing()) {
    cache = ReportCache::Open(env.Has("cache_dir")
                                  ? std::optional<std::string>(env.Get<std::string>("cache_dir"))
                                  : std::nullopt);
  }
  if (cache) {
    key = ReportCache::RequestKey(command, request);
    std::string warning;
    if (std::optional<std::string> hit = cache->Lookup(key, &warning)) {
      env.Log("cache hit " + key.substr(0, 12));
      return {*hit, 0};
    }
    if (!warning.empty()) env.Log("warning: " + warning);
  }
  CommandResult result = Dispatch(command, env);
  // Failed verifications are not cached so that they rerun.
  if (cache && result.exit_code == 0) cache->Store(key, result.report);
  return result;
}

}  // namespace rookgon
