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

#include "rookgon/rookgon.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "rookgon/commands.hpp"
#include "rookgon/divisor.hpp"
#include "rookgon/error.hpp"
#include "rookgon/graph.hpp"
#include "rookgon/json_io.hpp"
#include "rookgon/rank.hpp"

struct rookgon_graph {
  rookgon::MultiGraph graph;
};

namespace {

thread_local std::string last_error;

rookgon_status SetError(rookgon_status status, const std::string& what) {
  last_error = what;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
rookgon_status Guard(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return ROOKGON_OK;
  } catch (const rookgon::Error& e) {
    return SetError(static_cast<rookgon_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return SetError(ROOKGON_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return SetError(ROOKGON_ERR_INTERNAL, e.what());
  }
}

void Require(bool ok, const char* what) {
  if (!ok) rookgon::Fail(rookgon::ErrorCode::kInvalidArgument, what);
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rookgon::VertexMask MaskOf(const rookgon::MultiGraph& g, const int* vertices, size_t count) {
  Require(vertices || count == 0, "null vertex array");
  rookgon::VertexMask mask = 0;
  for (size_t i = 0; i < count; ++i) {
    Require(vertices[i] >= 0 && vertices[i] < g.vertex_count(), "vertex out of range");
    mask |= rookgon::Bit(vertices[i]);
  }
  return mask;
}

rookgon::Divisor DivisorOf(const rookgon_graph* g, const int* chips) {
  Require(g && chips, "null argument");
  return rookgon::Divisor(chips, chips + g->graph.vertex_count());
}

}  // namespace

extern "C" {

const char* rookgon_last_error(void) { return last_error.c_str(); }

const char* rookgon_version(void) { return ROOKGON_VERSION_STRING; }

rookgon_status rookgon_graph_rook(const int* dims, size_t count, rookgon_graph** out) {
  return Guard([&] {
    Require(out && (dims || count == 0), "null argument");
    *out = new rookgon_graph{rookgon::RookGraph(std::span<const int>(dims, count))};
  });
}

rookgon_status rookgon_graph_complete(int n, rookgon_graph** out) {
  return Guard([&] {
    Require(out, "null argument");
    *out = new rookgon_graph{rookgon::CompleteGraph(n)};
  });
}

rookgon_status rookgon_graph_from_json(const char* json, rookgon_graph** out) {
  return Guard([&] {
    Require(json && out, "null argument");
    *out = new rookgon_graph{rookgon::GraphFromJson(rookgon::ParseJson(json))};
  });
}

rookgon_status rookgon_graph_to_json(const rookgon_graph* g, char** out) {
  return Guard([&] {
    Require(g && out, "null argument");
    *out = CopyString(rookgon::Dump(rookgon::GraphToJson(g->graph)));
  });
}

void rookgon_graph_free(rookgon_graph* g) { delete g; }

int rookgon_graph_vertex_count(const rookgon_graph* g) { return g ? g->graph.vertex_count() : 0; }

rookgon_status rookgon_cut_weight(const rookgon_graph* g, const int* side, size_t count,
                                  int64_t* weight) {
  return Guard([&] {
    Require(g && weight, "null argument");
    *weight = rookgon::CutWeight(g->graph, MaskOf(g->graph, side, count));
  });
}

rookgon_status rookgon_min_cut_between(const rookgon_graph* g, const int* s, size_t s_count,
                                       const int* t, size_t t_count, int64_t* value,
                                       int* source_side) {
  return Guard([&] {
    Require(g && value, "null argument");
    const rookgon::FlowResult r = rookgon::MinCutBetween(
        g->graph, MaskOf(g->graph, s, s_count), MaskOf(g->graph, t, t_count));
    *value = r.value;
    if (source_side) {
      std::fill(source_side, source_side + g->graph.vertex_count(), 0);
      for (int v : r.source_side) source_side[v] = 1;
    }
  });
}

rookgon_status rookgon_reduce(const rookgon_graph* g, const int* chips, int v, int* reduced,
                              int64_t* firings) {
  return Guard([&] {
    Require(reduced, "null argument");
    const rookgon::ReductionResult r = rookgon::Reduce(g->graph, DivisorOf(g, chips), v);
    std::copy(r.reduced.begin(), r.reduced.end(), reduced);
    if (firings) std::copy(r.firing_counts.begin(), r.firing_counts.end(), firings);
  });
}

rookgon_status rookgon_is_winnable(const rookgon_graph* g, const int* chips, int* winnable) {
  return Guard([&] {
    Require(winnable, "null argument");
    *winnable = rookgon::IsWinnable(g->graph, DivisorOf(g, chips)) ? 1 : 0;
  });
}

rookgon_status rookgon_rank(const rookgon_graph* g, const int* chips, int* rank) {
  return Guard([&] {
    Require(rank, "null argument");
    *rank = rookgon::Rank(g->graph, DivisorOf(g, chips));
  });
}

rookgon_status rookgon_verify_rank_at_least(const rookgon_graph* g, const int* chips, int k,
                                            int* holds, int* counterexample) {
  return Guard([&] {
    Require(holds, "null argument");
    const rookgon::RankCheck check = rookgon::VerifyRankAtLeast(g->graph, DivisorOf(g, chips), k);
    *holds = check.holds ? 1 : 0;
    if (counterexample) {
      for (int v = 0; v < g->graph.vertex_count(); ++v) {
        counterexample[v] = check.counterexample ? (*check.counterexample)[v] : 0;
      }
    }
  });
}

rookgon_status rookgon_run(const char* command, const char* request_json, rookgon_log_fn log,
                           void* user, char** report, int* exit_code) {
  return Guard([&] {
    Require(command && request_json && report && exit_code, "null argument");
    rookgon::LogFn sink;
    if (log) sink = [log, user](const std::string& line) { log(line.c_str(), user); };
    const rookgon::CommandResult r =
        rookgon::RunCommand(command, rookgon::ParseJson(request_json), sink);
    *report = CopyString(r.report);
    *exit_code = r.exit_code;
  });
}

void rookgon_string_free(char* s) { std::free(s); }

}  // extern "C"
