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

#include "rookgon/suite.hpp"

#include <chrono>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "rookgon/divisor.hpp"
#include "rookgon/error.hpp"
#include "rookgon/families.hpp"
#include "rookgon/gonality.hpp"
#include "rookgon/graph.hpp"
#include "rookgon/rank.hpp"
#include "rookgon/scramble.hpp"
#include "rookgon/symmetry.hpp"

namespace rookgon {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  Json expected;
  Json computed;
  bool pass = false;
};

// Results shared between claims of one run, so that e.g. the gonality
// chain does not redo searches already made.
struct Context {
  int threads = 1;
  std::uint64_t seed = 0;
  std::map<std::pair<std::vector<int>, int>, GonalityResult> gonality;
  std::map<std::string, HittingResult> hitting;
};

struct Claim {
  std::string id;
  std::string reference;
  double cost_secs = 0;  // rough single-core estimate
  Json parameters;
  std::function<Outcome(Context&)> run;
};

using Registry = std::vector<Claim>;

std::string DimsId(const std::vector<int>& dims) {
  std::string out;
  for (size_t i = 0; i < dims.size(); ++i) out += (i ? "x" : "") + std::to_string(dims[i]);
  return out;
}

std::shared_ptr<const MultiGraph> Rook(const std::vector<int>& dims) {
  return std::make_shared<const MultiGraph>(RookGraph(dims));
}

const GonalityResult& Gonality(Context& ctx, const std::vector<int>& dims, int k) {
  auto it = ctx.gonality.find({dims, k});
  if (it != ctx.gonality.end()) return it->second;
  const MultiGraph g = RookGraph(dims);
  GonalityOptions options;
  options.k = k;
  options.symmetry = RookSymmetry(dims);
  options.threads = ctx.threads;
  return ctx.gonality.emplace(std::make_pair(dims, k), KGonality(g, options)).first->second;
}

const HittingResult& Hitting(Context& ctx, const std::string& name,
                             const std::function<Scramble()>& make) {
  auto it = ctx.hitting.find(name);
  if (it != ctx.hitting.end()) return it->second;
  return ctx.hitting.emplace(name, HittingNumber(make())).first->second;
}

Json OrbitCounts(const GonalityResult& r) {
  Json counts = Json::array();
  for (const DegreeStats& s : r.degrees) counts.push_back({s.degree, s.orbits});
  return counts;
}

bool RefutedBelow(const GonalityResult& r, int value) {
  int next = r.k;
  for (const DegreeStats& s : r.degrees) {
    if (s.degree >= value) break;
    if (s.degree != next || !s.refuted) return false;
    ++next;
  }
  return next == value;
}

void AddGonality(Registry& reg, const std::vector<int>& dims, int k, int expected,
                 double cost, const std::string& reference) {
  reg.push_back({"gon" + std::to_string(k) + "-" + DimsId(dims), reference, cost,
                 Json{{"dims", dims}, {"k", k}, {"symmetry", true}},
                 [dims, k, expected](Context& ctx) {
                   const GonalityResult& r = Gonality(ctx, dims, k);
                   Outcome out;
                   out.expected = {{"value", expected}, {"exhaustive", true}};
                   out.computed = {{"value", r.value ? Json(*r.value) : Json(nullptr)},
                                   {"exhaustive", r.exhaustive},
                                   {"witness", r.witness},
                                   {"orbit_counts", OrbitCounts(r)}};
                   out.pass = r.value == expected && r.exhaustive && RefutedBelow(r, expected);
                   return out;
                 }});
}

void AddCertificate(Registry& reg, const std::vector<int>& dims, int k, double cost) {
  const std::string reference =
      k == 1 ? "rook graph upper bound: one layer left empty, every other vertex one chip"
             : "all-ones divisor has rank at least 3";
  reg.push_back({"cert" + std::to_string(k) + "-" + DimsId(dims), reference, cost,
                 Json{{"dims", dims}, {"k", k}}, [dims, k](Context&) {
                   const MultiGraph g = RookGraph(dims);
                   const Divisor d = RookCertificateDivisor(dims, k);
                   const RankCheck check = VerifyRankAtLeast(g, d, k);
                   Outcome out;
                   out.expected = {{"rank_at_least", k}};
                   out.computed = {{"holds", check.holds},
                                   {"degree", Degree(d)},
                                   {"counterexample", check.counterexample
                                                          ? Json(*check.counterexample)
                                                          : Json(nullptr)}};
                   out.pass = check.holds;
                   return out;
                 }});
}

void AddChain(Registry& reg, const std::vector<int>& dims, double cost) {
  reg.push_back({"gon-chain-" + DimsId(dims), "gon_1 <= gon_2 - 1 <= gon_3 - 2", cost,
                 Json{{"dims", dims}}, [dims](Context& ctx) {
                   Json values = Json::array();
                   std::vector<int> v;
                   for (int k = 1; k <= 3; ++k) {
                     const GonalityResult& r = Gonality(ctx, dims, k);
                     v.push_back(r.value.value_or(-1));
                     values.push_back(v.back());
                   }
                   Outcome out;
                   out.expected = "gon_1 <= gon_2 - 1 <= gon_3 - 2";
                   out.computed = {{"gon", values}};
                   out.pass = v[0] >= 0 && v[1] >= 0 && v[2] >= 0 && v[0] <= v[1] - 1 &&
                              v[1] - 1 <= v[2] - 2;
                   return out;
                 }});
}

Json OrderJson(const OrderReport& r) { return OrderReportToJson(r); }

void AddOrder(Registry& reg, const std::string& id, const std::string& reference, double cost,
              Json parameters, std::function<Scramble()> make, std::int64_t expected_order,
              std::optional<int> expected_hitting = std::nullopt,
              std::optional<std::int64_t> expected_cut = std::nullopt) {
  reg.push_back({id, reference, cost, std::move(parameters),
                 [=](Context& ctx) {
                   const OrderReport r = ScrambleOrder(make(), ctx.threads);
                   Outcome out;
                   out.expected = {{"order", expected_order}};
                   out.pass = r.order == expected_order;
                   if (expected_hitting) {
                     out.expected["hitting_number"] = *expected_hitting;
                     out.pass = out.pass && r.hitting_number == *expected_hitting;
                   }
                   if (expected_cut) {
                     out.expected["min_egg_cut"] = *expected_cut;
                     out.pass = out.pass && r.min_egg_cut == expected_cut;
                   }
                   out.computed = OrderJson(r);
                   return out;
                 }});
}

void AddHitting(Registry& reg, const std::string& id, const std::string& reference,
                double cost, Json parameters, std::function<Scramble()> make, int expected) {
  reg.push_back({id, reference, cost, std::move(parameters), [=](Context& ctx) {
                   const HittingResult& r = Hitting(ctx, id, make);
                   Outcome out;
                   out.expected = {{"hitting_number", expected}};
                   out.computed = {{"hitting_number", r.hitting_number},
                                   {"max_avoidance", r.avoidance_set}};
                   out.pass = r.hitting_number == expected;
                   return out;
                 }});
}

// Criterion 1 main range plus the smoke instance.
void AddGonalityClaims(Registry& reg) {
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    AddGonality(reg, {n, m}, 1, (n - 1) * m, 1,
                "gonality of K_n x K_m equals (n-1)m");
  }
}

void AddCertificateClaims(Registry& reg) {
  for (int n = 2; n <= 6; ++n) {
    for (int m = n; m <= 6; ++m) AddCertificate(reg, {n, m}, 1, 0.5);
  }
  for (const std::vector<int>& dims : {std::vector<int>{2, 2, 2}, {2, 2, 3}, {2, 3, 3}}) {
    AddCertificate(reg, dims, 1, 0.5);
  }
}

void AddHigherGonalityClaims(Registry& reg) {
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    AddGonality(reg, {n, m}, 2, n * m - 1, 1, "second gonality of K_n x K_m equals nm - 1");
    AddGonality(reg, {n, m}, 3, n * m, 1, "third gonality of K_n x K_m equals nm");
  }
  for (int n = 2; n <= 4; ++n) {
    for (int m = n; m <= 4; ++m) AddCertificate(reg, {n, m}, 3, 1);
  }
  for (auto [n, m] : {std::pair{2, 2}, {2, 3}, {3, 3}}) AddChain(reg, {n, m}, 0.5);
}

void AddScrambleOrderClaims(Registry& reg) {
  AddOrder(reg, "order-star-4x4", "the star scramble on K_4 x K_4 has order 11", 2,
           Json{{"family", "star"}, {"dims", {4, 4}}}, [] { return StarScramble(4, 4); }, 11, 11,
           12);
  AddHitting(reg, "hitting-star-6x6", "hitting number of the star scramble on K_6 x K_6 is 24",
             10, Json{{"family", "star"}, {"dims", {6, 6}}}, [] { return StarScramble(6, 6); },
             24);
  AddHitting(reg, "hitting-tstar", "hitting number of the square-augmented scramble T* is 27",
             120, Json{{"family", "tstar"}, {"dims", {6, 6}}}, [] { return TStarScramble(); },
             27);
}

void AddFamilyClaims(Registry& reg) {
  for (int m = 2; m <= 6; ++m) {
    AddOrder(reg, "order-uniform1-2x" + std::to_string(m),
             "singleton scramble on K_2 x K_m has order m", 0.5,
             Json{{"family", "uniform"}, {"dims", {2, m}}, {"k", 1}},
             [m] { return UniformScramble(Rook({2, m}), 1); }, m);
  }
  for (int m = 3; m <= 5; ++m) {
    AddOrder(reg, "order-uniform2-3x" + std::to_string(m),
             "connected 2-subsets of K_3 x K_m form a scramble of order 2m", 1,
             Json{{"family", "uniform"}, {"dims", {3, m}}, {"k", 2}},
             [m] { return UniformScramble(Rook({3, m}), 2); }, 2 * m);
  }
  AddHitting(reg, "hitting-star-4x6", "hitting number of the star scramble on K_4 x K_6 is 18",
             2, Json{{"family", "star"}, {"dims", {4, 6}}}, [] { return StarScramble(4, 6); },
             18);
  reg.push_back(
      {"staircase-avoidance-4x5",
       "an avoidance set of size m + 1 keeps the star scramble below (n-1)m", 1,
       Json{{"construction", "staircase"}, {"n", 4}, {"m", 5}}, [](Context&) {
         const Scramble s = StarScramble(4, 5);
         const VertexList set = StaircaseAvoidanceSet(4, 5);
         const VertexMask mask = ToMask(set);
         bool egg_free = true;
         for (VertexMask egg : s.eggs()) egg_free = egg_free && (egg & ~mask) != 0;
         const int bound = s.host().vertex_count() - static_cast<int>(set.size());
         Outcome out;
         out.expected = {{"size", 6}, {"egg_free", true}, {"order_below", 15}};
         out.computed = {{"set", set},
                         {"size", set.size()},
                         {"egg_free", egg_free},
                         {"hitting_upper_bound", bound}};
         out.pass = set.size() == 6 && egg_free && bound < 15;
         return out;
       }});
}

void AddThreeDimensionalClaims(Registry& reg) {
  AddOrder(reg, "order-uniform2-2x2x2", "connected 2-subsets of K_2 x K_2 x K_2 have order 4", 1,
           Json{{"family", "uniform"}, {"dims", {2, 2, 2}}, {"k", 2}},
           [] { return UniformScramble(Rook({2, 2, 2}), 2); }, 4);
  AddOrder(reg, "order-uniform2-2x2x3", "connected 2-subsets of K_2 x K_2 x K_3 have order 6", 2,
           Json{{"family", "uniform"}, {"dims", {2, 2, 3}}, {"k", 2}},
           [] { return UniformScramble(Rook({2, 2, 3}), 2); }, 6);
  reg.push_back(
      {"diagonal-avoidance-3", "avoidance set on K_3 x K_3 x K_3 with 5 components of size 2", 5,
       Json{{"construction", "diagonal"}, {"n", 3}}, [](Context&) {
         const MultiGraph g = RookGraph(std::vector<int>{3, 3, 3});
         const VertexList set = DiagonalLayerAvoidanceSet(3);
         const VertexMask mask = ToMask(set);
         Json sizes = Json::array();
         bool sizes_ok = true;
         const std::vector<VertexMask> comps = InducedComponents(g, mask);
         for (VertexMask c : comps) {
           sizes.push_back(Count(c));
           sizes_ok = sizes_ok && Count(c) == 2;
         }
         std::int64_t eggs = 0;
         bool hits_all = true;
         ForEachConnectedSubset(g, 3, [&](VertexMask egg) {
           ++eggs;
           hits_all = hits_all && (egg & ~mask) != 0;
         });
         const int complement = g.vertex_count() - static_cast<int>(set.size());
         Outcome out;
         out.expected = {{"size", 10}, {"components", 5}, {"component_size", 2},
                         {"complement_at_most", 17}, {"complement_hits_all", true}};
         out.computed = {{"set", set},
                         {"size", set.size()},
                         {"component_sizes", sizes},
                         {"complement_size", complement},
                         {"eggs_scanned", eggs},
                         {"complement_hits_all", hits_all}};
         out.pass = set.size() == 10 && comps.size() == 5 && sizes_ok && complement <= 17 &&
                    hits_all;
         return out;
       }});
}

void AddCutBoundClaims(Registry& reg) {
  for (int n = 2; n * n <= 16; ++n) {
    for (int m = n; n * m <= 16; ++m) {
      reg.push_back({"cut-bound-" + std::to_string(n) + "x" + std::to_string(m),
                     "every balanced cut of K_n x K_m has weight >= (n-1)m",
                     n * m >= 15 ? 2.0 : 0.5, Json{{"dims", {n, m}}}, [n, m](Context&) {
                       const CutBoundReport r = ExhaustiveCutBoundCheck(n, m);
                       Outcome out;
                       out.expected = {{"ok", true}, {"full_row_weight", (n - 1) * m}};
                       out.computed = CutBoundReportToJson(r);
                       out.pass = r.ok && r.full_row_weight == (n - 1) * m &&
                                  r.bound == (n - 1) * m;
                       return out;
                     }});
    }
  }
}

const std::vector<std::vector<int>>& SmallRookDims() {
  static const std::vector<std::vector<int>> dims = {{2, 2}, {2, 3}, {2, 4}, {3, 3}, {2, 2, 2}};
  return dims;
}

Divisor RandomDivisor(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> chips(lo, hi);
  Divisor d(n);
  for (int& c : d) c = chips(rng);
  return d;
}

std::mt19937_64 ClaimRng(const Context& ctx, std::uint64_t salt) {
  std::seed_seq seq{ctx.seed, salt};
  return std::mt19937_64(seq);
}

Outcome ReductionUniqueness(Context& ctx) {
  constexpr int kCases = 100;
  std::mt19937_64 rng = ClaimRng(ctx, 1);
  int failures = 0;
  std::optional<Json> first_failure;
  for (int i = 0; i < kCases; ++i) {
    const std::vector<int>& dims = SmallRookDims()[rng() % SmallRookDims().size()];
    const MultiGraph g = RookGraph(dims);
    const int n = g.vertex_count();
    const Divisor d = RandomDivisor(rng, n, -3, 4);
    const int v = static_cast<int>(rng() % n);
    std::vector<std::int64_t> x(n);
    std::uniform_int_distribution<int> fire(-3, 3);
    for (auto& xi : x) xi = fire(rng);
    const ReductionResult a = Reduce(g, d, v);
    const ReductionResult b = Reduce(g, ApplyFirings(g, d, x), v);
    const ReductionResult again = Reduce(g, a.reduced, v);
    const bool ok = a.reduced == b.reduced && again.reduced == a.reduced &&
                    again.firing_counts == std::vector<std::int64_t>(n, 0) &&
                    IsEffectiveAwayFrom(a.reduced, v) &&
                    DharBurn(g, a.reduced, v).unburnt == 0 &&
                    ApplyFirings(g, d, a.firing_counts) == a.reduced;
    if (!ok) {
      ++failures;
      if (!first_failure) first_failure = Json{{"dims", dims}, {"divisor", d}, {"vertex", v}};
    }
  }
  Outcome out;
  out.expected = {{"cases", kCases}, {"failures", 0}};
  out.computed = {{"cases", kCases}, {"failures", failures},
                  {"first_failure", first_failure.value_or(nullptr)}};
  out.pass = failures == 0;
  return out;
}

Outcome FiringReversibility(Context& ctx) {
  constexpr int kCases = 100;
  std::mt19937_64 rng = ClaimRng(ctx, 2);
  int failures = 0;
  for (int i = 0; i < kCases; ++i) {
    const std::vector<int>& dims = SmallRookDims()[rng() % SmallRookDims().size()];
    const MultiGraph g = RookGraph(dims);
    const Divisor d = RandomDivisor(rng, g.vertex_count(), -2, 4);
    const VertexMask a = rng() & g.all();
    const Divisor fired = FireSet(g, d, a);
    const bool ok = FireSet(g, fired, g.all() & ~a) == d && Equivalent(g, d, fired) &&
                    Degree(fired) == Degree(d);
    if (!ok) ++failures;
  }
  Outcome out;
  out.expected = {{"cases", kCases}, {"failures", 0}};
  out.computed = {{"cases", kCases}, {"failures", failures}};
  out.pass = failures == 0;
  return out;
}

Outcome BurnComplete(int max_n) {
  std::int64_t burns = 0;
  int failures = 0;
  for (int n = 2; n <= max_n; ++n) {
    const MultiGraph g = CompleteGraph(n);
    for (int degree = 0; degree <= n - 2; ++degree) {
      CompositionIterator it(n, degree);
      do {
        const Divisor& d = it.current();
        for (int v = 0; v < n; ++v) {
          if (d[v] != 0) continue;
          ++burns;
          if (DharBurn(g, d, v).unburnt != 0) ++failures;
        }
      } while (it.Next());
    }
  }
  Outcome out;
  out.expected = {{"failures", 0}};
  out.computed = {{"burns", burns}, {"failures", failures}};
  out.pass = failures == 0;
  return out;
}

Outcome RiemannRoch(Context& ctx) {
  constexpr int kCases = 50;
  std::mt19937_64 rng = ClaimRng(ctx, 3);
  int failures = 0;
  std::optional<Json> first_failure;
  for (int i = 0; i < kCases; ++i) {
    const std::vector<int>& dims = SmallRookDims()[rng() % SmallRookDims().size()];
    const MultiGraph g = RookGraph(dims);
    const int n = g.vertex_count();
    Divisor d;
    do {
      d = RandomDivisor(rng, n, -2, 2);
    } while (Degree(d) < -6 || Degree(d) > 6);
    Divisor dual(n);
    for (int v = 0; v < n; ++v) dual[v] = g.degree(v) - 2 - d[v];
    const std::int64_t lhs = Rank(g, d) - Rank(g, dual);
    const std::int64_t rhs = Degree(d) + 1 - g.genus();
    if (lhs != rhs) {
      ++failures;
      if (!first_failure) first_failure = Json{{"dims", dims}, {"divisor", d}};
    }
  }
  Outcome out;
  out.expected = {{"cases", kCases}, {"failures", 0}};
  out.computed = {{"cases", kCases}, {"failures", failures},
                  {"first_failure", first_failure.value_or(nullptr)}};
  out.pass = failures == 0;
  return out;
}

Outcome SymmetryAgreement(Context& ctx) {
  Json rows = Json::array();
  bool all_equal = true;
  for (const std::vector<int>& dims : SmallRookDims()) {
    const MultiGraph g = RookGraph(dims);
    GonalityOptions plain;
    plain.threads = ctx.threads;
    GonalityOptions reduced = plain;
    reduced.symmetry = RookSymmetry(dims);
    const GonalityResult a = KGonality(g, plain);
    const GonalityResult b = KGonality(g, reduced);
    const bool equal = a.value == b.value && a.exhaustive && b.exhaustive;
    all_equal = all_equal && equal;
    rows.push_back({{"dims", dims},
                    {"without_symmetry", a.value ? Json(*a.value) : Json(nullptr)},
                    {"with_symmetry", b.value ? Json(*b.value) : Json(nullptr)}});
  }
  Outcome out;
  out.expected = "equal gonality with and without symmetry pruning";
  out.computed = rows;
  out.pass = all_equal;
  return out;
}

void AddPropertyClaims(Registry& reg) {
  reg.push_back({"reduction-uniqueness", "v-reduced divisors are unique and reduction is idempotent",
                 2, Json{{"cases", 100}}, ReductionUniqueness});
  reg.push_back({"firing-reversibility", "firing A is undone by firing its complement", 1,
                 Json{{"cases", 100}}, FiringReversibility});
  reg.push_back({"burn-complete-6",
                 "on K_n a divisor of degree <= n - 2 burns the entire graph", 2,
                 Json{{"max_n", 6}}, [](Context&) { return BurnComplete(6); }});
  reg.push_back({"riemann-roch", "rank(D) - rank(K - D) = deg(D) + 1 - g", 20,
                 Json{{"cases", 50}}, RiemannRoch});
  reg.push_back({"symmetry-agreement", "orbit pruning does not change gonality", 5,
                 Json{{"dims", SmallRookDims()}, {"k", 1}}, SymmetryAgreement});
}

void AddSmokeClaims(Registry& reg) {
  AddGonality(reg, {2, 2}, 1, 2, 0.1, "gonality of K_2 x K_2 is 2");
  AddOrder(reg, "order-uniform1-2x3", "singleton scramble on K_2 x K_3 has order 3", 0.1,
           Json{{"family", "uniform"}, {"dims", {2, 3}}, {"k", 1}},
           [] { return UniformScramble(Rook({2, 3}), 1); }, 3);
  reg.push_back({"burn-complete-4",
                 "on K_n a divisor of degree <= n - 2 burns the entire graph", 0.1,
                 Json{{"max_n", 4}}, [](Context&) { return BurnComplete(4); }});
}

VerificationReport Execute(const std::string& name, const Registry& reg,
                           const SuiteOptions& options);

void AddDeterminismClaim(Registry& reg) {
  reg.push_back({"determinism-smoke", "reports do not depend on the worker count", 1,
                 Json{{"suite", "smoke"}, {"threads", {1, 2, 8}}}, [](Context& ctx) {
                   Json digests = Json::array();
                   std::string first;
                   bool same = true;
                   for (int threads : {1, 2, 8}) {
                     SuiteOptions o;
                     o.threads = threads;
                     o.seed = ctx.seed;
                     const std::string text = Dump(VerificationReportToJson(RunSuite("smoke", o)));
                     if (first.empty()) first = text;
                     same = same && text == first;
                     digests.push_back(text.size());
                   }
                   Outcome out;
                   out.expected = "identical bytes";
                   out.computed = {{"identical", same}, {"report_bytes", digests}};
                   out.pass = same;
                   return out;
                 }});
}

Registry BuildRegistry(const std::string& name) {
  Registry reg;
  if (name == "smoke") {
    AddSmokeClaims(reg);
    return reg;
  }
  if (name != "paper-small" && name != "paper-full") {
    Fail(ErrorCode::kUsage, "unknown suite '" + name + "' (smoke, paper-small, paper-full)");
  }
  AddGonalityClaims(reg);
  if (name == "paper-full") {
    AddGonality(reg, {3, 4}, 1, 8, 5, "gonality of K_3 x K_4 equals 8");
    AddGonality(reg, {4, 4}, 1, 12, 30, "gonality of K_4 x K_4 equals 12");
  }
  AddCertificateClaims(reg);
  AddHigherGonalityClaims(reg);
  AddScrambleOrderClaims(reg);
  if (name == "paper-full") {
    reg.push_back({"tstar-min-egg-cut", "T* keeps every egg cut at 27 or more, so its order is 27",
                   150, Json{{"family", "tstar"}, {"dims", {6, 6}}}, [](Context& ctx) {
                     const EggCutResult cut = MinEggCut(TStarScramble(), ctx.threads);
                     const HittingResult& hit =
                         Hitting(ctx, "hitting-tstar", [] { return TStarScramble(); });
                     const std::int64_t order =
                         cut.value ? std::min<std::int64_t>(*cut.value, hit.hitting_number)
                                   : hit.hitting_number;
                     Outcome out;
                     out.expected = {{"min_egg_cut_at_least", 27}, {"order", 27}};
                     out.computed = {
                         {"min_egg_cut", cut.value ? Json(*cut.value) : Json("infinity")},
                         {"cut_witness", cut.witness ? CutWitnessToJson(*cut.witness)
                                                     : Json(nullptr)},
                         {"hitting_number", hit.hitting_number},
                         {"order", order}};
                     out.pass = cut.value.value_or(27) >= 27 && order == 27;
                     return out;
                   }});
  }
  AddFamilyClaims(reg);
  AddThreeDimensionalClaims(reg);
  AddCutBoundClaims(reg);
  AddPropertyClaims(reg);
  AddDeterminismClaim(reg);
  return reg;
}

VerificationReport Execute(const std::string& name, const Registry& reg,
                           const SuiteOptions& options) {
  VerificationReport report;
  report.suite = name;
  report.seed = options.seed;
  Context ctx;
  ctx.threads = options.threads;
  ctx.seed = options.seed;
  const Clock::time_point start = Clock::now();
  for (const Claim& claim : reg) {
    ClaimResult result;
    result.id = claim.id;
    result.reference = claim.reference;
    result.parameters = claim.parameters;
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (options.budget_secs && claim.cost_secs > *options.budget_secs - elapsed) {
      std::ostringstream reason;
      reason << "declared cost " << claim.cost_secs << " s exceeds remaining budget";
      result.status = ClaimStatus::kSkipped;
      result.reason = reason.str();
    } else {
      const Clock::time_point t0 = Clock::now();
      try {
        Outcome out = claim.run(ctx);
        result.expected = std::move(out.expected);
        result.computed = std::move(out.computed);
        result.status = out.pass ? ClaimStatus::kPass : ClaimStatus::kFail;
      } catch (const std::exception& e) {
        result.computed = {{"error", e.what()}};
        result.status = ClaimStatus::kFail;
      }
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      if (options.timing) result.wall_ms = ms;
    }
    if (options.on_claim) options.on_claim(result);
    report.claims.push_back(std::move(result));
  }
  return report;
}

}  // namespace

std::string_view StatusName(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kPass:
      return "pass";
    case ClaimStatus::kFail:
      return "fail";
    case ClaimStatus::kSkipped:
      break;
  }
  return "skipped";
}

bool VerificationReport::passed() const {
  for (const ClaimResult& c : claims) {
    if (c.status == ClaimStatus::kFail) return false;
  }
  return true;
}

std::vector<std::string> SuiteNames() { return {"smoke", "paper-small", "paper-full"}; }

std::vector<std::string> SuiteClaimIds(const std::string& name) {
  std::vector<std::string> ids;
  for (const Claim& c : BuildRegistry(name)) ids.push_back(c.id);
  return ids;
}

VerificationReport RunSuite(const std::string& name, const SuiteOptions& options) {
  return Execute(name, BuildRegistry(name), options);
}

Json VerificationReportToJson(const VerificationReport& report) {
  Json claims = Json::array();
  int counts[3] = {0, 0, 0};
  for (const ClaimResult& c : report.claims) {
    ++counts[static_cast<int>(c.status)];
    Json j{{"id", c.id},
           {"reference", c.reference},
           {"parameters", c.parameters},
           {"expected", c.expected},
           {"computed", c.computed},
           {"status", StatusName(c.status)},
           {"reason", c.reason.empty() ? Json(nullptr) : Json(c.reason)}};
    if (c.wall_ms) j["wall_ms"] = *c.wall_ms;
    claims.push_back(std::move(j));
  }
  return {{"suite", report.suite},
          {"seed", report.seed},
          {"passed", report.passed()},
          {"summary", {{"pass", counts[0]}, {"fail", counts[1]}, {"skipped", counts[2]}}},
          {"claims", claims}};
}

}  // namespace rookgon
