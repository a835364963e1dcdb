// Copyright 2026 The Authors.
//
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

#include "cli/suites.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iterator>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "weylret/errors.h"
#include "weylret/fan.h"
#include "weylret/matroid.h"
#include "weylret/parallel.h"
#include "weylret/retraction.h"
#include "weylret/torus_orbit.h"
#include "weylret/weyl.h"

namespace weylret::cli {
namespace {

using Windows = std::vector<SignedPermutation>;

constexpr int kOrbitSizes[] = {3, 4, 5};

WeylGroup TypeA(int n) {
  return WeylGroup(GroupDescriptor::Single(WeylType::kA, n));
}

RationalMatrix IntMatrix(const std::vector<std::vector<long>>& rows) {
  std::vector<RationalVector> out;
  for (const auto& r : rows) {
    RationalVector v;
    for (long x : r) v.push_back(x);
    out.push_back(std::move(v));
  }
  return RationalMatrix(out);
}

RationalMatrix FirstOrbit() {
  return IntMatrix({{1, 1, 0}, {1, 0, 1}, {1, 0, 0}});
}
RationalMatrix SecondOrbit() {
  return IntMatrix({{1, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

std::string Join(const Windows& ws) {
  std::string out;
  for (const SignedPermutation& w : ws) {
    if (!out.empty()) out += " ";
    out += "[" + w.ToString() + "]";
  }
  return out;
}

// Runs `check` on every orbit matrix in parallel; cases keep their order.
SuiteReport OrbitSuite(
    const std::string& suite, const SuiteOptions& options,
    const std::function<CaseResult(const RationalMatrix&)>& check) {
  std::vector<std::pair<int, int>> plan;
  for (int n : kOrbitSizes) {
    for (int i = 0; i < options.count; ++i) plan.emplace_back(n, i);
  }
  SuiteReport report{suite, options.seed, {}, 0};
  report.cases.resize(plan.size());
  ParallelFor(plan.size(), [&](size_t k) {
    const auto [n, i] = plan[k];
    CaseResult result;
    try {
      result = check(OrbitSuiteMatrix(n, options.seed, i));
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = e.what();
    }
    result.name = "n=" + std::to_string(n) + " #" + std::to_string(i);
    report.cases[k] = std::move(result);
  });
  return report;
}

SuiteReport Table1(const SuiteOptions& options) {
  const Windows us = {SignedPermutation({1, 2, 3}), SignedPermutation({2, 1, 3}),
                      SignedPermutation({2, 3, 1}), SignedPermutation({3, 2, 1}),
                      SignedPermutation({3, 1, 2}), SignedPermutation({1, 3, 2})};
  const std::vector<std::pair<std::string, RationalMatrix>> orbits = {
      {"Y", FirstOrbit()}, {"Y'", SecondOrbit()}};
  const std::vector<std::vector<std::vector<int>>> rows = {
      {{1, 2, 3}, {2, 1, 3}, {2, 1, 3}, {3, 1, 2}, {3, 1, 2}, {1, 3, 2}},
      {{1, 2, 3}, {1, 2, 3}, {3, 2, 1}, {3, 2, 1}, {3, 2, 1}, {1, 2, 3}}};
  SuiteReport report{"table1", options.seed, {}, 0};
  for (size_t r = 0; r < orbits.size(); ++r) {
    const RetractionTable geometric = GeometricTable(orbits[r].second);
    const SubsetM y = FixedPoints(orbits[r].second).AsSubset();
    const RetractionTable algebraic =
        BuildRetractionTable(y, RetractionMethod::kAlgebraic);
    const RetractionTable matroid =
        BuildRetractionTable(y, RetractionMethod::kMatroid);
    for (size_t i = 0; i < us.size(); ++i) {
      const SignedPermutation expected(rows[r][i]);
      const SignedPermutation& g = geometric.At(us[i]);
      const SignedPermutation& a = algebraic.At(us[i]);
      const SignedPermutation& m = matroid.At(us[i]);
      report.cases.push_back(
          {orbits[r].first + " u=" + us[i].ToString(),
           g == expected && a == expected && m == expected,
           "geometric [" + g.ToString() + "] algebraic [" + a.ToString() +
               "] matroid [" + m.ToString() + "] expected [" +
               expected.ToString() + "]"});
    }
  }
  return report;
}

SuiteReport ClosestUnique(const SuiteOptions& options) {
  return OrbitSuite("closest-unique", options, [](const RationalMatrix& x) {
    const RetractionTable table = GeometricTable(x);
    const SubsetM y = FixedPoints(x).AsSubset();
    for (size_t i = 0; i < table.size(); ++i) {
      const ClosestSet closest = FindClosest(y, table.domain()[i]);
      if (closest.argmins != Windows{table.images()[i]}) {
        return CaseResult{"", false,
                          "u=[" + table.domain()[i].ToString() +
                              "] closest " + Join(closest.argmins)};
      }
    }
    return CaseResult{"", true,
                      "|Y^T|=" + std::to_string(y.size())};
  });
}

SuiteReport GeometricVsAlgebraic(const SuiteOptions& options) {
  return OrbitSuite("thmB-random", options, [](const RationalMatrix& x) {
    const RetractionTable geometric = GeometricTable(x);
    const SubsetM y = FixedPoints(x).AsSubset();
    const RetractionTable algebraic =
        BuildRetractionTable(y, RetractionMethod::kAlgebraic);
    for (size_t i = 0; i < geometric.size(); ++i) {
      const SignedPermutation& u = geometric.domain()[i];
      if (algebraic.At(u) != geometric.images()[i]) {
        return CaseResult{"", false,
                          "u=[" + u.ToString() + "] geometric [" +
                              geometric.images()[i].ToString() +
                              "] algebraic [" + algebraic.At(u).ToString() +
                              "]"};
      }
    }
    return CaseResult{"", true, "|Y^T|=" + std::to_string(y.size())};
  });
}

CaseResult PolytopeAgreement(const SubsetM& m) {
  const bool coxeter = IsCoxeterMatroid(m).is_matroid;
  MatroidCheckOptions max_side;
  max_side.side = Extremum::kMaximal;
  const bool maximal = IsCoxeterMatroid(m, max_side).is_matroid;
  const bool phi = PhiPolytopeCheck(m, DefaultBasePoint(m.group())).is_phi;
  return CaseResult{"", coxeter == phi && maximal == phi,
                    std::string("matroid=") + (coxeter ? "1" : "0") +
                        " maximal=" + (maximal ? "1" : "0") +
                        " phi=" + (phi ? "1" : "0")};
}

SuiteReport MatroidEquivalence(const SuiteOptions& options) {
  SuiteReport report =
      OrbitSuite("matroid-equiv", options, [](const RationalMatrix& x) {
        const SubsetM y = FixedPoints(x).AsSubset();
        const RetractionTable algebraic =
            BuildRetractionTable(y, RetractionMethod::kAlgebraic);
        const RetractionTable matroid =
            BuildRetractionTable(y, RetractionMethod::kMatroid);
        const bool same = algebraic.SameMapping(matroid);
        const bool coxeter = IsCoxeterMatroid(y).is_matroid;
        return CaseResult{"", same && coxeter,
                          std::string("tables ") + (same ? "agree" : "differ") +
                              ", coxeter matroid " + (coxeter ? "yes" : "no")};
      });

  // Polytope criterion on random subsets of S_4 and all subsets of BC_2.
  const WeylGroup s4 = TypeA(4);
  const Windows all = s4.Enumerate();
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<size_t> size(2, all.size());
  std::vector<SubsetM> subsets;
  for (int i = 0; i < 200; ++i) {
    Windows pick;
    std::sample(all.begin(), all.end(), std::back_inserter(pick), size(rng),
                rng);
    subsets.emplace_back(s4, pick);
  }
  const WeylGroup bc2(GroupDescriptor::Single(WeylType::kBC, 2));
  const Windows signed_all = bc2.Enumerate();
  for (unsigned mask = 1; mask < (1u << signed_all.size()); ++mask) {
    Windows pick;
    for (size_t i = 0; i < signed_all.size(); ++i) {
      if (mask >> i & 1) pick.push_back(signed_all[i]);
    }
    subsets.emplace_back(bc2, pick);
  }
  const size_t offset = report.cases.size();
  report.cases.resize(offset + subsets.size());
  ParallelFor(subsets.size(), [&](size_t k) {
    CaseResult result = PolytopeAgreement(subsets[k]);
    result.name = (k < 200 ? "S4 #" + std::to_string(k)
                           : "BC2 #" + std::to_string(k - 200));
    report.cases[offset + k] = std::move(result);
  });
  return report;
}

SuiteReport GsS3Exhaustive(const SuiteOptions& options) {
  const WeylGroup s3 = TypeA(3);
  const Windows all = s3.Enumerate();
  SuiteReport report{"gs-s3-exhaustive", options.seed, {}, 0};
  for (unsigned mask = 1; mask < 64; ++mask) {
    Windows pick;
    for (size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1) pick.push_back(all[i]);
    }
    const SubsetM m(s3, pick);
    CaseResult result = PolytopeAgreement(m);
    const bool flag = IsFlagMatroid(m);
    result.passed = result.passed &&
                    flag == IsCoxeterMatroid(m).is_matroid;
    result.detail += std::string(" flag=") + (flag ? "1" : "0");
    result.name = Join(m.elements());
    report.cases.push_back(std::move(result));
  }
  return report;
}

SuiteReport TwoElementS4(const SuiteOptions& options) {
  const WeylGroup s4 = TypeA(4);
  const Windows all = s4.Enumerate();
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) pairs.emplace_back(i, j);
  }
  SuiteReport report{"two-element-s4", options.seed, {}, 0};
  report.cases.resize(pairs.size());
  for (size_t k = 0; k < pairs.size(); ++k) {
    const SubsetM m(s4, {all[pairs[k].first], all[pairs[k].second]});
    const TwoElementReport r = AnalyzeTwoElementSubset(m);
    auto bit = [](bool b) { return b ? "1" : "0"; };
    report.cases[k] = {
        Join(m.elements()), r.Consistent(),
        std::string("flag=") + bit(r.flag_matroid) +
            " minimal=" + bit(r.algebraic_minimal) +
            " closest=" + bit(r.unique_closest) +
            " coxeter=" + bit(r.coxeter_matroid) +
            " reflection=" + bit(r.reflection_difference)};
  }
  return report;
}

SuiteReport Fano(const SuiteOptions& options) {
  SuiteReport report{"fano", options.seed, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  const SubsetM m = FanoMatroidS7();
  report.cases.push_back({"size", m.size() == 4032,
                          "|M|=" + std::to_string(m.size())});
  MatroidCheckOptions greedy;
  greedy.strategy = MatroidStrategy::kGreedyFirst;
  const MatroidVerdict verdict = IsCoxeterMatroid(m, greedy);
  report.cases.push_back(
      {"coxeter-matroid", verdict.is_matroid,
       verdict.is_matroid ? "unique minimum for all 5040 u"
                          : "fails at u=[" + verdict.witness->ToString() + "]"});
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  report.cases.push_back({"budget", seconds <= options.budget_seconds,
                          seconds <= options.budget_seconds
                              ? "within budget"
                              : "budget exceeded"});
  return report;
}

SuiteReport FanFigures(const SuiteOptions& options) {
  SuiteReport report{"fan-figures", options.seed, {}, 0};
  auto w = [](std::vector<int> v) { return SignedPermutation(std::move(v)); };
  const OrbitFan y = OrbitFan::Build(GeometricTable(FirstOrbit()));
  const std::map<SignedPermutation, Windows> y_cones = {
      {w({1, 2, 3}), {w({1, 2, 3})}},
      {w({1, 3, 2}), {w({1, 3, 2})}},
      {w({2, 1, 3}), {w({2, 1, 3}), w({2, 3, 1})}},
      {w({3, 1, 2}), {w({3, 1, 2}), w({3, 2, 1})}}};
  report.cases.push_back({"Y cones", y.cones() == y_cones,
                          std::to_string(y.cones().size()) + " cones"});
  bool all_strong = true;
  for (const auto& [cone, strong] : y.StrongConvexityReport()) {
    all_strong = all_strong && strong;
  }
  report.cases.push_back({"Y strongly convex", all_strong && y.lineality().empty(),
                          "lineality rank " +
                              std::to_string(y.lineality().size())});

  const OrbitFan y2 = OrbitFan::Build(GeometricTable(SecondOrbit()));
  const std::map<SignedPermutation, Windows> y2_cones = {
      {w({1, 2, 3}), {w({1, 2, 3}), w({1, 3, 2}), w({2, 1, 3})}},
      {w({3, 2, 1}), {w({2, 3, 1}), w({3, 1, 2}), w({3, 2, 1})}}};
  report.cases.push_back({"Y' cones", y2.cones() == y2_cones,
                          std::to_string(y2.cones().size()) + " cones"});
  bool none_strong = true;
  for (const auto& [cone, strong] : y2.StrongConvexityReport()) {
    none_strong = none_strong && !strong;
  }
  const bool line = y2.lineality().size() == 1 &&
                    y2.lineality()[0] == MakeVector({1, -2, 1});
  report.cases.push_back({"Y' lineality", line && none_strong,
                          "lineality " + VectorToJson(y2.lineality().empty()
                                                          ? RationalVector{}
                                                          : y2.lineality()[0])
                                             .dump()});
  bool connected = true;
  for (const OrbitFan* fan : {&y, &y2}) {
    for (const auto& [cone, chambers] : fan->cones()) {
      connected = connected && fan->IsConnected(cone);
    }
  }
  report.cases.push_back({"connected cones", connected, ""});
  return report;
}

}  // namespace

int SuiteReport::passed() const {
  return static_cast<int>(std::count_if(
      cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; }));
}

Json SuiteReport::ToJson() const {
  Json list = Json::array();
  for (const CaseResult& c : cases) {
    list.push_back({{"name", c.name},
                    {"status", c.passed ? "pass" : "fail"},
                    {"detail", c.detail}});
  }
  return Json{{"suite", suite},
              {"seed", seed},
              {"version", WEYLRET_VERSION},
              {"total", cases.size()},
              {"passed", passed()},
              {"status", ok() ? "pass" : "fail"},
              {"cases", list}};
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> kNames = {
      "table1",         "closest-unique", "thmB-random", "matroid-equiv",
      "gs-s3-exhaustive", "two-element-s4", "fano",        "fan-figures"};
  return kNames;
}

RationalMatrix OrbitSuiteMatrix(int n, uint64_t seed, int index) {
  static constexpr double kDensities[] = {0.3, 0.4, 0.5, 0.6, 0.75};
  const uint64_t matrix_seed = seed * 1'000'003 + n * 10'007 + index;
  SampleProfile profile;
  if (index % 6 == 5) {
    profile.kind = SampleKind::kGeneric;
  } else {
    profile.kind = SampleKind::kSparse;
    profile.density = kDensities[index % 6];
  }
  return SampleRationalPoint(n, matrix_seed, profile);
}

SuiteReport RunSuite(const std::string& name, const SuiteOptions& options) {
  static const std::map<std::string,
                        std::function<SuiteReport(const SuiteOptions&)>>
      kSuites = {{"table1", Table1},
                 {"closest-unique", ClosestUnique},
                 {"thmB-random", GeometricVsAlgebraic},
                 {"matroid-equiv", MatroidEquivalence},
                 {"gs-s3-exhaustive", GsS3Exhaustive},
                 {"two-element-s4", TwoElementS4},
                 {"fano", Fano},
                 {"fan-figures", FanFigures}};
  auto it = kSuites.find(name);
  if (it == kSuites.end()) {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report = it->second(options);
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace weylret::cli
