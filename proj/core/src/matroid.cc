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

#include "weylret/matroid.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <set>
#include <utility>

#include "weylret/errors.h"
#include "weylret/geometry.h"
#include "weylret/parallel.h"

namespace weylret {
namespace {

constexpr size_t kNone = std::numeric_limits<size_t>::max();

}  // namespace

MatroidVerdict IsCoxeterMatroid(const SubsetM& m,
                                const MatroidCheckOptions& options) {
  const WeylGroup& g = m.group();
  std::vector<SignedPermutation> domain = g.Enumerate(options.cap);
  std::vector<SignedPermutation> images(domain.size());
  std::vector<std::vector<SignedPermutation>> failures(domain.size());
  std::atomic<size_t> first_failure{kNone};

  ParallelFor(domain.size(), [&](size_t i) {
    const SignedPermutation& u = domain[i];
    std::vector<SignedPermutation> extremal;
    if (options.side == Extremum::kMaximal) {
      extremal = TwistedMaximal(m, u);
    } else if (options.strategy == MatroidStrategy::kGreedyFirst) {
      try {
        extremal = {MatroidRetract(m, u, MatroidStrategy::kGreedyFirst)};
      } catch (const NotAMatroidAt&) {
        extremal = TwistedMinimal(m, u);
      }
    } else {
      extremal = TwistedMinimal(m, u);
    }
    if (extremal.size() == 1) {
      images[i] = extremal.front();
      return;
    }
    failures[i] = std::move(extremal);
    size_t seen = first_failure.load();
    while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
    }
  });

  MatroidVerdict verdict;
  const size_t bad = first_failure.load();
  if (bad != kNone) {
    verdict.is_matroid = false;
    verdict.witness = domain[bad];
    verdict.extremal = std::move(failures[bad]);
    return verdict;
  }
  if (options.keep_table && options.side == Extremum::kMinimal) {
    verdict.table.emplace(g.descriptor(), Provenance::kMatroid,
                          std::move(domain), std::move(images));
  }
  return verdict;
}

bool SetOrderLeq(const WeylGroup& g, std::vector<int> a, std::vector<int> b,
                 const SignedPermutation& u, size_t factor) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("sets compared under <=^u differ in size");
  }
  auto position = [&](int i) { return g.UOrderPosition(i, u, factor); };
  std::vector<int> pa, pb;
  for (int i : a) pa.push_back(position(i));
  for (int j : b) pb.push_back(position(j));
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  for (size_t k = 0; k < pa.size(); ++k) {
    if (pa[k] > pb[k]) return false;
  }
  return true;
}

bool FlagOrderLeq(const WeylGroup& g, const SignedPermutation& v,
                  const SignedPermutation& w, const SignedPermutation& u) {
  for (const SignedPermutation* x : {&v, &w, &u}) {
    if (!g.Contains(*x)) {
      throw DescriptorMismatch("window [" + x->ToString() + "] is not in " +
                               g.descriptor().Label());
    }
  }
  const GroupDescriptor& d = g.descriptor();
  for (size_t j = 0; j < d.num_factors(); ++j) {
    const int off = d.offset(j);
    const int n = d.factor(j).rank;
    // Positions in the extended window of u, restricted to this factor.
    std::vector<int> pv, pw;
    for (int k = 0; k < n; ++k) {
      pv.push_back(g.UOrderPosition(v[off + k], u, j));
      pw.push_back(g.UOrderPosition(w[off + k], u, j));
      std::vector<int> sv = pv, sw = pw;
      std::sort(sv.begin(), sv.end());
      std::sort(sw.begin(), sw.end());
      for (int i = 0; i <= k; ++i) {
        if (sv[i] > sw[i]) return false;
      }
    }
  }
  return true;
}

bool IsFlagMatroid(const SubsetM& m, uint64_t cap) {
  const WeylGroup& g = m.group();
  const std::vector<SignedPermutation> domain = g.Enumerate(cap);
  const std::vector<SignedPermutation>& elems = m.elements();
  std::atomic<bool> ok{true};
  ParallelFor(domain.size(), [&](size_t i) {
    if (!ok.load()) return;
    int maximal = 0;
    for (size_t a = 0; a < elems.size(); ++a) {
      bool dominated = false;
      for (size_t b = 0; b < elems.size() && !dominated; ++b) {
        dominated = a != b && FlagOrderLeq(g, elems[a], elems[b], domain[i]);
      }
      if (!dominated) ++maximal;
    }
    if (maximal != 1) ok.store(false);
  });
  return ok.load();
}

RationalVector DefaultBasePoint(const WeylGroup& g) {
  const GroupDescriptor& d = g.descriptor();
  RationalVector nu(g.total_rank());
  for (size_t j = 0; j < d.num_factors(); ++j) {
    const Factor& f = d.factor(j);
    for (int i = 0; i < f.rank; ++i) {
      nu[d.offset(j) + i] = f.type == WeylType::kA ? i + 1 : f.rank - i;
    }
  }
  return nu;
}

void ValidateBasePoint(const WeylGroup& g, std::span<const Rational> nu) {
  if (static_cast<int>(nu.size()) != g.total_rank()) {
    throw DimensionMismatch("base point has length " +
                            std::to_string(nu.size()) + ", expected " +
                            std::to_string(g.total_rank()));
  }
  const GroupDescriptor& d = g.descriptor();
  const std::vector<RationalVector> simple = g.SimpleRoots();
  size_t k = 0;
  for (size_t j = 0; j < d.num_factors(); ++j) {
    const Factor& f = d.factor(j);
    const size_t count = f.type == WeylType::kA ? f.rank - 1 : f.rank;
    int sign = 0;
    for (size_t end = k + count; k < end; ++k) {
      const int s = sgn(Dot(simple[k], nu));
      if (s == 0 || (sign != 0 && s != sign)) {
        throw PreconditionError(
            "base point must lie strictly inside the fundamental chamber or "
            "its negative in every factor");
      }
      sign = s;
    }
  }
}

MatroidPolytope PhiPolytopeCheck(const SubsetM& m,
                                 std::span<const Rational> nu) {
  const WeylGroup& g = m.group();
  ValidateBasePoint(g, nu);
  MatroidPolytope poly;
  poly.base_point.assign(nu.begin(), nu.end());
  for (const SignedPermutation& w : m.elements()) {
    poly.vertices.push_back(g.Act(w, nu));
  }
  poly.edges = HullEdges(poly.vertices);
  for (const auto& [a, b] : poly.edges) {
    if (!g.IsParallelToRoot(Subtract(poly.vertices[a], poly.vertices[b]))) {
      poly.offending.emplace_back(a, b);
    }
  }
  poly.is_phi = poly.offending.empty();
  return poly;
}

SubsetM BruhatInterval(const WeylGroup& g, const SignedPermutation& v,
                       const SignedPermutation& w, uint64_t cap) {
  if (!g.BruhatLeq(v, w)) {
    throw NotComparable("[" + v.ToString() + "] is not below [" +
                        w.ToString() + "] in Bruhat order");
  }
  std::vector<SignedPermutation> members;
  g.ForEach(
      [&](const SignedPermutation& z) {
        if (g.BruhatLeq(v, z) && g.BruhatLeq(z, w)) members.push_back(z);
      },
      cap);
  return SubsetM(g, std::move(members));
}

const std::vector<std::vector<int>>& FanoLines() {
  static const std::vector<std::vector<int>> kLines = {
      {1, 2, 4}, {1, 3, 5}, {1, 6, 7}, {2, 3, 6},
      {2, 5, 7}, {3, 4, 7}, {4, 5, 6}};
  return kLines;
}

SubsetM FanoMatroidS7() {
  WeylGroup g(GroupDescriptor::Single(WeylType::kA, 7));
  std::set<std::vector<int>> lines(FanoLines().begin(), FanoLines().end());
  std::vector<SignedPermutation> members;
  g.ForEach([&](const SignedPermutation& w) {
    std::vector<int> head = {w[0], w[1], w[2]};
    std::sort(head.begin(), head.end());
    if (!lines.contains(head)) members.push_back(w);
  });
  return SubsetM(g, std::move(members));
}

bool AlgebraicRetractionIsUniqueClosest(const SubsetM& m, uint64_t cap) {
  const WeylGroup& g = m.group();
  const std::vector<SignedPermutation> domain = g.Enumerate(cap);
  std::atomic<bool> ok{true};
  ParallelFor(domain.size(), [&](size_t i) {
    if (!ok.load()) return;
    const ClosestSet closest = FindClosest(m, domain[i]);
    if (closest.argmins.size() != 1 ||
        closest.argmins.front() != AlgebraicRetract(m, domain[i])) {
      ok.store(false);
    }
  });
  return ok.load();
}

TwoElementReport AnalyzeTwoElementSubset(const SubsetM& m) {
  const WeylGroup& g = m.group();
  const GroupDescriptor& d = g.descriptor();
  if (m.size() != 2 || d.num_factors() != 1 ||
      d.factor(0).type != WeylType::kA) {
    throw PreconditionError(
        "two-element analysis needs two elements of a single type A group");
  }
  TwoElementReport report;
  report.flag_matroid = IsFlagMatroid(m);

  const std::vector<SignedPermutation> domain = g.Enumerate();
  std::atomic<bool> minimal{true};
  ParallelFor(domain.size(), [&](size_t i) {
    const SignedPermutation& u = domain[i];
    const SignedPermutation r = AlgebraicRetract(m, u);
    for (const SignedPermutation& w : m.elements()) {
      if (!FlagOrderLeq(g, r, w, u)) minimal.store(false);
    }
  });
  report.algebraic_minimal = minimal.load();
  report.unique_closest = AlgebraicRetractionIsUniqueClosest(m);
  report.coxeter_matroid = IsCoxeterMatroid(m).is_matroid;
  const SignedPermutation& x = m.elements()[0];
  const SignedPermutation& y = m.elements()[1];
  report.reflection_difference = g.IsReflection(g.Compose(g.Inverse(x), y));
  return report;
}

SearchResult SearchUniqueClosestNonMatroid(const WeylGroup& g,
                                           uint64_t samples, uint64_t seed,
                                           int min_size, int max_size) {
  if (g.descriptor().num_factors() != 1) {
    throw PreconditionError("search runs on a single-factor group");
  }
  const std::vector<SignedPermutation> all = g.Enumerate();
  max_size = std::min<int>(max_size, static_cast<int>(all.size()));
  if (min_size < 1 || min_size > max_size) {
    throw PreconditionError("invalid subset size range");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(min_size, max_size);
  SearchResult result;
  result.seed = seed;
  result.samples = samples;
  for (uint64_t s = 0; s < samples; ++s) {
    std::vector<SignedPermutation> pick;
    std::sample(all.begin(), all.end(), std::back_inserter(pick),
                size_dist(rng), rng);
    SubsetM m(g, pick);
    if (AlgebraicRetractionIsUniqueClosest(m) && !IsCoxeterMatroid(m).is_matroid) {
      result.counterexamples.push_back(m.elements());
    }
  }
  return result;
}

}  // namespace weylret
