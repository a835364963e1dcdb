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

#ifndef WEYLRET_MATROID_H_
#define WEYLRET_MATROID_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "weylret/rational.h"
#include "weylret/retraction.h"
#include "weylret/weyl.h"

namespace weylret {

struct MatroidVerdict {
  bool is_matroid = true;
  // On failure: the first u in enumeration order whose twisted set u^-1 M has
  // zero or several extremal elements, and those elements of M.
  std::optional<SignedPermutation> witness;
  std::vector<SignedPermutation> extremal;
  // On success, when requested: R^m over the whole group.
  std::optional<RetractionTable> table;
};

enum class Extremum { kMinimal, kMaximal };

struct MatroidCheckOptions {
  Extremum side = Extremum::kMinimal;
  MatroidStrategy strategy = MatroidStrategy::kMinimalSet;
  bool keep_table = false;
  uint64_t cap = 1'000'000;
};

MatroidVerdict IsCoxeterMatroid(const SubsetM& m,
                                const MatroidCheckOptions& options = {});

// F(v) <=^u F(w): for each k the <=^u-sorted sets {v(1..k)} and {w(1..k)}
// compare entrywise, factor by factor.
bool FlagOrderLeq(const WeylGroup& g, const SignedPermutation& v,
                  const SignedPermutation& w, const SignedPermutation& u);

// A <=^u B for equal-size sets of letters of one factor.
bool SetOrderLeq(const WeylGroup& g, std::vector<int> a, std::vector<int> b,
                 const SignedPermutation& u, size_t factor = 0);

// Maximality Property for the flags of M under the orders <=^u.
bool IsFlagMatroid(const SubsetM& m, uint64_t cap = 1'000'000);

// Per factor: (1, 2, ..., n) in type A, (n, ..., 2, 1) in types BC and D.
RationalVector DefaultBasePoint(const WeylGroup& g);

// Throws PreconditionError unless, in every factor, nu lies in the interior
// of the fundamental chamber C(e) or of -C(e). Other regular points give the
// polytope of a right translate of M.
void ValidateBasePoint(const WeylGroup& g, std::span<const Rational> nu);

struct MatroidPolytope {
  RationalVector base_point;
  // vertices[i] = elements()[i] . nu
  std::vector<RationalVector> vertices;
  std::vector<std::pair<size_t, size_t>> edges;
  // Edges whose direction is not parallel to a root.
  std::vector<std::pair<size_t, size_t>> offending;
  bool is_phi = true;
};

MatroidPolytope PhiPolytopeCheck(const SubsetM& m,
                                 std::span<const Rational> nu);

// {z : v <= z <= w}. Throws NotComparable unless v <= w.
SubsetM BruhatInterval(const WeylGroup& g, const SignedPermutation& v,
                       const SignedPermutation& w, uint64_t cap = 1'000'000);

// The seven lines of the Fano plane on {1, ..., 7}.
const std::vector<std::vector<int>>& FanoLines();
// {w in S_7 : {w(1), w(2), w(3)} is not a Fano line}.
SubsetM FanoMatroidS7();

struct TwoElementReport {
  // (1) the flags of M form a flag matroid.
  bool flag_matroid = false;
  // (2) R^a(u) is the unique <=^u-minimal element for all u.
  bool algebraic_minimal = false;
  // (3) R^a(u) is the unique closest element for all u.
  bool unique_closest = false;
  bool coxeter_matroid = false;
  // x^-1 y is a reflection (x, y span a GKM edge).
  bool reflection_difference = false;
  bool Consistent() const {
    return flag_matroid == algebraic_minimal &&
           algebraic_minimal == unique_closest &&
           unique_closest == coxeter_matroid &&
           coxeter_matroid == reflection_difference;
  }
};

// Throws PreconditionError unless M has two elements of a single type A
// factor.
TwoElementReport AnalyzeTwoElementSubset(const SubsetM& m);

// True iff R^a(u) is the unique closest element of M for every u.
bool AlgebraicRetractionIsUniqueClosest(const SubsetM& m,
                                        uint64_t cap = 1'000'000);

struct SearchResult {
  uint64_t seed = 0;
  uint64_t samples = 0;
  // Subsets where (3) holds but M is not a Coxeter matroid.
  std::vector<std::vector<SignedPermutation>> counterexamples;
};

// Random subsets of sizes [min_size, max_size] of a single-factor group.
SearchResult SearchUniqueClosestNonMatroid(const WeylGroup& g,
                                           uint64_t samples, uint64_t seed,
                                           int min_size, int max_size);

}  // namespace weylret

#endif  // WEYLRET_MATROID_H_
