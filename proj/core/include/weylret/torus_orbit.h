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

#ifndef WEYLRET_TORUS_ORBIT_H_
#define WEYLRET_TORUS_ORBIT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "weylret/rational.h"
#include "weylret/retraction.h"
#include "weylret/weyl.h"

namespace weylret {

// Nonzero Plücker coordinates of an invertible n x n matrix x: levels[d - 1]
// lists the ascending 1-based row tuples i with det x[i; 1..d] != 0,
// lexicographically sorted.
struct PluckerSupport {
  int n = 0;
  std::vector<std::vector<std::vector<int>>> levels;

  const std::vector<std::vector<int>>& Level(int d) const {
    return levels[d - 1];
  }
  bool Contains(const std::vector<int>& sorted_tuple) const;
};

// Throws DimensionMismatch for a non-square matrix, SingularMatrix when
// det x = 0.
PluckerSupport ComputePluckerSupport(const RationalMatrix& x);

struct OrbitFixedPoints {
  PluckerSupport support;
  // Sorted windows of S_n.
  std::vector<SignedPermutation> points;

  SubsetM AsSubset() const;
};

OrbitFixedPoints FixedPoints(const RationalMatrix& x);
std::vector<SignedPermutation> FixedPoints(const PluckerSupport& support);

// The limit fixed point of lambda(t) x as t -> 0: at level d the tuple of
// I_d(x) of least lambda-weight. Throws TieDetected when that minimum is
// attained twice and DimensionMismatch for a wrong-length lambda.
SignedPermutation LimitPoint(const PluckerSupport& support,
                             std::span<const int64_t> lambda);
SignedPermutation LimitPoint(const RationalMatrix& x,
                             std::span<const int64_t> lambda);

// lambda_{u(j)} = n 2^j - (2^(n+1) - 2): integral, sum zero, inside the open
// chamber C(u), and no two d-subsets share a weight. Needs n <= 30.
std::vector<int64_t> ChamberWeight(const SignedPermutation& u);

// R^g over all of S_n with provenance geometric-limit.
RetractionTable GeometricTable(const RationalMatrix& x);
RetractionTable GeometricTable(const PluckerSupport& support);

enum class SampleKind { kGeneric, kSparse, kInterval };

struct SampleProfile {
  SampleKind kind = SampleKind::kGeneric;
  // kSparse: probability that an entry is nonzero.
  double density = 0.5;
  // kInterval: target fixed-point set [v, w].
  SignedPermutation interval_lo;
  SignedPermutation interval_hi;
  int max_retries = 10'000;
};

// Reproducible random invertible n x n matrix. Generic entries are p/q with
// |p| <= 9, 1 <= q <= 4; sparse entries are integers in [-3, 3]. Throws
// GiveUp when no acceptable matrix is found within max_retries.
RationalMatrix SampleRationalPoint(int n, uint64_t seed,
                                   const SampleProfile& profile = {});

}  // namespace weylret

#endif  // WEYLRET_TORUS_ORBIT_H_
