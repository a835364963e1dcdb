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

#include "weylret/torus_orbit.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "weylret/errors.h"
#include "weylret/matroid.h"

namespace weylret {
namespace {

using Tuples = std::vector<std::vector<int>>;

RationalMatrix Matrix(std::vector<std::vector<long>> rows) {
  std::vector<RationalVector> out;
  for (const auto& r : rows) {
    RationalVector v;
    for (long x : r) v.push_back(x);
    out.push_back(v);
  }
  return RationalMatrix(out);
}

RationalMatrix FirstExample() {
  return Matrix({{1, 1, 0}, {1, 0, 1}, {1, 0, 0}});
}

RationalMatrix SecondExample() {
  return Matrix({{1, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

std::vector<SignedPermutation> Windows(Tuples ws) {
  std::vector<SignedPermutation> out;
  for (auto& w : ws) out.push_back(SignedPermutation(std::move(w)));
  std::sort(out.begin(), out.end());
  return out;
}

// Reference weight: the lambda-weight of every prefix set of w.
std::vector<int64_t> PrefixWeights(const SignedPermutation& w,
                                   const std::vector<int64_t>& lambda) {
  std::vector<int64_t> out;
  int64_t sum = 0;
  for (int i = 0; i < w.size(); ++i) {
    sum += lambda[w[i] - 1];
    out.push_back(sum);
  }
  return out;
}

TEST(PluckerSupportTest, FirstExample) {
  const PluckerSupport s = ComputePluckerSupport(FirstExample());
  EXPECT_EQ(s.Level(1), (Tuples{{1}, {2}, {3}}));
  EXPECT_EQ(s.Level(2), (Tuples{{1, 2}, {1, 3}}));
  EXPECT_EQ(s.Level(3), (Tuples{{1, 2, 3}}));
}

TEST(PluckerSupportTest, PermutationMatrices) {
  const PluckerSupport id = ComputePluckerSupport(RationalMatrix::Identity(4));
  const PluckerSupport rev = ComputePluckerSupport(
      Matrix({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}));
  for (int d = 1; d <= 4; ++d) {
    std::vector<int> lead(d), tail(d);
    std::iota(lead.begin(), lead.end(), 1);
    std::iota(tail.begin(), tail.end(), 4 - d + 1);
    EXPECT_EQ(id.Level(d), Tuples{lead});
    EXPECT_EQ(rev.Level(d), Tuples{tail});
  }
}

TEST(PluckerSupportTest, Errors) {
  EXPECT_THROW(ComputePluckerSupport(Matrix({{1, 2}, {2, 4}})), SingularMatrix);
  EXPECT_THROW(ComputePluckerSupport(Matrix({{1, 2, 3}, {2, 4, 5}})),
               DimensionMismatch);
}

TEST(FixedPointsTest, Examples) {
  EXPECT_EQ(FixedPoints(FirstExample()).points,
            Windows({{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {3, 1, 2}}));
  EXPECT_EQ(FixedPoints(SecondExample()).points,
            Windows({{1, 2, 3}, {3, 2, 1}}));
  EXPECT_EQ(FixedPoints(RationalMatrix::Identity(3)).points,
            Windows({{1, 2, 3}}));
}

TEST(FixedPointsTest, GenericPointHasEveryFixedPoint) {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const RationalMatrix x = SampleRationalPoint(4, seed);
    EXPECT_EQ(FixedPoints(x).points.size(), 24u);
  }
}

TEST(FixedPointsTest, InvariantUnderUpperTriangularFactors) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> diag(1, 3);
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    SampleProfile sparse;
    sparse.kind = SampleKind::kSparse;
    sparse.density = 0.4;
    const int n = 3 + seed % 3;
    const RationalMatrix x = SampleRationalPoint(n, seed, sparse);
    RationalMatrix b(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = r; c < n; ++c) b(r, c) = r == c ? diag(rng) : entry(rng);
    }
    EXPECT_EQ(FixedPoints(x).points, FixedPoints(x * b).points);
  }
}

TEST(FixedPointsTest, AreCoxeterMatroids) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    SampleProfile sparse;
    sparse.kind = SampleKind::kSparse;
    sparse.density = 0.35 + 0.02 * seed;
    const OrbitFixedPoints y =
        FixedPoints(SampleRationalPoint(3 + seed % 2, seed, sparse));
    EXPECT_TRUE(IsCoxeterMatroid(y.AsSubset()).is_matroid);
  }
}

TEST(LimitPointTest, FirstExampleChambers) {
  const PluckerSupport s = ComputePluckerSupport(FirstExample());
  // lambda in the open chamber of 123 and of 231.
  EXPECT_EQ(LimitPoint(s, std::vector<int64_t>{-1, 0, 1}).window(),
            (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(LimitPoint(s, std::vector<int64_t>{1, -1, 0}).window(),
            (std::vector<int>{2, 1, 3}));
  EXPECT_THROW(LimitPoint(s, std::vector<int64_t>{0, 0, 0}), TieDetected);
  EXPECT_THROW(LimitPoint(s, std::vector<int64_t>{0, 0}), DimensionMismatch);
}

TEST(LimitPointTest, TableRows) {
  const std::vector<std::vector<int>> us = {{1, 2, 3}, {2, 1, 3}, {2, 3, 1},
                                            {3, 2, 1}, {3, 1, 2}, {1, 3, 2}};
  const Tuples row_y = {{1, 2, 3}, {2, 1, 3}, {2, 1, 3},
                        {3, 1, 2}, {3, 1, 2}, {1, 3, 2}};
  const Tuples row_y2 = {{1, 2, 3}, {1, 2, 3}, {3, 2, 1},
                         {3, 2, 1}, {3, 2, 1}, {1, 2, 3}};
  const RetractionTable t = GeometricTable(FirstExample());
  const RetractionTable t2 = GeometricTable(SecondExample());
  EXPECT_EQ(t.provenance(), Provenance::kGeometricLimit);
  for (size_t i = 0; i < us.size(); ++i) {
    EXPECT_EQ(t.At(SignedPermutation(us[i])).window(), row_y[i]);
    EXPECT_EQ(t2.At(SignedPermutation(us[i])).window(), row_y2[i]);
  }
}

TEST(LimitPointTest, MinimisesEveryPrefixWeight) {
  // The limit is the fixed point whose every prefix set is lightest.
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    SampleProfile sparse;
    sparse.kind = SampleKind::kSparse;
    sparse.density = 0.5;
    const int n = 3 + seed % 3;
    const OrbitFixedPoints y = FixedPoints(SampleRationalPoint(n, seed, sparse));
    const WeylGroup g(GroupDescriptor::Single(WeylType::kA, n));
    for (const auto& u : g.Enumerate()) {
      const std::vector<int64_t> lambda = ChamberWeight(u);
      const SignedPermutation limit = LimitPoint(y.support, lambda);
      ASSERT_TRUE(std::binary_search(y.points.begin(), y.points.end(), limit));
      const auto best = PrefixWeights(limit, lambda);
      for (const auto& w : y.points) {
        const auto other = PrefixWeights(w, lambda);
        for (int k = 0; k < n; ++k) EXPECT_LE(best[k], other[k]);
      }
    }
  }
}

TEST(LimitPointTest, AnyInteriorWeightGivesTheSameTable) {
  std::mt19937_64 rng(32);
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    SampleProfile sparse;
    sparse.kind = SampleKind::kSparse;
    const RationalMatrix x = SampleRationalPoint(4, seed, sparse);
    const PluckerSupport s = ComputePluckerSupport(x);
    const RetractionTable t = GeometricTable(s);
    for (const auto& u : t.domain()) {
      // Random increasing weights along u, perturbed until tie-free.
      for (int attempt = 0; attempt < 50; ++attempt) {
        std::uniform_int_distribution<int64_t> step(1, 1000);
        int64_t acc = 0;
        std::vector<int64_t> lambda(4);
        for (int j = 0; j < 4; ++j) {
          acc += step(rng);
          lambda[u[j] - 1] = acc;
        }
        try {
          EXPECT_EQ(LimitPoint(s, lambda), t.At(u));
          break;
        } catch (const TieDetected&) {
        }
      }
    }
  }
}

TEST(ChamberWeightTest, InteriorSumZeroAndTieFree) {
  const WeylGroup g(GroupDescriptor::Single(WeylType::kA, 5));
  for (const auto& u : g.Enumerate()) {
    const std::vector<int64_t> lambda = ChamberWeight(u);
    EXPECT_EQ(std::accumulate(lambda.begin(), lambda.end(), int64_t{0}), 0);
    RationalVector q;
    for (int64_t x : lambda) q.push_back(Rational(static_cast<long>(x)));
    EXPECT_EQ(g.ChamberOf(q), u);
  }
  // Distinct subset sums at every size.
  const std::vector<int64_t> lambda = ChamberWeight(g.Identity());
  for (int size = 1; size <= 5; ++size) {
    std::vector<int64_t> sums;
    for (unsigned mask = 0; mask < 32; ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      int64_t sum = 0;
      for (int i = 0; i < 5; ++i) {
        if (mask >> i & 1) sum += lambda[i];
      }
      sums.push_back(sum);
    }
    std::sort(sums.begin(), sums.end());
    EXPECT_EQ(std::adjacent_find(sums.begin(), sums.end()), sums.end());
  }
  EXPECT_THROW(ChamberWeight(SignedPermutation(std::vector<int>(31, 1))),
               PreconditionError);
}

TEST(SampleTest, DeterministicAndInvertible) {
  for (uint64_t seed : {1u, 2u, 99u}) {
    const RationalMatrix a = SampleRationalPoint(4, seed);
    EXPECT_EQ(a, SampleRationalPoint(4, seed));
    EXPECT_NE(Determinant(a), 0);
  }
  EXPECT_NE(SampleRationalPoint(4, 1), SampleRationalPoint(4, 2));
}

TEST(SampleTest, IntervalProfile) {
  const WeylGroup g(GroupDescriptor::Single(WeylType::kA, 3));
  SampleProfile full;
  full.kind = SampleKind::kInterval;
  full.interval_lo = g.Identity();
  full.interval_hi = g.LongestElement();
  EXPECT_EQ(FixedPoints(SampleRationalPoint(3, 1, full)).points.size(), 6u);

  SampleProfile small;
  small.kind = SampleKind::kInterval;
  small.interval_lo = g.Identity();
  small.interval_hi = g.Element({2, 1, 3});
  EXPECT_EQ(FixedPoints(SampleRationalPoint(3, 2, small)).points,
            Windows({{1, 2, 3}, {2, 1, 3}}));

  // One attempt is not enough for this target with this seed.
  SampleProfile hopeless;
  hopeless.kind = SampleKind::kInterval;
  hopeless.interval_lo = SignedPermutation({1, 2, 3, 4});
  hopeless.interval_hi = SignedPermutation({2, 1, 4, 3});
  hopeless.max_retries = 1;
  EXPECT_THROW(SampleRationalPoint(4, 3, hopeless), GiveUp);
}

}  // namespace
}  // namespace weylret
