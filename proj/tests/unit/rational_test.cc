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

#include "weylret/rational.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "weylret/errors.h"

namespace weylret {
namespace {

TEST(RationalTest, ParseAndFormat) {
  EXPECT_EQ(ParseRational("3"), Rational(3));
  EXPECT_EQ(ParseRational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(FormatRational(Rational(-4, 6)), "-2/3");
  EXPECT_EQ(FormatRational(Rational(8, 4)), "2");
  for (const char* bad : {"", "1/0", "a", "1/-2", "1//2", "1.5", "--1"}) {
    EXPECT_THROW(ParseRational(bad), ParseError) << bad;
  }
}

TEST(RationalTest, SmallDeterminants) {
  const RationalMatrix x({MakeVector({1, 1, 0}), MakeVector({1, 0, 1}),
                          MakeVector({1, 0, 0})});
  EXPECT_EQ(Determinant(x), Rational(1));
  EXPECT_EQ(Determinant(RationalMatrix::Identity(4)), Rational(1));
  const RationalMatrix singular({MakeVector({1, 2}), MakeVector({2, 4})});
  EXPECT_EQ(Determinant(singular), Rational(0));
  EXPECT_EQ(Rank(singular), 1u);
}

// Cofactor expansion as an independent reference.
Rational Laplace(const std::vector<std::vector<Rational>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Rational>> sub;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      sub.push_back(row);
    }
    const Rational term = m[0][c] * Laplace(sub);
    total += c % 2 == 0 ? term : Rational(-term);
  }
  return total;
}

TEST(RationalTest, MinorsMatchCofactorExpansion) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t n = 1 + trial % 5;
    RationalMatrix x(n, n);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < n; ++c) {
        // Sparse entries exercise the pivot swaps.
        const int v = trial % 2 == 0 ? entry(rng) : entry(rng) * (entry(rng) > 0);
        x(r, c) = v;
        rows[r][c] = v;
      }
    }
    EXPECT_EQ(Determinant(x), Laplace(rows));
  }
}

TEST(RationalTest, NullspaceIsKernel) {
  const RationalMatrix x({MakeVector({1, 0, -1}), MakeVector({1, 1, 1})});
  const auto basis = NullspaceBasis(x);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], MakeVector({1, -2, 1}));
  EXPECT_EQ(CanonicalSpanBasis({MakeVector({-2, 4, -2})}, 3)[0],
            MakeVector({1, -2, 1}));
  EXPECT_TRUE(SameSpan({MakeVector({1, 0}), MakeVector({0, 1})},
                       {MakeVector({1, 1}), MakeVector({1, -1})}, 2));
  EXPECT_FALSE(SameSpan({MakeVector({1, 0})}, {MakeVector({0, 1})}, 2));
  EXPECT_TRUE(CanonicalSpanBasis({}, 3).empty());
}

TEST(RationalTest, CanonicalBasisIsPrimitive) {
  const auto basis = CanonicalSpanBasis(
      {MakeVector({2, 4, 6}), MakeVector({1, 3, 5})}, 3);
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], MakeVector({1, 0, -1}));
  EXPECT_EQ(basis[1], MakeVector({0, 1, 2}));
}

TEST(RationalTest, MatrixProduct) {
  const RationalMatrix a({MakeVector({1, 2}), MakeVector({3, 4})});
  const RationalMatrix b({MakeVector({0, 1}), MakeVector({1, 0})});
  EXPECT_EQ(a * b, RationalMatrix({MakeVector({2, 1}), MakeVector({4, 3})}));
  EXPECT_THROW(RationalMatrix({MakeVector({1}), MakeVector({1, 2})}),
               DimensionMismatch);
}

}  // namespace
}  // namespace weylret
