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

#include "weylret/geometry.h"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "weylret/errors.h"
#include "weylret/weyl.h"

namespace weylret {
namespace {

TEST(HalfspaceConeTest, Membership) {
  // C(e) in the sum-zero plane of Q^3.
  const HalfspaceCone cone(3, {MakeVector({1, -1, 0}), MakeVector({0, 1, -1})},
                           {MakeVector({1, 1, 1})});
  EXPECT_EQ(ConeMembership(cone, MakeVector({-2, 0, 2})), Membership::kInterior);
  EXPECT_EQ(ConeMembership(cone, MakeVector({-1, -1, 2})),
            Membership::kBoundary);
  EXPECT_EQ(ConeMembership(cone, MakeVector({2, 0, -2})), Membership::kOutside);
  EXPECT_EQ(ConeMembership(cone, MakeVector({0, 1, 2})), Membership::kOutside);
  EXPECT_TRUE(Lineality(cone).empty());
  EXPECT_THROW(HalfspaceCone(3, {MakeVector({0, 0, 0})}), PreconditionError);
  EXPECT_THROW(HalfspaceCone(3, {MakeVector({1, 0})}), DimensionMismatch);
}

TEST(HalfspaceConeTest, LinealityOfAHalfPlane) {
  const HalfspaceCone cone(3, {MakeVector({1, 0, -1})}, {MakeVector({1, 1, 1})});
  const auto lin = Lineality(cone);
  ASSERT_EQ(lin.size(), 1u);
  EXPECT_TRUE(IsParallel(lin[0], MakeVector({1, -2, 1})));
  EXPECT_EQ(Lineality(HalfspaceCone(2, {})).size(), 2u);
}

TEST(EdgeTest, Square) {
  const std::vector<RationalVector> square = {
      MakeVector({0, 0}), MakeVector({1, 0}), MakeVector({1, 1}),
      MakeVector({0, 1})};
  const auto edges = HullEdges(square);
  const std::vector<std::pair<size_t, size_t>> expected = {
      {0, 1}, {0, 3}, {1, 2}, {2, 3}};
  EXPECT_EQ(edges, expected);
}

TEST(EdgeTest, Simplex3d) {
  const std::vector<RationalVector> tetra = {
      MakeVector({0, 0, 0}), MakeVector({1, 0, 0}), MakeVector({0, 1, 0}),
      MakeVector({0, 0, 1})};
  EXPECT_EQ(HullEdges(tetra).size(), 6u);
  // Octahedron: opposite vertices are not adjacent.
  const std::vector<RationalVector> octa = {
      MakeVector({1, 0, 0}), MakeVector({-1, 0, 0}), MakeVector({0, 1, 0}),
      MakeVector({0, -1, 0}), MakeVector({0, 0, 1}), MakeVector({0, 0, -1})};
  const auto edges = HullEdges(octa);
  EXPECT_EQ(edges.size(), 12u);
  EXPECT_FALSE(LpEdgeFeasible(octa[0], octa[1],
                              {octa[2], octa[3], octa[4], octa[5]}));
}

TEST(EdgeTest, PermutohedronS3) {
  const WeylGroup g(GroupDescriptor::Single(WeylType::kA, 3));
  std::vector<RationalVector> points;
  for (const auto& w : g.Enumerate()) {
    points.push_back(g.Act(w, MakeVector({1, 2, 3})));
  }
  const auto edges = HullEdges(points);
  EXPECT_EQ(edges.size(), 6u);
  for (const auto& [a, b] : edges) {
    EXPECT_TRUE(g.IsParallelToRoot(Subtract(points[a], points[b])));
  }
}

TEST(EdgeTest, MatchesPlanarOracleOnS3Subsets) {
  const WeylGroup g(GroupDescriptor::Single(WeylType::kA, 3));
  const auto all = g.Enumerate();
  std::vector<RationalVector> orbit;
  for (const auto& w : all) orbit.push_back(g.Act(w, MakeVector({1, 2, 3})));
  for (const auto& subset : oracle::NonemptySubsets(all.size())) {
    std::vector<RationalVector> points;
    std::vector<oracle::Point> planar;
    for (size_t i : subset) {
      points.push_back(orbit[i]);
      planar.push_back({orbit[i][0] - orbit[i][1], orbit[i][1] - orbit[i][2]});
    }
    EXPECT_EQ(HullEdges(points), oracle::PlanarHullEdges(planar));
  }
}

TEST(EdgeTest, ParallelTest) {
  EXPECT_TRUE(IsParallel(MakeVector({1, -1, 0}), MakeVector({-3, 3, 0})));
  EXPECT_FALSE(IsParallel(MakeVector({1, -1, 0}), MakeVector({1, 0, -1})));
  EXPECT_FALSE(IsParallel(MakeVector({0, 0}), MakeVector({1, 0})));
}

}  // namespace
}  // namespace weylret
