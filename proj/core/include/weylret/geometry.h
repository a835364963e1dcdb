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

// Polyhedral cones given by halfspaces and an exact LP test for polytope
// edges.

#ifndef WEYLRET_GEOMETRY_H_
#define WEYLRET_GEOMETRY_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "weylret/rational.h"

namespace weylret {

enum class Membership { kInterior, kBoundary, kOutside };

const char* MembershipName(Membership m);

// The cone {x in V : <n, x> <= 0 for every normal n}, where V is the
// subspace cut out by `ambient_equations` (empty for all of Q^dim).
class HalfspaceCone {
 public:
  // Throws DimensionMismatch if a vector has the wrong length and
  // PreconditionError if a normal is zero.
  HalfspaceCone(size_t dimension, std::vector<RationalVector> normals,
                std::vector<RationalVector> ambient_equations = {});

  size_t dimension() const { return dimension_; }
  const std::vector<RationalVector>& normals() const { return normals_; }
  const std::vector<RationalVector>& ambient_equations() const {
    return ambient_equations_;
  }

 private:
  size_t dimension_;
  std::vector<RationalVector> normals_;
  std::vector<RationalVector> ambient_equations_;
};

// Interior when every inequality is strict, Boundary when all hold and at
// least one is tight, Outside otherwise (including points off the ambient
// subspace).
Membership ConeMembership(const HalfspaceCone& cone,
                          std::span<const Rational> point);

// Basis of the lineality space C ∩ (-C), i.e. the common kernel of the
// normals and the ambient equations. Empty for a pointed cone.
std::vector<RationalVector> Lineality(const HalfspaceCone& cone);

// True iff there is a rational c with <c,p> = <c,q> >= <c,r> + 1 for every r
// in `others`; that is, iff [p, q] is an edge of conv({p, q} ∪ others) when
// all points are in convex position. Decided by exact two-phase simplex with
// Bland's rule.
bool LpEdgeFeasible(std::span<const Rational> p, std::span<const Rational> q,
                    const std::vector<RationalVector>& others);

// All index pairs (i < j) spanning an edge of the hull of `points`, which are
// assumed to be distinct and in convex position.
std::vector<std::pair<size_t, size_t>> HullEdges(
    const std::vector<RationalVector>& points);

// True iff both vectors are nonzero and span a line.
bool IsParallel(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace weylret

#endif  // WEYLRET_GEOMETRY_H_
