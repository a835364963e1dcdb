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

#ifndef WEYLRET_FAN_H_
#define WEYLRET_FAN_H_

#include <map>
#include <span>
#include <vector>

#include "weylret/geometry.h"
#include "weylret/rational.h"
#include "weylret/retraction.h"
#include "weylret/weyl.h"

namespace weylret {

struct ConeQueryResult {
  SignedPermutation y;
  Membership grade = Membership::kInterior;
};

// Maximal cones C_Y(y), each stored as the list of chambers C(u) with
// R(u) = y, plus the common lineality space.
class OrbitFan {
 public:
  // Throws PreconditionError unless the table covers the whole group and
  // fixes every image, InconsistentLineality when the union cones disagree on
  // their lineality.
  static OrbitFan Build(const RetractionTable& table);

  const WeylGroup& group() const { return group_; }
  // y -> sorted chamber labels.
  const std::map<SignedPermutation, std::vector<SignedPermutation>>& cones()
      const {
    return cones_;
  }
  // Canonical basis of F_Y.
  const std::vector<RationalVector>& lineality() const { return lineality_; }

  // Normals u(alpha_k) of the walls between C(u) in C_Y(y) and chambers
  // outside it; C_Y(y) = {x : <n, x> <= 0} in the ambient space when convex.
  const std::vector<RationalVector>& BoundaryNormals(
      const SignedPermutation& y) const;
  // Canonical basis of the lineality space of C_Y(y).
  std::vector<RationalVector> ConeLineality(const SignedPermutation& y) const;

  // Chambers of C_Y(y) form one component of the wall-adjacency graph.
  bool IsConnected(const SignedPermutation& y) const;

  // y -> whether C_Y(y) contains no line.
  std::map<SignedPermutation, bool> StrongConvexityReport() const;

  const SignedPermutation& ImageOf(const SignedPermutation& chamber) const;

  // The cone containing lambda. Throws DimensionMismatch for a wrong-length
  // vector, PreconditionError off the ambient space and AmbiguousBoundary
  // when the closed chambers through lambda have different images.
  ConeQueryResult Query(std::span<const Rational> lambda) const;

 private:
  explicit OrbitFan(WeylGroup group) : group_(std::move(group)) {}

  WeylGroup group_;
  std::map<SignedPermutation, SignedPermutation> image_;
  std::map<SignedPermutation, std::vector<SignedPermutation>> cones_;
  std::map<SignedPermutation, std::vector<RationalVector>> boundary_;
  std::vector<RationalVector> lineality_;
};

}  // namespace weylret

#endif  // WEYLRET_FAN_H_
