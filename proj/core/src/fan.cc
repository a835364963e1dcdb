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

#include "weylret/fan.h"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "weylret/errors.h"

namespace weylret {

OrbitFan OrbitFan::Build(const RetractionTable& table) {
  OrbitFan fan{WeylGroup(table.descriptor())};
  const WeylGroup& g = fan.group_;
  if (table.size() != g.Order()) {
    throw PreconditionError("table has " + std::to_string(table.size()) +
                            " entries, the group has " +
                            std::to_string(g.Order()));
  }
  for (size_t i = 0; i < table.size(); ++i) {
    const SignedPermutation& u = table.domain()[i];
    const SignedPermutation& y = table.images()[i];
    if (!g.Contains(u) || !g.Contains(y)) {
      throw DescriptorMismatch("table entry outside " + g.descriptor().Label());
    }
    fan.image_.emplace(u, y);
    fan.cones_[y].push_back(u);
  }
  if (fan.image_.size() != g.Order()) {
    throw PreconditionError("table repeats a chamber");
  }
  for (auto& [y, chambers] : fan.cones_) {
    if (fan.image_.at(y) != y) {
      throw PreconditionError("table is not a retraction: [" + y.ToString() +
                              "] is an image but not fixed");
    }
    std::sort(chambers.begin(), chambers.end());
  }

  const std::vector<RationalVector> simple = g.SimpleRoots();
  const size_t dim = g.total_rank();
  for (const auto& [y, chambers] : fan.cones_) {
    std::vector<RationalVector>& normals = fan.boundary_[y];
    for (const SignedPermutation& u : chambers) {
      for (int k = 0; k < g.NumSimpleReflections(); ++k) {
        if (fan.image_.at(g.RightMultiplySimple(u, k)) != y) {
          normals.push_back(g.Act(u, simple[k]));
        }
      }
    }
  }

  bool first = true;
  for (const auto& [y, chambers] : fan.cones_) {
    std::vector<RationalVector> lin = fan.ConeLineality(y);
    if (first) {
      fan.lineality_ = std::move(lin);
      first = false;
    } else if (!SameSpan(fan.lineality_, lin, dim)) {
      throw InconsistentLineality("cone [" + y.ToString() +
                                  "] has a different lineality space");
    }
  }
  return fan;
}

const std::vector<RationalVector>& OrbitFan::BoundaryNormals(
    const SignedPermutation& y) const {
  auto it = boundary_.find(y);
  if (it == boundary_.end()) {
    throw std::out_of_range("[" + y.ToString() + "] is not a cone label");
  }
  return it->second;
}

std::vector<RationalVector> OrbitFan::ConeLineality(
    const SignedPermutation& y) const {
  const size_t dim = group_.total_rank();
  HalfspaceCone cone(dim, BoundaryNormals(y), group_.AmbientEquations());
  return CanonicalSpanBasis(Lineality(cone), dim);
}

bool OrbitFan::IsConnected(const SignedPermutation& y) const {
  auto it = cones_.find(y);
  if (it == cones_.end()) {
    throw std::out_of_range("[" + y.ToString() + "] is not a cone label");
  }
  const std::vector<SignedPermutation>& chambers = it->second;
  std::set<SignedPermutation> seen = {chambers.front()};
  std::queue<SignedPermutation> frontier;
  frontier.push(chambers.front());
  while (!frontier.empty()) {
    const SignedPermutation u = frontier.front();
    frontier.pop();
    for (int k = 0; k < group_.NumSimpleReflections(); ++k) {
      SignedPermutation v = group_.RightMultiplySimple(u, k);
      if (image_.at(v) == y && seen.insert(v).second) frontier.push(v);
    }
  }
  return seen.size() == chambers.size();
}

std::map<SignedPermutation, bool> OrbitFan::StrongConvexityReport() const {
  std::map<SignedPermutation, bool> report;
  for (const auto& [y, chambers] : cones_) {
    report[y] = ConeLineality(y).empty();
  }
  return report;
}

const SignedPermutation& OrbitFan::ImageOf(
    const SignedPermutation& chamber) const {
  auto it = image_.find(chamber);
  if (it == image_.end()) {
    throw std::out_of_range("[" + chamber.ToString() + "] is not a chamber");
  }
  return it->second;
}

ConeQueryResult OrbitFan::Query(std::span<const Rational> lambda) const {
  if (static_cast<int>(lambda.size()) != group_.total_rank()) {
    throw DimensionMismatch("query point has length " +
                            std::to_string(lambda.size()) + ", expected " +
                            std::to_string(group_.total_rank()));
  }
  if (!group_.InAmbientSpace(lambda)) {
    throw PreconditionError("query point is off the ambient space");
  }
  std::set<SignedPermutation> images;
  for (const auto& [u, y] : image_) {
    bool inside = true;
    for (const RationalVector& normal : group_.ChamberNormals(u)) {
      if (Dot(normal, lambda) > 0) {
        inside = false;
        break;
      }
    }
    if (inside) images.insert(y);
  }
  if (images.size() != 1) {
    std::string labels;
    for (const SignedPermutation& y : images) {
      labels += (labels.empty() ? "[" : ", [") + y.ToString() + "]";
    }
    throw AmbiguousBoundary("point lies on a wall between cones " + labels);
  }
  return ConeQueryResult{*images.begin(), Membership::kInterior};
}

}  // namespace weylret
