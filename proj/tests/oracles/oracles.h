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

// Brute-force reference models used only by the tests. Nothing here calls
// into the library under test.

#ifndef WEYLRET_TESTS_ORACLES_ORACLES_H_
#define WEYLRET_TESTS_ORACLES_ORACLES_H_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace weylret::oracle {

enum class Kind { kA, kBC, kD };

using Window = std::vector<int>;

// (v w)(i) = v(w(i)) with v(-k) = -v(k).
Window Compose(const Window& v, const Window& w);
Window Inverse(const Window& w);

// The group generated by the simple reflections acting on positions on the
// right, explored breadth-first from the identity.
class CayleyModel {
 public:
  CayleyModel(Kind kind, int n);

  int n() const { return n_; }
  const std::vector<Window>& elements() const { return elements_; }
  // Word length from the breadth-first search.
  int Length(const Window& w) const { return length_.at(w); }
  const std::vector<Window>& reflections() const { return reflections_; }
  // Transitive closure of u < u t for reflections t with l(u) < l(u t).
  bool BruhatLeq(const Window& v, const Window& w) const;
  Window RightSimple(const Window& w, int k) const;
  int num_simple() const { return num_simple_; }

 private:
  Kind kind_;
  int n_;
  int num_simple_;
  std::vector<Window> elements_;
  std::map<Window, int> index_;
  std::map<Window, int> length_;
  std::vector<Window> reflections_;
  // below_[i][j]: elements_[j] <= elements_[i].
  std::vector<std::vector<bool>> below_;
};

using Point = std::vector<mpq_class>;

// Edges of the convex hull of distinct points in the plane: pairs (i, j),
// i < j, with every other point weakly on one side of the line through them
// and none on the closed segment.
std::vector<std::pair<size_t, size_t>> PlanarHullEdges(
    const std::vector<Point>& points);

// Every subset of {0, ..., size-1} with at least one element, as index lists.
std::vector<std::vector<size_t>> NonemptySubsets(size_t size);

}  // namespace weylret::oracle

#endif  // WEYLRET_TESTS_ORACLES_ORACLES_H_
