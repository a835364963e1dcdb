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

#include "oracles.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <stdexcept>

namespace weylret::oracle {

Window Compose(const Window& v, const Window& w) {
  Window out(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    const int image = v[std::abs(w[i]) - 1];
    out[i] = w[i] > 0 ? image : -image;
  }
  return out;
}

Window Inverse(const Window& w) {
  Window out(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    const int target = std::abs(w[i]) - 1;
    out[target] = w[i] > 0 ? static_cast<int>(i) + 1
                           : -(static_cast<int>(i) + 1);
  }
  return out;
}

Window CayleyModel::RightSimple(const Window& w, int k) const {
  Window out = w;
  if (k < n_ - 1) {
    std::swap(out[k], out[k + 1]);
  } else if (kind_ == Kind::kBC) {
    out[n_ - 1] = -out[n_ - 1];
  } else {
    const int a = out[n_ - 2];
    out[n_ - 2] = -out[n_ - 1];
    out[n_ - 1] = -a;
  }
  return out;
}

CayleyModel::CayleyModel(Kind kind, int n)
    : kind_(kind), n_(n), num_simple_(kind == Kind::kA ? n - 1 : n) {
  Window id(n);
  for (int i = 0; i < n; ++i) id[i] = i + 1;
  std::deque<Window> queue = {id};
  length_[id] = 0;
  while (!queue.empty()) {
    const Window w = queue.front();
    queue.pop_front();
    index_[w] = static_cast<int>(elements_.size());
    elements_.push_back(w);
    for (int k = 0; k < num_simple_; ++k) {
      Window next = RightSimple(w, k);
      if (!length_.contains(next)) {
        length_[next] = length_[w] + 1;
        queue.push_back(std::move(next));
      }
    }
  }

  // Reflections: conjugates of simple reflections.
  std::map<Window, bool> seen;
  for (const Window& w : elements_) {
    for (int k = 0; k < num_simple_; ++k) {
      Window t = Compose(RightSimple(w, k), Inverse(w));
      if (!seen[t]) {
        seen[t] = true;
        reflections_.push_back(t);
      }
    }
  }

  const size_t size = elements_.size();
  below_.assign(size, std::vector<bool>(size, false));
  // Elements come out of the search in order of length.
  for (size_t i = 0; i < size; ++i) {
    below_[i][i] = true;
    for (const Window& t : reflections_) {
      const Window lower = Compose(elements_[i], t);
      if (length_.at(lower) >= length_.at(elements_[i])) continue;
      const std::vector<bool>& sub = below_[index_.at(lower)];
      for (size_t j = 0; j < size; ++j) {
        if (sub[j]) below_[i][j] = true;
      }
    }
  }
}

bool CayleyModel::BruhatLeq(const Window& v, const Window& w) const {
  return below_[index_.at(w)][index_.at(v)];
}

std::vector<std::pair<size_t, size_t>> PlanarHullEdges(
    const std::vector<Point>& points) {
  std::vector<std::pair<size_t, size_t>> edges;
  const size_t size = points.size();
  if (size == 2) return {{0, 1}};
  for (size_t i = 0; i < size; ++i) {
    for (size_t j = i + 1; j < size; ++j) {
      const mpq_class dx = points[j][0] - points[i][0];
      const mpq_class dy = points[j][1] - points[i][1];
      int positive = 0, negative = 0;
      bool blocked = false;
      for (size_t k = 0; k < size; ++k) {
        if (k == i || k == j) continue;
        const mpq_class ex = points[k][0] - points[i][0];
        const mpq_class ey = points[k][1] - points[i][1];
        const mpq_class cross = dx * ey - dy * ex;
        if (cross > 0) {
          ++positive;
        } else if (cross < 0) {
          ++negative;
        } else {
          const mpq_class along = dx * ex + dy * ey;
          if (along >= 0 && along <= dx * dx + dy * dy) blocked = true;
        }
      }
      if (!blocked && (positive == 0 || negative == 0)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::vector<std::vector<size_t>> NonemptySubsets(size_t size) {
  std::vector<std::vector<size_t>> out;
  for (uint64_t mask = 1; mask < (uint64_t{1} << size); ++mask) {
    std::vector<size_t> subset;
    for (size_t i = 0; i < size; ++i) {
      if (mask >> i & 1) subset.push_back(i);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace weylret::oracle
