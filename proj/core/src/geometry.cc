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

#include <optional>

#include "weylret/errors.h"

namespace weylret {
namespace {

// Phase-one simplex on {A x = b, x >= 0} with b >= 0. Returns true iff the
// system is feasible.
class FeasibilityTableau {
 public:
  FeasibilityTableau(const RationalMatrix& a, const RationalVector& b)
      : rows_(a.rows()),
        structural_(a.cols()),
        cols_(a.cols() + a.rows()),
        t_(a.rows() + 1, a.cols() + a.rows() + 1),
        basis_(a.rows()) {
    // One artificial column per row; the last row holds reduced costs of the
    // phase-one objective (sum of artificials) and minus its value.
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < structural_; ++j) t_(i, j) = a(i, j);
      t_(i, structural_ + i) = 1;
      t_(i, cols_) = b[i];
      basis_[i] = structural_ + i;
    }
    for (size_t j = 0; j < structural_; ++j) {
      Rational sum = 0;
      for (size_t i = 0; i < rows_; ++i) sum += a(i, j);
      t_(rows_, j) = -sum;
    }
    Rational total = 0;
    for (size_t i = 0; i < rows_; ++i) total += b[i];
    t_(rows_, cols_) = -total;
  }

  bool Solve() {
    while (true) {
      std::optional<size_t> entering;
      for (size_t j = 0; j < cols_; ++j) {
        if (t_(rows_, j) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) break;
      std::optional<size_t> leaving;
      Rational best_ratio;
      for (size_t i = 0; i < rows_; ++i) {
        if (t_(i, *entering) <= 0) continue;
        Rational ratio = t_(i, cols_) / t_(i, *entering);
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      // The phase-one objective is bounded below by zero.
      if (!leaving) break;
      Pivot(*leaving, *entering);
    }
    return t_(rows_, cols_) == 0;
  }

 private:
  void Pivot(size_t row, size_t col) {
    const Rational inv = 1 / t_(row, col);
    for (size_t j = 0; j <= cols_; ++j) t_(row, j) *= inv;
    for (size_t i = 0; i <= rows_; ++i) {
      if (i == row || t_(i, col) == 0) continue;
      const Rational factor = t_(i, col);
      for (size_t j = 0; j <= cols_; ++j) t_(i, j) -= factor * t_(row, j);
    }
    basis_[row] = col;
  }

  size_t rows_;
  size_t structural_;
  size_t cols_;
  RationalMatrix t_;
  std::vector<size_t> basis_;
};

}  // namespace

const char* MembershipName(Membership m) {
  switch (m) {
    case Membership::kInterior:
      return "interior";
    case Membership::kBoundary:
      return "boundary";
    case Membership::kOutside:
      return "outside";
  }
  return "?";
}

HalfspaceCone::HalfspaceCone(size_t dimension,
                             std::vector<RationalVector> normals,
                             std::vector<RationalVector> ambient_equations)
    : dimension_(dimension),
      normals_(std::move(normals)),
      ambient_equations_(std::move(ambient_equations)) {
  for (const RationalVector& n : normals_) {
    if (n.size() != dimension_) throw DimensionMismatch("cone normal length");
    if (IsZero(n)) throw PreconditionError("cone normal must be nonzero");
  }
  for (const RationalVector& e : ambient_equations_) {
    if (e.size() != dimension_) {
      throw DimensionMismatch("ambient equation length");
    }
  }
}

Membership ConeMembership(const HalfspaceCone& cone,
                          std::span<const Rational> point) {
  if (point.size() != cone.dimension()) {
    throw DimensionMismatch("point dimension does not match cone");
  }
  for (const RationalVector& e : cone.ambient_equations()) {
    if (Dot(e, point) != 0) return Membership::kOutside;
  }
  bool tight = false;
  for (const RationalVector& n : cone.normals()) {
    const Rational value = Dot(n, point);
    if (value > 0) return Membership::kOutside;
    if (value == 0) tight = true;
  }
  return tight ? Membership::kBoundary : Membership::kInterior;
}

std::vector<RationalVector> Lineality(const HalfspaceCone& cone) {
  std::vector<RationalVector> rows = cone.normals();
  rows.insert(rows.end(), cone.ambient_equations().begin(),
              cone.ambient_equations().end());
  if (rows.empty()) {
    RationalMatrix id = RationalMatrix::Identity(cone.dimension());
    std::vector<RationalVector> basis;
    for (size_t i = 0; i < cone.dimension(); ++i) basis.push_back(id.Row(i));
    return basis;
  }
  return NullspaceBasis(RationalMatrix(rows));
}

bool LpEdgeFeasible(std::span<const Rational> p, std::span<const Rational> q,
                    const std::vector<RationalVector>& others) {
  const size_t dim = p.size();
  if (q.size() != dim) throw DimensionMismatch("edge endpoints differ in size");
  for (const RationalVector& r : others) {
    if (r.size() != dim) throw DimensionMismatch("point dimension mismatch");
  }
  // Unknowns: c+ (dim), c- (dim), one surplus per other point.
  const size_t rows = 1 + others.size();
  const size_t cols = 2 * dim + others.size();
  RationalMatrix a(rows, cols);
  RationalVector b(rows);
  for (size_t k = 0; k < dim; ++k) {
    const Rational diff = p[k] - q[k];
    a(0, k) = diff;
    a(0, dim + k) = -diff;
  }
  for (size_t r = 0; r < others.size(); ++r) {
    for (size_t k = 0; k < dim; ++k) {
      const Rational diff = p[k] - others[r][k];
      a(r + 1, k) = diff;
      a(r + 1, dim + k) = -diff;
    }
    a(r + 1, 2 * dim + r) = -1;
    b[r + 1] = 1;
  }
  return FeasibilityTableau(a, b).Solve();
}

std::vector<std::pair<size_t, size_t>> HullEdges(
    const std::vector<RationalVector>& points) {
  std::vector<std::pair<size_t, size_t>> edges;
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      std::vector<RationalVector> others;
      others.reserve(points.size() - 2);
      for (size_t k = 0; k < points.size(); ++k) {
        if (k != i && k != j) others.push_back(points[k]);
      }
      if (LpEdgeFeasible(points[i], points[j], others)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

bool IsParallel(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("parallel test sizes");
  if (IsZero(a) || IsZero(b)) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

}  // namespace weylret
