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

#include <stdexcept>
#include <string>
#include <utility>

#include "weylret/errors.h"

namespace weylret {
namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Row-reduces `m` in place to reduced row echelon form and returns the pivot
// column of each nonzero row.
std::vector<size_t> ReduceRowEchelon(RationalMatrix& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const size_t slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!IsDigits(num) || !IsDigits(den)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator in rational: '" + std::string(text) +
                     "'");
  }
  Rational value(negative ? mpz_class(-n) : n, d);
  value.canonicalize();
  return value;
}

std::string FormatRational(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RationalVector MakeVector(std::initializer_list<long> values) {
  RationalVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Rational Dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("dot product of vectors of different length");
  }
  Rational sum = 0;
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

RationalVector Subtract(std::span<const Rational> a,
                        std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("difference of vectors of different length");
  }
  RationalVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool IsZero(std::span<const Rational> v) {
  for (const Rational& x : v) {
    if (x != 0) return false;
  }
  return true;
}

RationalMatrix::RationalMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(const std::vector<RationalVector>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const RationalVector& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::Identity(size_t n) {
  RationalMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::Row(size_t r) const {
  return RationalVector(data_.begin() + r * cols_,
                        data_.begin() + (r + 1) * cols_);
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product shapes");
  RationalMatrix out(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

Rational Minor(const RationalMatrix& x, std::span<const size_t> rows,
               std::span<const size_t> cols) {
  if (rows.size() != cols.size()) {
    throw DimensionMismatch("minor needs as many rows as columns");
  }
  const size_t m = rows.size();
  if (m == 0) return Rational(1);
  std::vector<Rational> a(m * m);
  for (size_t i = 0; i < m; ++i) {
    if (rows[i] >= x.rows()) throw std::out_of_range("minor row index");
    for (size_t j = 0; j < m; ++j) {
      if (cols[j] >= x.cols()) throw std::out_of_range("minor column index");
      a[i * m + j] = x(rows[i], cols[j]);
    }
  }
  auto at = [&](size_t i, size_t j) -> Rational& { return a[i * m + j]; };

  int sign = 1;
  Rational previous = 1;
  for (size_t k = 0; k + 1 < m; ++k) {
    if (at(k, k) == 0) {
      size_t swap_row = k + 1;
      while (swap_row < m && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == m) return Rational(0);
      for (size_t j = 0; j < m; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < m; ++i) {
      for (size_t j = k + 1; j < m; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / previous;
      }
      at(i, k) = 0;
    }
    previous = at(k, k);
  }
  return sign * at(m - 1, m - 1);
}

Rational Determinant(const RationalMatrix& x) {
  if (!x.square()) throw DimensionMismatch("determinant of non-square matrix");
  std::vector<size_t> idx(x.rows());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return Minor(x, idx, idx);
}

size_t Rank(const RationalMatrix& x) {
  RationalMatrix copy = x;
  return ReduceRowEchelon(copy).size();
}

std::vector<RationalVector> NullspaceBasis(const RationalMatrix& x) {
  RationalMatrix r = x;
  const std::vector<size_t> pivots = ReduceRowEchelon(r);
  std::vector<bool> is_pivot(r.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (size_t free = 0; free < r.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(r.cols());
    v[free] = 1;
    for (size_t row = 0; row < pivots.size(); ++row) {
      v[pivots[row]] = -r(row, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

RationalMatrix Stack(const std::vector<RationalVector>& vectors,
                     size_t dimension) {
  RationalMatrix m(vectors.size(), dimension);
  for (size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != dimension) {
      throw DimensionMismatch("vector of length " +
                              std::to_string(vectors[r].size()) +
                              " in a span of dimension " +
                              std::to_string(dimension));
    }
    for (size_t c = 0; c < dimension; ++c) m(r, c) = vectors[r][c];
  }
  return m;
}

}  // namespace

std::vector<RationalVector> CanonicalSpanBasis(
    const std::vector<RationalVector>& vectors, size_t dimension) {
  RationalMatrix m = Stack(vectors, dimension);
  const std::vector<size_t> pivots = ReduceRowEchelon(m);
  std::vector<RationalVector> basis;
  for (size_t r = 0; r < pivots.size(); ++r) {
    RationalVector v = m.Row(r);
    mpz_class lcm = 1;
    for (const Rational& x : v) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    mpz_class gcd = 0;
    for (Rational& x : v) {
      x *= lcm;
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_num_mpz_t());
    }
    for (Rational& x : v) x /= gcd;
    basis.push_back(std::move(v));
  }
  return basis;
}

bool SameSpan(const std::vector<RationalVector>& a,
              const std::vector<RationalVector>& b, size_t dimension) {
  std::vector<RationalVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const size_t rank_a = Rank(Stack(a, dimension));
  return rank_a == Rank(Stack(b, dimension)) &&
         rank_a == Rank(Stack(both, dimension));
}

}  // namespace weylret
