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

// Exact rational scalars, vectors and matrices.

#ifndef WEYLRET_RATIONAL_H_
#define WEYLRET_RATIONAL_H_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weylret {

// Arbitrary precision rational, always kept in canonical form.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "p", "p/q" or "-p/q". Throws ParseError on malformed input or a zero
// denominator.
Rational ParseRational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string FormatRational(const Rational& value);

RationalVector MakeVector(std::initializer_list<long> values);

Rational Dot(std::span<const Rational> a, std::span<const Rational> b);
RationalVector Subtract(std::span<const Rational> a,
                        std::span<const Rational> b);
bool IsZero(std::span<const Rational> v);

// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(size_t rows, size_t cols);
  // Throws DimensionMismatch on ragged input.
  explicit RationalMatrix(const std::vector<RationalVector>& rows);

  static RationalMatrix Identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const {
    return data_[r * cols_ + c];
  }

  RationalVector Row(size_t r) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  bool operator==(const RationalMatrix& other) const = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Determinant of the submatrix picked out by 0-based `rows` and `cols`, via
// Bareiss elimination with row pivoting. Throws DimensionMismatch when the
// index lists differ in length and std::out_of_range on a bad index.
Rational Minor(const RationalMatrix& x, std::span<const size_t> rows,
               std::span<const size_t> cols);

Rational Determinant(const RationalMatrix& x);

size_t Rank(const RationalMatrix& x);

// Basis of {v : x v = 0}, in reduced echelon form (free variables set to
// unit vectors).
std::vector<RationalVector> NullspaceBasis(const RationalMatrix& x);

// Canonical basis of the span of `vectors` (all of length `dimension`): the
// nonzero rows of the reduced echelon form, each rescaled to a primitive
// integer vector with positive leading entry.
std::vector<RationalVector> CanonicalSpanBasis(
    const std::vector<RationalVector>& vectors, size_t dimension);

// Equality of the spans of two vector families in Q^dimension.
bool SameSpan(const std::vector<RationalVector>& a,
              const std::vector<RationalVector>& b, size_t dimension);

}  // namespace weylret

#endif  // WEYLRET_RATIONAL_H_
