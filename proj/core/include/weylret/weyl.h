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

// Classical Weyl groups (types A, BC, D and products of them) acting as
// signed permutations.
//
// An element is stored as its window w(1) ... w(n): a barred value k̄ is the
// negative integer -k. For a product group the windows of the factors are
// concatenated and every factor uses local values 1..n_j.
//
// Values in [n] ∪ [n̄] are compared in the order
//
//   1 < 2 < ... < n < n̄ < ... < 2̄ < 1̄
//
// which is NOT the integer order on the encoding; use JLess / JRank.
// Simple roots follow e_1-e_2, ..., e_{n-1}-e_n, then 2e_n (BC) or
// e_{n-1}+e_n (D), so the last simple reflection of BC flips the sign of the
// last window entry.

#ifndef WEYLRET_WEYL_H_
#define WEYLRET_WEYL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weylret/rational.h"

namespace weylret {

enum class WeylType { kA, kBC, kD };

const char* WeylTypeName(WeylType type);

struct Factor {
  WeylType type;
  // Window length n: S_n for type A, the hyperoctahedral group or its even
  // subgroup for BC and D.
  int rank;

  bool operator==(const Factor&) const = default;
};

class GroupDescriptor {
 public:
  // Throws PreconditionError for an empty factor list, rank < 1 in type A or
  // rank < 2 in types BC and D.
  explicit GroupDescriptor(std::vector<Factor> factors);

  static GroupDescriptor Single(WeylType type, int rank) {
    return GroupDescriptor({Factor{type, rank}});
  }

  const std::vector<Factor>& factors() const { return factors_; }
  size_t num_factors() const { return factors_.size(); }
  const Factor& factor(size_t j) const { return factors_[j]; }
  // Window position where factor j starts.
  int offset(size_t j) const { return offsets_[j]; }
  // Total window length (= ambient dimension).
  int total_rank() const { return total_rank_; }
  // Product of factor orders: n!, 2^n n!, 2^(n-1) n!.
  uint64_t Order() const;
  // Lie-style label such as "A3xBC2" (A3 is S_4, BC2 has window length 2).
  std::string Label() const;

  bool operator==(const GroupDescriptor&) const = default;

 private:
  std::vector<Factor> factors_;
  std::vector<int> offsets_;
  int total_rank_ = 0;
};

class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window)
      : window_(std::move(window)) {}

  const std::vector<int>& window() const { return window_; }
  int size() const { return static_cast<int>(window_.size()); }
  // 0-based access to w(pos + 1).
  int operator[](int pos) const { return window_[pos]; }

  // Comma-separated window, e.g. "1,-4,2,3".
  std::string ToString() const;

  // Raw window order; only meant for containers, not a group order.
  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> window_;
};

// Position of `value` (nonzero, |value| <= n) in the order 1 < ... < n < n̄ <
// ... < 1̄, starting from 1.
inline int JRank(int value, int n) { return value > 0 ? value : 2 * n + 1 + value; }
inline bool JLess(int a, int b, int n) { return JRank(a, n) < JRank(b, n); }

class WeylGroup {
 public:
  explicit WeylGroup(GroupDescriptor descriptor);

  const GroupDescriptor& descriptor() const { return descriptor_; }
  int total_rank() const { return descriptor_.total_rank(); }
  uint64_t Order() const { return descriptor_.Order(); }

  // Validates and wraps a window. Throws InvalidElement.
  SignedPermutation Element(std::vector<int> window) const;
  bool Contains(const SignedPermutation& w) const;

  SignedPermutation Identity() const;
  SignedPermutation LongestElement() const;

  // (v w)(i) = v(w(i)) with v(-k) = -v(k). Throws DescriptorMismatch.
  SignedPermutation Compose(const SignedPermutation& v,
                            const SignedPermutation& w) const;
  SignedPermutation Inverse(const SignedPermutation& w) const;

  // Coxeter length, summed over factors.
  int Length(const SignedPermutation& w) const;

  // Bruhat order, factor by factor.
  bool BruhatLeq(const SignedPermutation& v, const SignedPermutation& w) const;

  // d(v, w) = l(v^-1 w).
  int Distance(const SignedPermutation& v, const SignedPermutation& w) const;

  // i <=^u j: i precedes j in u(1) ... u(n) u(n̄) ... u(1̄) restricted to the
  // given factor. Indices are local to that factor. Throws InvalidElement for
  // an index outside [n] ∪ [n̄] (or [n] in type A).
  bool UOrderLeq(int i, int j, const SignedPermutation& u,
                 size_t factor = 0) const;
  // 1-based position of value i in the extended window of u.
  int UOrderPosition(int i, const SignedPermutation& u,
                     size_t factor = 0) const;

  // Number of simple reflections (sum of factor ranks, A contributes n-1).
  int NumSimpleReflections() const;
  SignedPermutation SimpleReflection(int k) const;
  // w * s_k without building s_k.
  SignedPermutation RightMultiplySimple(const SignedPermutation& w,
                                        int k) const;

  // All elements, each once, in lexicographic order of windows under the
  // J-order. Throws CapExceeded if the group is larger than `cap`.
  std::vector<SignedPermutation> Enumerate(uint64_t cap = 1'000'000) const;
  void ForEach(const std::function<void(const SignedPermutation&)>& visit,
               uint64_t cap = 1'000'000) const;

  // Ambient coordinates: Q^n per factor, concatenated. Type A factors live
  // in the sum-zero hyperplane.
  // e_i -> sign(u(i)) e_|u(i)|.
  RationalVector Act(const SignedPermutation& u,
                     std::span<const Rational> v) const;
  std::vector<RationalVector> SimpleRoots() const;
  std::vector<RationalVector> PositiveRoots() const;
  bool IsParallelToRoot(std::span<const Rational> v) const;
  // Linear equations cutting out the ambient space (sum-zero per type A
  // factor).
  std::vector<RationalVector> AmbientEquations() const;
  bool InAmbientSpace(std::span<const Rational> v) const;

  // Normals u(alpha_k) of the closed chamber C(u) = {x : <u(alpha_k), x> <= 0}.
  std::vector<RationalVector> ChamberNormals(const SignedPermutation& u) const;

  // The u with `lambda` in the interior of C(u). Throws BoundaryPoint on a
  // wall and PreconditionError off the ambient space.
  SignedPermutation ChamberOf(std::span<const Rational> lambda) const;

  // True iff t acts on the ambient space as a reflection.
  bool IsReflection(const SignedPermutation& t) const;

 private:
  void CheckSameGroup(const SignedPermutation& v,
                      const SignedPermutation& w) const;
  void CheckMember(const SignedPermutation& w) const;

  GroupDescriptor descriptor_;
};

}  // namespace weylret

#endif  // WEYLRET_WEYL_H_
