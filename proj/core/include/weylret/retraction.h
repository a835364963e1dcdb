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

// Retractions of a Weyl group onto a subset M: the greedy algebraic
// retraction, the matroid retraction (unique <=^u-minimal element) and a
// brute-force nearest-element search under the word metric.

#ifndef WEYLRET_RETRACTION_H_
#define WEYLRET_RETRACTION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "weylret/weyl.h"

namespace weylret {

// A nonempty subset of W together with, per factor, a prefix trie over the
// windows of the factor projections M_j. The nodes at depth k of trie j are
// exactly J_k(M_j).
class SubsetM {
 public:
  // Throws InvalidElement for a window outside the group and
  // PreconditionError for an empty list. Duplicates are dropped.
  SubsetM(WeylGroup group, std::vector<SignedPermutation> elements);

  const WeylGroup& group() const { return group_; }
  // Sorted by raw window.
  const std::vector<SignedPermutation>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }
  bool Contains(const SignedPermutation& w) const;

  // True iff M is the Cartesian product of its factor projections (always
  // true for a single factor).
  bool IsProduct() const { return is_product_; }

  // Trie node reached from `node` by the letter `value` in factor j, or -1.
  int Child(size_t factor, int node, int value) const;
  static constexpr int kRoot = 0;

  // J_k(M_j): all length-k prefixes of windows of the factor projection.
  std::vector<std::vector<int>> Prefixes(size_t factor, int k) const;

 private:
  struct TrieNode {
    std::map<int, int> children;
  };

  WeylGroup group_;
  std::vector<SignedPermutation> elements_;
  std::vector<std::vector<TrieNode>> tries_;
  bool is_product_ = true;
};

struct AlgebraicRetraction {
  SignedPermutation image;
  // The chosen letters i_1, ..., i_n of [n] ∪ [n̄] (ī encoded as -i), factor
  // windows concatenated.
  std::vector<int> indices;
};

// R^a_M(u) = u(i_1) ... u(i_n), where i_k is the J-order-least unused letter
// whose value extends the current prefix inside J_k(M). Applied factor by
// factor. Throws NotAProduct if M is not a product of factor subsets.
SignedPermutation AlgebraicRetract(const SubsetM& m, const SignedPermutation& u);
AlgebraicRetraction AlgebraicRetractWithIndices(const SubsetM& m,
                                                const SignedPermutation& u);

enum class MatroidStrategy {
  // Compute all Bruhat-minimal elements of u^-1 M.
  kMinimalSet,
  // Try R^a(u) first and confirm it lies below everything; fall back to
  // kMinimalSet when it does not.
  kGreedyFirst,
};

// The unique v in M with u^-1 v <= u^-1 w for all w in M. Throws
// NotAMatroidAt when the minimal set of u^-1 M is not a singleton.
SignedPermutation MatroidRetract(
    const SubsetM& m, const SignedPermutation& u,
    MatroidStrategy strategy = MatroidStrategy::kMinimalSet);

// Elements v of M with u^-1 v Bruhat-minimal (or maximal) in u^-1 M.
std::vector<SignedPermutation> TwistedMinimal(const SubsetM& m,
                                              const SignedPermutation& u);
std::vector<SignedPermutation> TwistedMaximal(const SubsetM& m,
                                              const SignedPermutation& u);

struct ClosestSet {
  int distance = 0;
  // Every w in M at that distance, sorted.
  std::vector<SignedPermutation> argmins;
};

ClosestSet FindClosest(const SubsetM& m, const SignedPermutation& u);

enum class Provenance { kAlgebraic, kMatroid, kGeometricLimit };

const char* ProvenanceName(Provenance p);

// A map u -> R(u) over the whole group, in enumeration order.
class RetractionTable {
 public:
  RetractionTable(GroupDescriptor descriptor, Provenance provenance,
                  std::vector<SignedPermutation> domain,
                  std::vector<SignedPermutation> images);

  const GroupDescriptor& descriptor() const { return descriptor_; }
  Provenance provenance() const { return provenance_; }
  size_t size() const { return domain_.size(); }
  const std::vector<SignedPermutation>& domain() const { return domain_; }
  const std::vector<SignedPermutation>& images() const { return images_; }

  // Throws std::out_of_range for an element not in the table.
  const SignedPermutation& At(const SignedPermutation& u) const;

  // Same mapping, whatever the provenance.
  bool SameMapping(const RetractionTable& other) const;

  // Sorted distinct images.
  std::vector<SignedPermutation> Image() const;

 private:
  GroupDescriptor descriptor_;
  Provenance provenance_;
  std::vector<SignedPermutation> domain_;
  std::vector<SignedPermutation> images_;
  std::map<SignedPermutation, size_t> index_;
};

enum class RetractionMethod { kAlgebraic, kMatroid };

// Tabulates the retraction over every u in W (in parallel). Propagates
// NotAMatroidAt and CapExceeded.
RetractionTable BuildRetractionTable(
    const SubsetM& m, RetractionMethod method,
    MatroidStrategy strategy = MatroidStrategy::kMinimalSet,
    uint64_t cap = 1'000'000);

}  // namespace weylret

#endif  // WEYLRET_RETRACTION_H_
