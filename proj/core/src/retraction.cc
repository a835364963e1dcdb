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

#include "weylret/retraction.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "weylret/errors.h"
#include "weylret/parallel.h"

namespace weylret {
namespace {

std::vector<std::vector<int>> MinimalWindows(
    const std::vector<SignedPermutation>& v) {
  std::vector<std::vector<int>> out;
  for (const SignedPermutation& w : v) out.push_back(w.window());
  return out;
}

// Indices i of `twisted` that are minimal (or maximal) in Bruhat order.
std::vector<size_t> ExtremalIndices(const WeylGroup& g,
                                    const std::vector<SignedPermutation>& twisted,
                                    const std::vector<int>& lengths,
                                    bool minimal) {
  std::vector<size_t> extremal;
  for (size_t i = 0; i < twisted.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < twisted.size() && !dominated; ++j) {
      if (minimal) {
        dominated = lengths[j] < lengths[i] &&
                    g.BruhatLeq(twisted[j], twisted[i]);
      } else {
        dominated = lengths[j] > lengths[i] &&
                    g.BruhatLeq(twisted[i], twisted[j]);
      }
    }
    if (!dominated) extremal.push_back(i);
  }
  return extremal;
}

std::vector<SignedPermutation> Twisted(const SubsetM& m,
                                       const SignedPermutation& u) {
  const WeylGroup& g = m.group();
  const SignedPermutation u_inv = g.Inverse(u);
  std::vector<SignedPermutation> twisted;
  twisted.reserve(m.size());
  for (const SignedPermutation& w : m.elements()) {
    twisted.push_back(g.Compose(u_inv, w));
  }
  return twisted;
}

std::vector<SignedPermutation> TwistedExtremal(const SubsetM& m,
                                               const SignedPermutation& u,
                                               bool minimal) {
  const WeylGroup& g = m.group();
  const std::vector<SignedPermutation> twisted = Twisted(m, u);
  // A unique extremal element is the unique one of extreme length and is
  // comparable to everything; try that first.
  std::vector<int> lengths(twisted.size());
  for (size_t i = 0; i < twisted.size(); ++i) lengths[i] = g.Length(twisted[i]);
  const auto extreme = minimal
                           ? std::min_element(lengths.begin(), lengths.end())
                           : std::max_element(lengths.begin(), lengths.end());
  if (std::count(lengths.begin(), lengths.end(), *extreme) == 1) {
    const size_t c = extreme - lengths.begin();
    bool comparable = true;
    for (size_t i = 0; i < twisted.size() && comparable; ++i) {
      comparable = minimal ? g.BruhatLeq(twisted[c], twisted[i])
                           : g.BruhatLeq(twisted[i], twisted[c]);
    }
    if (comparable) return {m.elements()[c]};
  }
  std::vector<SignedPermutation> out;
  for (size_t i : ExtremalIndices(g, twisted, lengths, minimal)) {
    out.push_back(m.elements()[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SubsetM::SubsetM(WeylGroup group, std::vector<SignedPermutation> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  if (elements_.empty()) throw PreconditionError("subset M must be nonempty");
  for (const SignedPermutation& w : elements_) {
    if (!group_.Contains(w)) {
      throw InvalidElement("window [" + w.ToString() + "] is not in " +
                           group_.descriptor().Label());
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());

  const GroupDescriptor& d = group_.descriptor();
  tries_.resize(d.num_factors());
  uint64_t product_size = 1;
  for (size_t j = 0; j < d.num_factors(); ++j) {
    std::vector<TrieNode>& trie = tries_[j];
    trie.emplace_back();
    std::set<std::vector<int>> projections;
    const int off = d.offset(j);
    const int n = d.factor(j).rank;
    for (const SignedPermutation& w : elements_) {
      std::vector<int> seg(w.window().begin() + off,
                           w.window().begin() + off + n);
      int node = kRoot;
      for (int value : seg) {
        auto it = trie[node].children.find(value);
        if (it == trie[node].children.end()) {
          trie.emplace_back();
          const int child = static_cast<int>(trie.size()) - 1;
          trie[node].children.emplace(value, child);
          node = child;
        } else {
          node = it->second;
        }
      }
      projections.insert(std::move(seg));
    }
    product_size *= projections.size();
  }
  is_product_ = product_size == elements_.size();
}

bool SubsetM::Contains(const SignedPermutation& w) const {
  return std::binary_search(elements_.begin(), elements_.end(), w);
}

int SubsetM::Child(size_t factor, int node, int value) const {
  const auto& children = tries_[factor][node].children;
  auto it = children.find(value);
  return it == children.end() ? -1 : it->second;
}

std::vector<std::vector<int>> SubsetM::Prefixes(size_t factor, int k) const {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  // Depth-first walk down to depth k.
  auto walk = [&](auto&& self, int node) -> void {
    if (static_cast<int>(prefix.size()) == k) {
      out.push_back(prefix);
      return;
    }
    for (const auto& [value, child] : tries_[factor][node].children) {
      prefix.push_back(value);
      self(self, child);
      prefix.pop_back();
    }
  };
  walk(walk, kRoot);
  return out;
}

AlgebraicRetraction AlgebraicRetractWithIndices(const SubsetM& m,
                                                const SignedPermutation& u) {
  const WeylGroup& g = m.group();
  if (!g.Contains(u)) {
    throw DescriptorMismatch("window [" + u.ToString() + "] is not in " +
                             g.descriptor().Label());
  }
  if (!m.IsProduct()) {
    throw NotAProduct(
        "the algebraic retraction needs M to be a product of factor subsets");
  }
  const GroupDescriptor& d = g.descriptor();
  AlgebraicRetraction result;
  std::vector<int> image(d.total_rank());
  result.indices.resize(d.total_rank());
  for (size_t j = 0; j < d.num_factors(); ++j) {
    const Factor& f = d.factor(j);
    const int n = f.rank;
    const int off = d.offset(j);
    const int letters = f.type == WeylType::kA ? n : 2 * n;
    std::vector<bool> used(letters + 1, false);
    int node = SubsetM::kRoot;
    for (int k = 0; k < n; ++k) {
      bool found = false;
      // Letters in J-order: 1..n, then n̄..1̄.
      for (int r = 1; r <= letters && !found; ++r) {
        if (used[r]) continue;
        const int index = r <= n ? r : r - 2 * n - 1;
        const int value = index > 0 ? u[off + index - 1] : -u[off - index - 1];
        const int child = m.Child(j, node, value);
        if (child < 0) continue;
        used[r] = true;
        node = child;
        image[off + k] = value;
        result.indices[off + k] = index;
        found = true;
      }
      if (!found) {
        throw std::logic_error("prefix trie has a dead end");
      }
    }
  }
  result.image = SignedPermutation(std::move(image));
  return result;
}

SignedPermutation AlgebraicRetract(const SubsetM& m,
                                   const SignedPermutation& u) {
  return AlgebraicRetractWithIndices(m, u).image;
}

std::vector<SignedPermutation> TwistedMinimal(const SubsetM& m,
                                              const SignedPermutation& u) {
  return TwistedExtremal(m, u, /*minimal=*/true);
}

std::vector<SignedPermutation> TwistedMaximal(const SubsetM& m,
                                              const SignedPermutation& u) {
  return TwistedExtremal(m, u, /*minimal=*/false);
}

SignedPermutation MatroidRetract(const SubsetM& m, const SignedPermutation& u,
                                 MatroidStrategy strategy) {
  const WeylGroup& g = m.group();
  if (!g.Contains(u)) {
    throw DescriptorMismatch("window [" + u.ToString() + "] is not in " +
                             g.descriptor().Label());
  }
  if (strategy == MatroidStrategy::kGreedyFirst && m.IsProduct()) {
    const SignedPermutation candidate = AlgebraicRetract(m, u);
    const SignedPermutation u_inv = g.Inverse(u);
    const SignedPermutation low = g.Compose(u_inv, candidate);
    bool below_all = true;
    for (const SignedPermutation& w : m.elements()) {
      if (!g.BruhatLeq(low, g.Compose(u_inv, w))) {
        below_all = false;
        break;
      }
    }
    if (below_all) return candidate;
  }
  std::vector<SignedPermutation> minimal = TwistedMinimal(m, u);
  if (minimal.size() != 1) {
    throw NotAMatroidAt(u.window(), MinimalWindows(minimal),
                        "no unique <=^u-minimal element for u = [" +
                            u.ToString() + "] (" +
                            std::to_string(minimal.size()) + " minimal)");
  }
  return minimal.front();
}

ClosestSet FindClosest(const SubsetM& m, const SignedPermutation& u) {
  const WeylGroup& g = m.group();
  if (!g.Contains(u)) {
    throw DescriptorMismatch("window [" + u.ToString() + "] is not in " +
                             g.descriptor().Label());
  }
  ClosestSet best;
  best.distance = -1;
  for (const SignedPermutation& w : m.elements()) {
    const int dist = g.Distance(u, w);
    if (best.distance < 0 || dist < best.distance) {
      best.distance = dist;
      best.argmins.clear();
    }
    if (dist == best.distance) best.argmins.push_back(w);
  }
  return best;
}

const char* ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kAlgebraic:
      return "algebraic";
    case Provenance::kMatroid:
      return "matroid";
    case Provenance::kGeometricLimit:
      return "geometric-limit";
  }
  return "?";
}

RetractionTable::RetractionTable(GroupDescriptor descriptor,
                                 Provenance provenance,
                                 std::vector<SignedPermutation> domain,
                                 std::vector<SignedPermutation> images)
    : descriptor_(std::move(descriptor)),
      provenance_(provenance),
      domain_(std::move(domain)),
      images_(std::move(images)) {
  if (domain_.size() != images_.size()) {
    throw DimensionMismatch("retraction table domain and image sizes differ");
  }
  for (size_t i = 0; i < domain_.size(); ++i) index_.emplace(domain_[i], i);
}

const SignedPermutation& RetractionTable::At(const SignedPermutation& u) const {
  auto it = index_.find(u);
  if (it == index_.end()) {
    throw std::out_of_range("[" + u.ToString() + "] is not in the table");
  }
  return images_[it->second];
}

bool RetractionTable::SameMapping(const RetractionTable& other) const {
  if (!(descriptor_ == other.descriptor_) || size() != other.size()) {
    return false;
  }
  for (size_t i = 0; i < domain_.size(); ++i) {
    auto it = other.index_.find(domain_[i]);
    if (it == other.index_.end() || other.images_[it->second] != images_[i]) {
      return false;
    }
  }
  return true;
}

std::vector<SignedPermutation> RetractionTable::Image() const {
  std::vector<SignedPermutation> out = images_;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RetractionTable BuildRetractionTable(const SubsetM& m, RetractionMethod method,
                                     MatroidStrategy strategy, uint64_t cap) {
  const WeylGroup& g = m.group();
  std::vector<SignedPermutation> domain = g.Enumerate(cap);
  std::vector<SignedPermutation> images(domain.size());
  ParallelFor(domain.size(), [&](size_t i) {
    images[i] = method == RetractionMethod::kAlgebraic
                    ? AlgebraicRetract(m, domain[i])
                    : MatroidRetract(m, domain[i], strategy);
  });
  return RetractionTable(g.descriptor(),
                         method == RetractionMethod::kAlgebraic
                             ? Provenance::kAlgebraic
                             : Provenance::kMatroid,
                         std::move(domain), std::move(images));
}

}  // namespace weylret
