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

#include "weylret/weyl.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "weylret/errors.h"
#include "weylret/geometry.h"

namespace weylret {
namespace {

using Segment = std::span<const int>;

Segment FactorSegment(const GroupDescriptor& d, const SignedPermutation& w,
                      size_t j) {
  return Segment(w.window().data() + d.offset(j),
                 static_cast<size_t>(d.factor(j).rank));
}

bool ValidSegment(const Factor& f, Segment w) {
  const int n = f.rank;
  std::vector<bool> seen(n + 1, false);
  int bars = 0;
  for (int v : w) {
    const int a = std::abs(v);
    if (v == 0 || a > n || seen[a]) return false;
    seen[a] = true;
    if (v < 0) ++bars;
  }
  if (f.type == WeylType::kA && bars > 0) return false;
  if (f.type == WeylType::kD && bars % 2 != 0) return false;
  return true;
}

// Inversions with respect to the J-order.
int JInversions(Segment w, int n) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = i + 1; j < w.size(); ++j) {
      if (JLess(w[j], w[i], n)) ++inv;
    }
  }
  return inv;
}

int SegmentLength(const Factor& f, Segment w) {
  const int n = f.rank;
  int length = JInversions(w, n);
  if (f.type == WeylType::kA) return length;
  for (int v : w) {
    if (v >= 0) continue;
    length += f.type == WeylType::kBC ? n + 1 + v : n + v;
  }
  return length;
}

// Type A Bruhat criterion on permutations of 1..m: for every prefix and every
// threshold t, v has no more entries >= t than w.
bool TableauLeq(Segment v, Segment w) {
  const size_t m = v.size();
  std::vector<int> count_v(m + 2, 0);
  std::vector<int> count_w(m + 2, 0);
  for (size_t k = 0; k + 1 < m; ++k) {
    ++count_v[v[k]];
    ++count_w[w[k]];
    int above_v = 0;
    int above_w = 0;
    for (size_t t = m; t >= 1; --t) {
      above_v += count_v[t];
      above_w += count_w[t];
      if (above_v > above_w) return false;
    }
  }
  return true;
}

// The signed permutation as a permutation of the 2n letters of the J-order.
std::vector<int> ExtendedKeys(Segment w, int n) {
  std::vector<int> keys(2 * n);
  for (int i = 0; i < n; ++i) {
    keys[i] = JRank(w[i], n);
    keys[2 * n - 1 - i] = JRank(-w[i], n);
  }
  return keys;
}

std::vector<int> ApplySimple(const Factor& f, Segment w, int k) {
  std::vector<int> out(w.begin(), w.end());
  const int n = f.rank;
  if (k < n - 1) {
    std::swap(out[k], out[k + 1]);
  } else if (f.type == WeylType::kBC) {
    out[n - 1] = -out[n - 1];
  } else {
    out[n - 2] = -w[n - 1];
    out[n - 1] = -w[n - 2];
  }
  return out;
}

int SimpleCount(const Factor& f) {
  return f.type == WeylType::kA ? f.rank - 1 : f.rank;
}

// Generic Bruhat test from the lifting property: for a right descent s of w,
// v <= w iff (vs < v ? vs <= ws : v <= ws).
bool DescentBruhatLeq(const Factor& f, std::vector<int> v, std::vector<int> w) {
  int lv = SegmentLength(f, v);
  int lw = SegmentLength(f, w);
  while (lw > 0) {
    if (lv > lw) return false;
    for (int k = 0; k < SimpleCount(f); ++k) {
      std::vector<int> ws = ApplySimple(f, w, k);
      const int lws = SegmentLength(f, ws);
      if (lws >= lw) continue;
      std::vector<int> vs = ApplySimple(f, v, k);
      const int lvs = SegmentLength(f, vs);
      if (lvs < lv) {
        v = std::move(vs);
        lv = lvs;
      }
      w = std::move(ws);
      lw = lws;
      break;
    }
  }
  return lv == 0;
}

bool SegmentBruhatLeq(const Factor& f, Segment v, Segment w) {
  switch (f.type) {
    case WeylType::kA:
      return TableauLeq(v, w);
    case WeylType::kBC: {
      const std::vector<int> kv = ExtendedKeys(v, f.rank);
      const std::vector<int> kw = ExtendedKeys(w, f.rank);
      return TableauLeq(kv, kw);
    }
    case WeylType::kD:
      return DescentBruhatLeq(f, std::vector<int>(v.begin(), v.end()),
                              std::vector<int>(w.begin(), w.end()));
  }
  return false;
}

void EnumerateSegment(const Factor& f, std::vector<int>& prefix,
                      std::vector<bool>& used, int bars,
                      std::vector<std::vector<int>>& out) {
  const int n = f.rank;
  if (static_cast<int>(prefix.size()) == n) {
    if (f.type != WeylType::kD || bars % 2 == 0) out.push_back(prefix);
    return;
  }
  const int letters = f.type == WeylType::kA ? n : 2 * n;
  for (int r = 1; r <= letters; ++r) {
    const int value = r <= n ? r : r - 2 * n - 1;
    const int a = std::abs(value);
    if (used[a]) continue;
    used[a] = true;
    prefix.push_back(value);
    EnumerateSegment(f, prefix, used, bars + (value < 0 ? 1 : 0), out);
    prefix.pop_back();
    used[a] = false;
  }
}

}  // namespace

const char* WeylTypeName(WeylType type) {
  switch (type) {
    case WeylType::kA:
      return "A";
    case WeylType::kBC:
      return "BC";
    case WeylType::kD:
      return "D";
  }
  return "?";
}

GroupDescriptor::GroupDescriptor(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw PreconditionError("group descriptor needs at least one factor");
  }
  for (const Factor& f : factors_) {
    const int min_rank = f.type == WeylType::kA ? 1 : 2;
    if (f.rank < min_rank) {
      throw PreconditionError(std::string("rank too small for type ") +
                              WeylTypeName(f.type));
    }
    offsets_.push_back(total_rank_);
    total_rank_ += f.rank;
  }
}

uint64_t GroupDescriptor::Order() const {
  uint64_t order = 1;
  for (const Factor& f : factors_) {
    for (int i = 2; i <= f.rank; ++i) order *= static_cast<uint64_t>(i);
    if (f.type == WeylType::kBC) order <<= f.rank;
    if (f.type == WeylType::kD) order <<= (f.rank - 1);
  }
  return order;
}

std::string GroupDescriptor::Label() const {
  std::string label;
  for (size_t j = 0; j < factors_.size(); ++j) {
    if (j > 0) label += "x";
    const Factor& f = factors_[j];
    label += WeylTypeName(f.type);
    label += std::to_string(f.type == WeylType::kA ? f.rank - 1 : f.rank);
  }
  return label;
}

std::string SignedPermutation::ToString() const {
  std::ostringstream out;
  for (size_t i = 0; i < window_.size(); ++i) {
    if (i > 0) out << ',';
    out << window_[i];
  }
  return out.str();
}

WeylGroup::WeylGroup(GroupDescriptor descriptor)
    : descriptor_(std::move(descriptor)) {}

SignedPermutation WeylGroup::Element(std::vector<int> window) const {
  SignedPermutation w(std::move(window));
  if (!Contains(w)) {
    throw InvalidElement("window [" + w.ToString() + "] is not an element of " +
                         descriptor_.Label());
  }
  return w;
}

bool WeylGroup::Contains(const SignedPermutation& w) const {
  if (w.size() != total_rank()) return false;
  for (size_t j = 0; j < descriptor_.num_factors(); ++j) {
    if (!ValidSegment(descriptor_.factor(j), FactorSegment(descriptor_, w, j))) {
      return false;
    }
  }
  return true;
}

void WeylGroup::CheckMember(const SignedPermutation& w) const {
  if (!Contains(w)) {
    throw DescriptorMismatch("window [" + w.ToString() +
                             "] does not belong to " + descriptor_.Label());
  }
}

void WeylGroup::CheckSameGroup(const SignedPermutation& v,
                               const SignedPermutation& w) const {
  if (v.size() != total_rank() || w.size() != total_rank()) {
    throw DescriptorMismatch("window length does not match " +
                             descriptor_.Label());
  }
}

SignedPermutation WeylGroup::Identity() const {
  std::vector<int> window;
  window.reserve(total_rank());
  for (const Factor& f : descriptor_.factors()) {
    for (int i = 1; i <= f.rank; ++i) window.push_back(i);
  }
  return SignedPermutation(std::move(window));
}

SignedPermutation WeylGroup::LongestElement() const {
  std::vector<int> window;
  for (const Factor& f : descriptor_.factors()) {
    const int n = f.rank;
    for (int i = 1; i <= n; ++i) {
      switch (f.type) {
        case WeylType::kA:
          window.push_back(n + 1 - i);
          break;
        case WeylType::kBC:
          window.push_back(-i);
          break;
        case WeylType::kD:
          window.push_back(i == n && n % 2 == 1 ? i : -i);
          break;
      }
    }
  }
  return SignedPermutation(std::move(window));
}

SignedPermutation WeylGroup::Compose(const SignedPermutation& v,
                                     const SignedPermutation& w) const {
  CheckSameGroup(v, w);
  std::vector<int> out(total_rank());
  for (size_t j = 0; j < descriptor_.num_factors(); ++j) {
    const int off = descriptor_.offset(j);
    for (int i = 0; i < descriptor_.factor(j).rank; ++i) {
      const int wi = w[off + i];
      const int vv = v[off + std::abs(wi) - 1];
      out[off + i] = wi < 0 ? -vv : vv;
    }
  }
  return SignedPermutation(std::move(out));
}

SignedPermutation WeylGroup::Inverse(const SignedPermutation& w) const {
  CheckSameGroup(w, w);
  std::vector<int> out(total_rank());
  for (size_t j = 0; j < descriptor_.num_factors(); ++j) {
    const int off = descriptor_.offset(j);
    for (int i = 0; i < descriptor_.factor(j).rank; ++i) {
      const int wi = w[off + i];
      out[off + std::abs(wi) - 1] = wi < 0 ? -(i + 1) : i + 1;
    }
  }
  return SignedPermutation(std::move(out));
}

int WeylGroup::Length(const SignedPermutation& w) const {
  CheckSameGroup(w, w);
  int length = 0;
  for (size_t j = 0; j < descriptor_.num_factors(); ++j) {
    length += SegmentLength(descriptor_.factor(j),
                            FactorSegment(descriptor_, w, j));
  }
  return length;
}

bool WeylGroup::BruhatLeq(const SignedPermutation& v,
                          const SignedPermutation& w) const {
  CheckSameGroup(v, w);
  for (size_t j = 0; j < descriptor_.num_factors(); ++j) {
    if (!SegmentBruhatLeq(descriptor_.factor(j),
                          FactorSegment(descriptor_, v, j),
                          FactorSegment(descriptor_, w, j))) {
      return false;
    }
  }
  return true;
}

int WeylGroup::Distance(const SignedPermutation& v,
                        const SignedPermutation& w) const {
  return Length(Compose(Inverse(v), w));
}

int WeylGroup::UOrderPosition(int i, const SignedPermutation& u,
                              size_t factor) const {
  CheckSameGroup(u, u);
  if (factor >= descriptor_.num_factors()) {
    throw InvalidElement("factor index out of range");
  }
  const Factor& f = descriptor_.factor(factor);
  const int n = f.rank;
  if (i == 0 || std::abs(i) > n || (f.type == WeylType::kA && i < 0)) {
    throw InvalidElement("index " + std::to_string(i) +
                         " is not a letter of factor " +
                         std::to_string(factor));
  }
  const Segment seg = FactorSegment(descriptor_, u, factor);
  for (int p = 0; p < n; ++p) {
    if (seg[p] == i) return p + 1;
    if (seg[p] == -i) return 2 * n - p;
  }
  throw InvalidElement("u is not a signed permutation");
}

bool WeylGroup::UOrderLeq(int i, int j, const SignedPermutation& u,
                          size_t factor) const {
  return UOrderPosition(i, u, factor) <= UOrderPosition(j, u, factor);
}

int WeylGroup::NumSimpleReflections() const {
  int count = 0;
  for (const Factor& f : descriptor_.factors()) count += SimpleCount(f);
  return count;
}

SignedPermutation WeylGroup::SimpleReflection(int k) const {
  return RightMultiplySimple(Identity(), k);
}

SignedPermutation WeylGroup::RightMultiplySimple(const SignedPermutation& w,
                                                 int k) const {
  CheckSameGroup(w, w);
  for (size_t j = 0; j < descriptor_.num_factors(); ++j) {
    const Factor& f = descriptor_.factor(j);
    if (k < SimpleCount(f)) {
      std::vector<int> out = w.window();
      const std::vector<int> seg =
          ApplySimple(f, FactorSegment(descriptor_, w, j), k);
      std::copy(seg.begin(), seg.end(), out.begin() + descriptor_.offset(j));
      return SignedPermutation(std::move(out));
    }
    k -= SimpleCount(f);
  }
  throw InvalidElement("simple reflection index out of range");
}

std::vector<SignedPermutation> WeylGroup::Enumerate(uint64_t cap) const {
  std::vector<SignedPermutation> all;
  all.reserve(Order() <= cap ? Order() : 0);
  ForEach([&](const SignedPermutation& w) { all.push_back(w); }, cap);
  return all;
}

void WeylGroup::ForEach(
    const std::function<void(const SignedPermutation&)>& visit,
    uint64_t cap) const {
  if (Order() > cap) {
    throw CapExceeded(descriptor_.Label() + " has " + std::to_string(Order()) +
                      " elements, above the enumeration cap of " +
                      std::to_string(cap));
  }
  std::vector<std::vector<std::vector<int>>> segments;
  for (const Factor& f : descriptor_.factors()) {
    std::vector<std::vector<int>> list;
    std::vector<int> prefix;
    std::vector<bool> used(f.rank + 1, false);
    EnumerateSegment(f, prefix, used, 0, list);
    segments.push_back(std::move(list));
  }
  // Odometer over factors, the first factor most significant.
  std::vector<size_t> index(segments.size(), 0);
  std::vector<int> window(total_rank());
  while (true) {
    for (size_t j = 0; j < segments.size(); ++j) {
      const std::vector<int>& seg = segments[j][index[j]];
      std::copy(seg.begin(), seg.end(), window.begin() + descriptor_.offset(j));
    }
    visit(SignedPermutation(window));
    size_t j = segments.size();
    while (j > 0) {
      --j;
      if (++index[j] < segments[j].size()) break;
      index[j] = 0;
      if (j == 0) return;
    }
  }
}

RationalVector WeylGroup::Act(const SignedPermutation& u,
                              std::span<const Rational> v) const {
  CheckSameGroup(u, u);
  if (static_cast<int>(v.size()) != total_rank()) {
    throw DimensionMismatch("vector dimension does not match the group");
  }
  RationalVector out(v.size());
  for (size_t j = 0; j < descriptor_.num_factors(); ++j) {
    const int off = descriptor_.offset(j);
    for (int i = 0; i < descriptor_.factor(j).rank; ++i) {
      const int ui = u[off + i];
      out[off + std::abs(ui) - 1] = ui < 0 ? -v[off + i] : v[off + i];
    }
  }
  return out;
}

std::vector<RationalVector> WeylGroup::SimpleRoots() const {
  std::vector<RationalVector> roots;
  const size_t dim = total_rank();
  for (size_t j = 0; j < descriptor_.num_factors(); ++j) {
    const Factor& f = descriptor_.factor(j);
    const int off = descriptor_.offset(j);
    const int n = f.rank;
    for (int k = 0; k + 1 < n; ++k) {
      RationalVector r(dim);
      r[off + k] = 1;
      r[off + k + 1] = -1;
      roots.push_back(std::move(r));
    }
    if (f.type == WeylType::kBC) {
      RationalVector r(dim);
      r[off + n - 1] = 2;
      roots.push_back(std::move(r));
    } else if (f.type == WeylType::kD) {
      RationalVector r(dim);
      r[off + n - 2] = 1;
      r[off + n - 1] = 1;
      roots.push_back(std::move(r));
    }
  }
  return roots;
}

std::vector<RationalVector> WeylGroup::PositiveRoots() const {
  std::vector<RationalVector> roots;
  const size_t dim = total_rank();
  for (size_t j = 0; j < descriptor_.num_factors(); ++j) {
    const Factor& f = descriptor_.factor(j);
    const int off = descriptor_.offset(j);
    const int n = f.rank;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        RationalVector r(dim);
        r[off + a] = 1;
        r[off + b] = -1;
        roots.push_back(r);
        if (f.type != WeylType::kA) {
          r[off + b] = 1;
          roots.push_back(std::move(r));
        }
      }
      if (f.type == WeylType::kBC) {
        RationalVector r(dim);
        r[off + a] = 2;
        roots.push_back(std::move(r));
      }
    }
  }
  return roots;
}

bool WeylGroup::IsParallelToRoot(std::span<const Rational> v) const {
  for (const RationalVector& r : PositiveRoots()) {
    if (IsParallel(v, r)) return true;
  }
  return false;
}

std::vector<RationalVector> WeylGroup::AmbientEquations() const {
  std::vector<RationalVector> eqs;
  for (size_t j = 0; j < descriptor_.num_factors(); ++j) {
    const Factor& f = descriptor_.factor(j);
    if (f.type != WeylType::kA) continue;
    RationalVector e(total_rank());
    for (int i = 0; i < f.rank; ++i) e[descriptor_.offset(j) + i] = 1;
    eqs.push_back(std::move(e));
  }
  return eqs;
}

bool WeylGroup::InAmbientSpace(std::span<const Rational> v) const {
  if (static_cast<int>(v.size()) != total_rank()) return false;
  for (const RationalVector& e : AmbientEquations()) {
    if (Dot(e, v) != 0) return false;
  }
  return true;
}

std::vector<RationalVector> WeylGroup::ChamberNormals(
    const SignedPermutation& u) const {
  std::vector<RationalVector> normals;
  for (const RationalVector& alpha : SimpleRoots()) {
    normals.push_back(Act(u, alpha));
  }
  return normals;
}

SignedPermutation WeylGroup::ChamberOf(std::span<const Rational> lambda) const {
  if (static_cast<int>(lambda.size()) != total_rank()) {
    throw DimensionMismatch("vector dimension does not match the group");
  }
  if (!InAmbientSpace(lambda)) {
    throw PreconditionError("vector is not in the ambient space (type A "
                            "coordinates must sum to zero)");
  }
  std::vector<int> window(total_rank());
  for (size_t j = 0; j < descriptor_.num_factors(); ++j) {
    const Factor& f = descriptor_.factor(j);
    const int off = descriptor_.offset(j);
    const int n = f.rank;
    // Signed letters carrying the value at coordinate |letter|, sorted
    // ascending. Types BC and D use the representative with value <= 0.
    std::vector<std::pair<Rational, int>> letters;
    for (int i = 0; i < n; ++i) {
      const Rational& a = lambda[off + i];
      if (f.type == WeylType::kA || a < 0) {
        letters.emplace_back(a, i + 1);
      } else {
        letters.emplace_back(-a, -(i + 1));
      }
    }
    std::sort(letters.begin(), letters.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (int i = 0; i + 1 < n; ++i) {
      if (letters[i].first == letters[i + 1].first) {
        throw BoundaryPoint("vector lies on a chamber wall");
      }
    }
    if (f.type == WeylType::kBC && letters[n - 1].first == 0) {
      throw BoundaryPoint("vector lies on a chamber wall");
    }
    if (f.type == WeylType::kD) {
      // The last letter may carry either sign; parity decides.
      int bars = 0;
      for (int i = 0; i + 1 < n; ++i) {
        if (letters[i].second < 0) ++bars;
      }
      const int last = std::abs(letters[n - 1].second);
      letters[n - 1].second = bars % 2 == 0 ? last : -last;
    }
    for (int i = 0; i < n; ++i) window[off + i] = letters[i].second;
  }
  return SignedPermutation(std::move(window));
}

bool WeylGroup::IsReflection(const SignedPermutation& t) const {
  CheckMember(t);
  const size_t dim = total_rank();
  RationalMatrix m(dim, dim);
  RationalVector basis(dim);
  for (size_t c = 0; c < dim; ++c) {
    basis.assign(dim, Rational(0));
    basis[c] = 1;
    const RationalVector image = Act(t, basis);
    for (size_t r = 0; r < dim; ++r) m(r, c) = image[r] - basis[r];
  }
  return Rank(m) == 1;
}

}  // namespace weylret
