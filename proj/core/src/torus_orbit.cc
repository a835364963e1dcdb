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

#include "weylret/torus_orbit.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "weylret/errors.h"
#include "weylret/matroid.h"
#include "weylret/parallel.h"

namespace weylret {
namespace {

// Calls visit on every ascending d-subset of {0, ..., n-1}.
template <typename Visit>
void ForEachCombination(int n, int d, Visit&& visit) {
  std::vector<size_t> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = d - 1;
    while (i >= 0 && idx[i] == static_cast<size_t>(n - d + i)) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
}

WeylGroup SymmetricGroup(int n) {
  return WeylGroup(GroupDescriptor::Single(WeylType::kA, n));
}

}  // namespace

bool PluckerSupport::Contains(const std::vector<int>& sorted_tuple) const {
  if (sorted_tuple.empty() || static_cast<int>(sorted_tuple.size()) > n) {
    return false;
  }
  const auto& level = Level(static_cast<int>(sorted_tuple.size()));
  return std::binary_search(level.begin(), level.end(), sorted_tuple);
}

PluckerSupport ComputePluckerSupport(const RationalMatrix& x) {
  if (!x.square() || x.rows() == 0) {
    throw DimensionMismatch("torus-orbit input must be a nonempty square matrix");
  }
  const int n = static_cast<int>(x.rows());
  if (Determinant(x) == 0) throw SingularMatrix("det x = 0");
  PluckerSupport support;
  support.n = n;
  support.levels.resize(n);
  for (int d = 1; d <= n; ++d) {
    std::vector<size_t> cols(d);
    for (int c = 0; c < d; ++c) cols[c] = c;
    ForEachCombination(n, d, [&](const std::vector<size_t>& rows) {
      if (Minor(x, rows, cols) != 0) {
        std::vector<int> tuple;
        for (size_t r : rows) tuple.push_back(static_cast<int>(r) + 1);
        support.levels[d - 1].push_back(std::move(tuple));
      }
    });
  }
  return support;
}

SubsetM OrbitFixedPoints::AsSubset() const {
  return SubsetM(SymmetricGroup(support.n), points);
}

std::vector<SignedPermutation> FixedPoints(const PluckerSupport& support) {
  std::vector<SignedPermutation> points;
  SymmetricGroup(support.n).ForEach([&](const SignedPermutation& w) {
    std::vector<int> prefix;
    for (int d = 1; d <= support.n; ++d) {
      prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), w[d - 1]),
                    w[d - 1]);
      if (!support.Contains(prefix)) return;
    }
    points.push_back(w);
  });
  std::sort(points.begin(), points.end());
  return points;
}

OrbitFixedPoints FixedPoints(const RationalMatrix& x) {
  OrbitFixedPoints out;
  out.support = ComputePluckerSupport(x);
  out.points = FixedPoints(out.support);
  return out;
}

SignedPermutation LimitPoint(const PluckerSupport& support,
                             std::span<const int64_t> lambda) {
  const int n = support.n;
  if (static_cast<int>(lambda.size()) != n) {
    throw DimensionMismatch("lambda has length " +
                            std::to_string(lambda.size()) + ", expected " +
                            std::to_string(n));
  }
  std::vector<int> window;
  std::vector<int> previous;
  for (int d = 1; d <= n; ++d) {
    const std::vector<int>* best = nullptr;
    int64_t best_weight = 0;
    bool tie = false;
    for (const std::vector<int>& tuple : support.Level(d)) {
      int64_t weight = 0;
      for (int i : tuple) weight += lambda[i - 1];
      if (best == nullptr || weight < best_weight) {
        best = &tuple;
        best_weight = weight;
        tie = false;
      } else if (weight == best_weight) {
        tie = true;
      }
    }
    if (tie) {
      throw TieDetected("two Plücker tuples of size " + std::to_string(d) +
                        " share the least weight");
    }
    std::vector<int> added;
    std::set_difference(best->begin(), best->end(), previous.begin(),
                        previous.end(), std::back_inserter(added));
    if (added.size() != 1 ||
        !std::includes(best->begin(), best->end(), previous.begin(),
                       previous.end())) {
      throw std::logic_error("limit tuples are not nested");
    }
    window.push_back(added.front());
    previous = *best;
  }
  return SignedPermutation(std::move(window));
}

SignedPermutation LimitPoint(const RationalMatrix& x,
                             std::span<const int64_t> lambda) {
  return LimitPoint(ComputePluckerSupport(x), lambda);
}

std::vector<int64_t> ChamberWeight(const SignedPermutation& u) {
  const int n = u.size();
  if (n < 1 || n > 30) {
    throw PreconditionError("chamber weights need 1 <= n <= 30");
  }
  const int64_t shift = (int64_t{1} << (n + 1)) - 2;
  std::vector<int64_t> lambda(n);
  for (int j = 1; j <= n; ++j) {
    lambda[u[j - 1] - 1] = n * (int64_t{1} << j) - shift;
  }
  return lambda;
}

RetractionTable GeometricTable(const PluckerSupport& support) {
  const WeylGroup g = SymmetricGroup(support.n);
  std::vector<SignedPermutation> domain = g.Enumerate();
  std::vector<SignedPermutation> images(domain.size());
  ParallelFor(domain.size(), [&](size_t i) {
    images[i] = LimitPoint(support, ChamberWeight(domain[i]));
  });
  return RetractionTable(g.descriptor(), Provenance::kGeometricLimit,
                         std::move(domain), std::move(images));
}

RetractionTable GeometricTable(const RationalMatrix& x) {
  return GeometricTable(ComputePluckerSupport(x));
}

RationalMatrix SampleRationalPoint(int n, uint64_t seed,
                                   const SampleProfile& profile) {
  if (n < 1) throw PreconditionError("matrix size must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(-9, 9);
  std::uniform_int_distribution<int> denominator(1, 4);
  std::uniform_int_distribution<int> small(1, 3);
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<SignedPermutation> target;
  if (profile.kind == SampleKind::kInterval) {
    const WeylGroup g = SymmetricGroup(n);
    target = BruhatInterval(g, g.Element(profile.interval_lo.window()),
                            g.Element(profile.interval_hi.window()))
                 .elements();
  }

  for (int attempt = 0; attempt < profile.max_retries; ++attempt) {
    RationalMatrix x(n, n);
    // Interval attempts sweep over densities.
    const double density =
        profile.kind == SampleKind::kInterval ? 0.2 + 0.8 * unit(rng)
                                              : profile.density;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (profile.kind == SampleKind::kGeneric) {
          x(r, c) = Rational(numerator(rng), denominator(rng));
          x(r, c).canonicalize();
        } else if (unit(rng) < density) {
          x(r, c) = coin(rng) ? small(rng) : -small(rng);
        }
      }
    }
    if (Determinant(x) == 0) continue;
    if (profile.kind == SampleKind::kInterval &&
        FixedPoints(x).points != target) {
      continue;
    }
    return x;
  }
  throw GiveUp("no acceptable matrix after " +
               std::to_string(profile.max_retries) + " attempts");
}

}  // namespace weylret
