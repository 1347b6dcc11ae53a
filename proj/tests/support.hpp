#pragma once

// Shared helpers for the test suites: random points and independent oracles.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "morsegrass/morsegrass.hpp"

namespace testsupport {

using namespace morsegrass;

/// Complex Gaussian n x k matrix; full rank with probability one.
inline ComplexMatrix gaussian_matrix(int n, int k, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline GrassmannPoint random_point(int k, int n, std::mt19937_64& rng) { return GrassmannPoint(gaussian_matrix(n, k, rng)); }

/// n-1, n-2, ..., 0.
inline HeightSpectrum standard_spectrum(int n) {
  std::vector<double> a;
  for (int i = n - 1; i >= 0; --i) a.push_back(i);
  return HeightSpectrum(a);
}

/// Strictly decreasing with random gaps in [0.5, 1.5].
inline HeightSpectrum random_spectrum(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> gap(0.5, 1.5);
  std::vector<double> a(static_cast<std::size_t>(n));
  double x = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    a[static_cast<std::size_t>(i)] = x;
    x += gap(rng);
  }
  return HeightSpectrum(a);
}

/// A point of the cell S_u: column j has 1 in row u_j, random entries in the
/// free rows above it, zeros elsewhere.
inline GrassmannPoint cell_point(const SchubertSymbol& u, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m = ComplexMatrix::Zero(u.n(), u.k());
  for (int j = 0; j < u.k(); ++j) {
    const int pivot = u[static_cast<std::size_t>(j)];
    m(pivot - 1, j) = 1.0;
    for (int r = 1; r < pivot; ++r)
      if (!u.contains(r)) m(r - 1, j) = Complex(g(rng), g(rng));
  }
  return GrassmannPoint(m);
}

/// Partitions of d into at most k parts each at most cap, by listing every
/// weakly decreasing k-tuple.
inline std::int64_t brute_partition_count(int d, int k, int cap) {
  std::int64_t count = 0;
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int i, int max_part, int sum) -> void {
    if (i == k) {
      count += sum == d;
      return;
    }
    for (int p = 0; p <= max_part; ++p) self(self, i + 1, p, sum + p);
  };
  rec(rec, 0, cap, 0);
  return count;
}

/// Index of a critical manifold as the least Morse index (for -f) over the
/// coordinate planes it contains.
inline int refinement_index(const GeneralizedSchubertSymbol& c) {
  int best = -1;
  for (const auto& u : enumerate_symbols(c.k(), c.n())) {
    if (coarsen(u, c.blocks()) == c) {
      const int idx = critical_index(u, IndexConvention::for_minus_f);
      if (best < 0 || idx < best) best = idx;
    }
  }
  return best;
}

/// Every composition of n into positive parts.
inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      self(self, left - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace testsupport
