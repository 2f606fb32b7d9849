#pragma once

// Test-only oracles. Each one recomputes a quantity along a path that shares
// no code with the library routine it checks.

#include "rhspaces/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using rhspaces::Integer;
using rhspaces::Rational;

/// Radon-Hurwitz number by repeated halving: 2^c + 8d with v = c + 4d the number of halvings.
inline std::uint64_t rho_by_halving(std::uint64_t r) {
  std::uint64_t v = 0;
  while (r % 2 == 0) {
    r /= 2;
    ++v;
  }
  std::uint64_t pow = 1;
  for (std::uint64_t i = 0; i < v % 4; ++i) pow *= 2;
  return pow + 8 * (v / 4);
}

inline std::uint64_t rho_c_by_halving(std::uint64_t r) {
  std::uint64_t v = 0;
  while (r % 2 == 0) {
    r /= 2;
    ++v;
  }
  return 2 * v + 2;
}

/// Window maximum by enumerating 2x the argument, h + 2j; odd values are half-integers (rho 0).
inline std::uint64_t sigma_by_enumeration(std::uint64_t n, std::uint64_t h, bool complex) {
  std::uint64_t best = 0;
  for (std::uint64_t j = 0; j <= n - h; ++j) {
    const std::uint64_t twice = h + 2 * j;
    if (twice == 0 || twice % 2 == 1) continue;
    best = std::max(best, complex ? rho_c_by_halving(twice / 2) : rho_by_halving(twice / 2));
  }
  return best;
}

/// Laplace expansion along the first row.
template <typename T>
T laplace_determinant(const std::vector<std::vector<T>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return T(1);
  if (n == 1) return a[0][0];
  T det(0);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<T>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    T term = a[0][col] * laplace_determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) pick.push_back(i);
    f(pick);
  } while (std::prev_permutation(mask.begin(), mask.end()));
}

/// Largest k with a nonzero k x k minor.
template <typename T>
std::size_t rank_by_minors(const rhspaces::Matrix<T>& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    bool found = false;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      if (found) return;
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        if (found) return;
        std::vector<std::vector<T>> sub(k, std::vector<T>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]);
        if (!rhspaces::is_zero(laplace_determinant(sub))) found = true;
      });
    });
    if (found) return k;
  }
  return 0;
}

/// Random integer matrix with entries in [lo, hi].
inline rhspaces::RealMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                  long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  rhspaces::RealMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace oracle
