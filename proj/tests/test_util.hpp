#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "glsg/cayley_table.hpp"
#include "glsg/families.hpp"

namespace glsg::test {

// Independent associativity oracle: scans every (i,j,k) triple in row-major
// order on the raw grid, no shortcuts. Returns the first failing triple.
inline std::optional<std::array<int, 3>> associativity_witness(
    const std::vector<std::vector<int>>& grid) {
  const int n = static_cast<int>(grid.size());
  auto at = [&](int a, int b) { return grid[a - 1][b - 1]; };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (at(at(i, j), k) != at(i, at(j, k))) {
          return std::array<int, 3>{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

inline std::vector<std::vector<int>> to_grid(const CayleyTable& t) {
  std::vector<std::vector<int>> grid(t.order(), std::vector<int>(t.order()));
  for (int i = 1; i <= t.order(); ++i) {
    for (int j = 1; j <= t.order(); ++j) grid[i - 1][j - 1] = t.product(i, j);
  }
  return grid;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// A spread of tables from every constructible family, orders <= max_order.
inline std::vector<CayleyTable> family_corpus(int max_order) {
  std::vector<CayleyTable> corpus;
  for (int n = 1; n <= max_order; ++n) {
    corpus.push_back(make_null(n));
    corpus.push_back(make_left_zero(n));
    corpus.push_back(make_right_zero(n));
    corpus.push_back(make_cyclic_group(n));
    corpus.push_back(make_constant_image(n, 1));
    if (n >= 3) corpus.push_back(make_constant_image(n, 2));
  }
  for (int p = 2; p <= max_order; ++p) {
    for (int q = 2; p * q <= max_order; ++q) {
      corpus.push_back(make_rectangular_band(p, q));
    }
  }
  for (int m = 1; m <= max_order; ++m) {
    for (int idx = 1; 1 + m * idx * idx <= max_order; ++idx) {
      corpus.push_back(make_brandt(make_cyclic_group(m), idx));
    }
  }
  return corpus;
}

// Spectrum sanity: trace ~ 0 and sum of squares ~ 2|E|.
inline bool spectrum_moments_ok(const std::vector<double>& eigenvalues, long long edge_count) {
  double trace = 0.0;
  double second = 0.0;
  for (double v : eigenvalues) {
    trace += v;
    second += v * v;
  }
  const double n = static_cast<double>(eigenvalues.size());
  if (std::abs(trace) > 1e-6 * std::max(1.0, n)) return false;
  const double expected = 2.0 * static_cast<double>(edge_count);
  return std::abs(second - expected) <= 1e-6 * expected + 1e-9;
}

}  // namespace glsg::test
