#pragma once

// Test-only oracles. These deliberately avoid the library's own iteration
// and recurrence code so they can be used to check it.

#include <functional>
#include <vector>

#include "binvert/kernel.hpp"

namespace binvert::testing {

// Pascal triangle rows 0..max_u built by addition only.
inline std::vector<std::vector<ExactInt>> pascal_rows(int max_u) {
  std::vector<std::vector<ExactInt>> rows;
  for (int u = 0; u <= max_u; ++u) {
    std::vector<ExactInt> row(static_cast<std::size_t>(u + 1), 1);
    for (int v = 1; v < u; ++v) row[v] = rows[u - 1][v - 1] + rows[u - 1][v];
    rows.push_back(std::move(row));
  }
  return rows;
}

// All compositions of n into k positive parts, by recursion on the first part.
inline void recursive_compositions(int n, int k, std::vector<int>& prefix,
                                   std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (n == 0) out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= n - (k - 1); ++first) {
    prefix.push_back(first);
    recursive_compositions(n - first, k - 1, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<int>> recursive_compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  if (k >= 1) recursive_compositions(n, k, prefix, out);
  return out;
}

// sum over compositions of prod f(i_t): the defining sum, evaluated directly.
inline ExactInt composition_sum(const std::function<ExactInt(int)>& f, int n, int k) {
  ExactInt total = 0;
  for (const auto& parts : recursive_compositions(n, k)) {
    ExactInt product = 1;
    for (int part : parts) product *= f(part);
    total += product;
  }
  return total;
}

// Coefficients of G solving G = F + F*G (i.e. G = F / (1 - F)), 1-indexed
// input, output g[0] = g(1).
inline std::vector<ExactInt> invert_by_series(const std::vector<ExactInt>& f) {
  const std::size_t N = f.size();
  std::vector<ExactInt> g(N, 0);
  for (std::size_t n = 1; n <= N; ++n) {
    ExactInt value = f[n - 1];
    for (std::size_t i = 1; i < n; ++i) value += f[i - 1] * g[n - i - 1];
    g[n - 1] = value;
  }
  return g;
}

}  // namespace binvert::testing
