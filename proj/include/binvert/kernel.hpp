#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace binvert {

// Every count, coefficient and identity side in the library is an ExactInt.
using ExactInt = boost::multiprecision::cpp_int;

// C(u, v) for u >= 0. Out-of-range lower index yields 0, so sums over
// binomials may run past the support without special-casing.
ExactInt binomial(std::int64_t u, std::int64_t v);

// (2n-1)!! = 1*3*5*...*(2n-1), n >= 1.
ExactInt double_factorial_odd(std::int64_t n);

// i(i+2)(i+4)...(i+2j-2); the empty product (j = 0) is 1.
ExactInt rising_even_product(std::int64_t i, std::int64_t j);

ExactInt factorial(std::int64_t n);

// base^exp with 0^0 = 1.
ExactInt ipow(const ExactInt& base, std::uint32_t exp);

// Exact quotient; throws std::logic_error if the division leaves a remainder.
ExactInt exact_divide(const ExactInt& numerator, const ExactInt& denominator);

/// Visits every composition of n into k positive parts, lexicographically.
/// Nothing is visited when k > n.
template <typename Visitor>
void for_each_composition(int n, int k, Visitor&& visit) {
  if (n < 1 || k < 1 || k > n) return;
  const auto len = static_cast<std::size_t>(k);
  std::vector<int> parts(len, 1);
  parts[len - 1] = n - k + 1;
  while (true) {
    visit(static_cast<const std::vector<int>&>(parts));
    // The rightmost part above 1 donates one unit to its left neighbour;
    // everything right of that neighbour is reset to the smallest tail.
    std::size_t r = len;
    while (r > 0 && parts[r - 1] == 1) --r;
    if (r <= 1) return;
    const std::size_t j = r - 2;
    ++parts[j];
    int used = 0;
    for (std::size_t t = 0; t <= j; ++t) used += parts[t];
    for (std::size_t t = j + 1; t + 1 < len; ++t) parts[t] = 1;
    parts[len - 1] = n - used - static_cast<int>(len - 2 - j);
  }
}

std::vector<std::vector<int>> compositions(int n, int k);

}  // namespace binvert
