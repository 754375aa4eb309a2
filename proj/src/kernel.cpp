#include "binvert/kernel.hpp"

#include <stdexcept>
#include <string>

namespace binvert {

ExactInt binomial(std::int64_t u, std::int64_t v) {
  if (u < 0) throw std::invalid_argument("binomial: upper index must be >= 0");
  if (v < 0 || v > u) return 0;
  if (v > u - v) v = u - v;
  ExactInt result = 1;
  // result stays C(u - v + t, t) after step t, so each division is exact.
  for (std::int64_t t = 1; t <= v; ++t) {
    result *= u - v + t;
    result /= t;
  }
  return result;
}

ExactInt double_factorial_odd(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("double_factorial_odd: n must be >= 1");
  ExactInt result = 1;
  for (std::int64_t t = 3; t <= 2 * n - 1; t += 2) result *= t;
  return result;
}

ExactInt rising_even_product(std::int64_t i, std::int64_t j) {
  if (i < 0 || j < 0) throw std::invalid_argument("rising_even_product: arguments must be >= 0");
  ExactInt result = 1;
  for (std::int64_t t = 0; t < j; ++t) {
    if (i + 2 * t == 0) return 0;
    result *= i + 2 * t;
  }
  return result;
}

ExactInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  ExactInt result = 1;
  for (std::int64_t t = 2; t <= n; ++t) result *= t;
  return result;
}

ExactInt ipow(const ExactInt& base, std::uint32_t exp) {
  return boost::multiprecision::pow(base, exp);
}

ExactInt exact_divide(const ExactInt& numerator, const ExactInt& denominator) {
  if (denominator == 0) throw std::logic_error("exact_divide: division by zero");
  ExactInt quotient;
  ExactInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("exact_divide: " + numerator.str() + " is not divisible by " +
                           denominator.str());
  }
  return quotient;
}

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  for_each_composition(n, k, [&](const std::vector<int>& parts) { out.push_back(parts); });
  return out;
}

}  // namespace binvert
