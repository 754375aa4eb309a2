#include "binvert/closed_forms.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace binvert {

namespace {

void require_nk(int n, int k, const char* what) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument(std::string(what) + ": need 1 <= k <= n, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  }
}

void require_a(int a, const char* what) {
  if (a < 1) throw std::invalid_argument(std::string(what) + ": need a >= 1");
}

IdentityResult make_result(std::string name, std::vector<std::int64_t> params, ExactInt lhs,
                           ExactInt rhs) {
  IdentityResult r{std::move(name), std::move(params), std::move(lhs), std::move(rhs), false};
  r.holds = r.lhs == r.rhs;
  return r;
}

ExactInt power_of_two(int e) { return ExactInt(1) << e; }

}  // namespace

ExactInt c1_row(int a, int n, int k) {
  require_a(a, "c1_row");
  require_nk(n, k, "c1_row");
  return binomial(static_cast<std::int64_t>(a) * k, n - k);
}

ExactInt c1_diagonal(int a, int n, int k) {
  require_a(a, "c1_diagonal");
  require_nk(n, k, "c1_diagonal");
  const std::int64_t ak = static_cast<std::int64_t>(a) * k;
  return binomial(n + ak - k - 1, ak - 1);
}

ExactInt c1_central(int n, int k) {
  require_nk(n, k, "c1_central");
  if (k == n) return 1;
  const ExactInt numerator = power_of_two(n - k) * rising_even_product(k, n - k);
  return exact_divide(numerator, factorial(n - k));
}

ExactInt c1_central_adjacent(int n, int k) {
  require_nk(n, k, "c1_central_adjacent");
  ExactInt alternating = 0;
  for (int i = 0; i <= k; ++i) {
    const ExactInt term = binomial(k, i) * rising_even_product(i, n);
    if ((k - i) % 2 == 0) {
      alternating += term;
    } else {
      alternating -= term;
    }
  }
  return exact_divide(power_of_two(n - k) * alternating, factorial(n));
}

ExactInt c1_closed_form(const FamilySpec& spec, int n, int k) {
  switch (spec.kind) {
    case FamilyKind::Row: return c1_row(spec.a, n, k);
    case FamilyKind::Diagonal: return c1_diagonal(spec.a, n, k);
    case FamilyKind::Central: return c1_central(n, k);
    case FamilyKind::CentralAdjacent: return c1_central_adjacent(n, k);
    case FamilyKind::Custom: break;
  }
  throw std::invalid_argument("no closed form for a custom family");
}

IdentityResult identity_idd1(int u, int v, int w) {
  if (!(u >= v && v >= w && w >= 1)) {
    throw std::invalid_argument("identity_idd1: need u >= v >= w >= 1");
  }
  ExactInt sum = 0;
  for (int i = w; i <= u - v + w; ++i) sum += binomial(i - 1, w - 1) * binomial(u - i, v - w);
  return make_result("idd1", {u, v, w}, binomial(u, v), std::move(sum));
}

IdentityResult identity_double_factorial(int n) {
  if (n < 1) throw std::invalid_argument("identity_double_factorial: need n >= 1");
  ExactInt product = 1;
  for (int i = 1; i <= n; ++i) product *= n + i;
  return make_result("double_factorial", {n}, std::move(product),
                     power_of_two(n) * double_factorial_odd(n));
}

IdentityResult identity_shifted_double_factorial(int n) {
  if (n < 1) throw std::invalid_argument("identity_shifted_double_factorial: need n >= 1");
  ExactInt product = 1;
  for (int i = 1; i <= n; ++i) product *= n + i - 1;
  return make_result("shifted_double_factorial", {n}, std::move(product),
                     power_of_two(n - 1) * double_factorial_odd(n));
}

IdentityResult identity_vanishing(int k, int j) {
  if (k < 1 || j < 0 || j >= k) {
    throw std::invalid_argument("identity_vanishing: need k >= 1 and 0 <= j < k");
  }
  ExactInt sum = 0;
  for (int i = 0; i <= k; ++i) {
    const ExactInt term = binomial(k, i) * rising_even_product(i, j);
    if ((k - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return make_result("vanishing", {k, j}, std::move(sum), 0);
}

IdentityResult power_of_four_check(int n) {
  if (n < 2) throw std::invalid_argument("power_of_four_check: need n >= 2");
  return make_result("power_of_four", {n}, c1_central(n, 2), ipow(ExactInt(4), n - 2));
}

}  // namespace binvert
