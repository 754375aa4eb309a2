#include <doctest.h>

#include "binvert/closed_forms.hpp"
#include "binvert/transforms.hpp"

using binvert::ExactInt;
using binvert::FamilySpec;

TEST_CASE("c1_row") {
  CHECK(binvert::c1_row(2, 3, 2) == 4);
  CHECK(binvert::c1_row(2, 4, 1) == 0);
  for (int a = 1; a <= 5; ++a)
    for (int n = 1; n <= 10; ++n) CHECK(binvert::c1_row(a, n, n) == 1);
  CHECK_THROWS_AS(binvert::c1_row(0, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(binvert::c1_row(2, 3, 4), std::invalid_argument);
}

TEST_CASE("c1_diagonal") {
  CHECK(binvert::c1_diagonal(3, 3, 2) == 6);
  CHECK(binvert::c1_diagonal(2, 3, 2) == 4);
  CHECK(binvert::c1_diagonal(2, 5, 3) == 21);
  CHECK_THROWS_AS(binvert::c1_diagonal(2, 3, 0), std::invalid_argument);
}

TEST_CASE("c1_central") {
  CHECK(binvert::c1_central(3, 2) == 4);
  CHECK(binvert::c1_central(3, 1) == 6);
  CHECK(binvert::c1_central(7, 7) == 1);
  std::vector<ExactInt> row5;
  for (int k = 1; k <= 5; ++k) row5.push_back(binvert::c1_central(5, k));
  CHECK(row5 == std::vector<ExactInt>{70, 64, 30, 8, 1});
}

TEST_CASE("c1_central_adjacent") {
  CHECK(binvert::c1_central_adjacent(3, 2) == 6);
  CHECK(binvert::c1_central_adjacent(2, 2) == 1);
  CHECK(binvert::c1_central_adjacent(2, 1) == 3);
  std::vector<ExactInt> row5;
  for (int k = 1; k <= 5; ++k) row5.push_back(binvert::c1_central_adjacent(5, k));
  CHECK(row5 == std::vector<ExactInt>{126, 130, 57, 12, 1});
}

TEST_CASE("closed forms equal the convolution triangle up to 24") {
  const FamilySpec families[] = {FamilySpec::row(1),      FamilySpec::row(2),
                                 FamilySpec::row(3),      FamilySpec::row(6),
                                 FamilySpec::diagonal(1), FamilySpec::diagonal(2),
                                 FamilySpec::diagonal(5), FamilySpec::central(),
                                 FamilySpec::central_adjacent()};
  for (const auto& spec : families) {
    const auto t = binvert::c_triangle(binvert::f0_sequence(spec, 24), 24);
    for (int n = 1; n <= 24; ++n)
      for (int k = 1; k <= n; ++k) REQUIRE(binvert::c1_closed_form(spec, n, k) == t.at(n, k));
  }
  CHECK_THROWS_AS(binvert::c1_closed_form(FamilySpec::custom({1}), 1, 1), std::invalid_argument);
}

TEST_CASE("first columns reduce to f0") {
  for (int n = 1; n <= 24; ++n) {
    for (int a = 1; a <= 4; ++a) {
      CHECK(binvert::c1_row(a, n, 1) == binvert::f0(FamilySpec::row(a), n));
      CHECK(binvert::c1_diagonal(a, n, 1) == binvert::f0(FamilySpec::diagonal(a), n));
    }
  }
  for (int n = 1; n <= 60; ++n) {
    CHECK(binvert::c1_central(n, 1) == binvert::binomial(2 * n - 2, n - 1));
    CHECK(binvert::identity_double_factorial(n).holds);
  }
}

TEST_CASE("central-adjacent entries are positive") {
  for (int n = 1; n <= 24; ++n)
    for (int k = 1; k <= n; ++k) CHECK(binvert::c1_central_adjacent(n, k) > 0);
}

TEST_CASE("identity_idd1") {
  auto r = binvert::identity_idd1(5, 3, 1);
  CHECK(r.holds);
  CHECK(r.lhs == 10);
  CHECK(r.rhs == 10);
  r = binvert::identity_idd1(1, 1, 1);
  CHECK(r.holds);
  CHECK(r.lhs == 1);
  r = binvert::identity_idd1(6, 3, 2);
  CHECK(r.holds);
  CHECK(r.rhs == 20);
  CHECK(r.parameters == std::vector<std::int64_t>{6, 3, 2});
  CHECK_THROWS_AS(binvert::identity_idd1(3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(binvert::identity_idd1(3, 2, 0), std::invalid_argument);
  for (int u = 1; u <= 30; ++u)
    for (int v = 1; v <= u; ++v)
      for (int w = 1; w <= v; ++w) REQUIRE(binvert::identity_idd1(u, v, w).holds);
}

TEST_CASE("double factorial identities") {
  auto r = binvert::identity_double_factorial(1);
  CHECK((r.holds && r.lhs == 2));
  r = binvert::identity_double_factorial(2);
  CHECK((r.holds && r.lhs == 12));
  CHECK(binvert::identity_double_factorial(5).holds);
  r = binvert::identity_shifted_double_factorial(1);
  CHECK((r.holds && r.lhs == 1));
  r = binvert::identity_shifted_double_factorial(2);
  CHECK((r.holds && r.lhs == 6));
  CHECK(binvert::identity_shifted_double_factorial(6).holds);
  CHECK_THROWS_AS(binvert::identity_double_factorial(0), std::invalid_argument);
}

TEST_CASE("vanishing identity") {
  auto r = binvert::identity_vanishing(2, 1);
  CHECK(r.holds);
  CHECK(r.lhs == 0);
  CHECK(binvert::identity_vanishing(1, 0).holds);
  CHECK(binvert::identity_vanishing(3, 2).holds);
  CHECK_THROWS_AS(binvert::identity_vanishing(3, 3), std::invalid_argument);
  for (int k = 1; k <= 30; ++k)
    for (int j = 0; j < k; ++j) REQUIRE(binvert::identity_vanishing(k, j).holds);
}

TEST_CASE("power_of_four_check") {
  auto r = binvert::power_of_four_check(2);
  CHECK((r.holds && r.lhs == 1));
  r = binvert::power_of_four_check(3);
  CHECK((r.holds && r.lhs == 4));
  CHECK(binvert::power_of_four_check(6).holds);
  CHECK_THROWS_AS(binvert::power_of_four_check(1), std::invalid_argument);
}
