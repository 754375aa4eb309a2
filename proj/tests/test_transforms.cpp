#include <doctest.h>

#include <random>
#include <sstream>

#include "binvert/transforms.hpp"
#include "support/brute_force.hpp"

using binvert::CTriangle;
using binvert::ExactInt;
using binvert::FamilySpec;
using binvert::SeqFn;

namespace {

std::vector<FamilySpec> named_families() {
  return {FamilySpec::row(1),      FamilySpec::row(2),      FamilySpec::row(3),
          FamilySpec::row(4),      FamilySpec::diagonal(1), FamilySpec::diagonal(2),
          FamilySpec::diagonal(3), FamilySpec::diagonal(4), FamilySpec::central(),
          FamilySpec::central_adjacent()};
}

std::vector<ExactInt> values_of(const SeqFn& f) { return f.values(); }

SeqFn ones(int N) { return SeqFn(std::vector<ExactInt>(N, 1), "ones"); }

}  // namespace

TEST_CASE("c_triangle examples") {
  const auto row2 = binvert::c_triangle(binvert::f0_sequence(FamilySpec::row(2), 6), 6);
  CHECK(row2.at(3, 2) == 4);
  CHECK(row2.at(4, 2) == 6);
  const auto central = binvert::c_triangle(binvert::f0_sequence(FamilySpec::central(), 6), 6);
  CHECK(central.at(3, 2) == 4);
  for (int n = 1; n <= 6; ++n) CHECK(central.at(n, n) == 1);
  // outside the triangle
  CHECK(central.at(3, 4) == 0);
  CHECK(central.at(3, 0) == 0);
  CHECK(central.at(7, 1) == 0);
}

TEST_CASE("c_triangle rejects N beyond the truncation") {
  CHECK_THROWS_AS(binvert::c_triangle(ones(4), 5), std::out_of_range);
  CHECK_THROWS_AS(binvert::reference::c_triangle(ones(4), 5), std::out_of_range);
}

TEST_CASE("recurrence equals the direct composition sum on random sequences") {
  std::mt19937 rng(20241018);
  std::uniform_int_distribution<int> value(-5, 9);
  for (int trial = 0; trial < 25; ++trial) {
    const int N = 12;
    std::vector<ExactInt> values{1};
    for (int i = 1; i < N; ++i) values.emplace_back(value(rng));
    const SeqFn f(values, "random");
    const CTriangle t = binvert::c_triangle(f, N);
    const CTriangle serial = binvert::reference::c_triangle(f, N);
    CHECK(t == serial);
    for (int n = 1; n <= N; ++n)
      for (int k = 1; k <= n; ++k)
        REQUIRE(t.at(n, k) ==
                binvert::testing::composition_sum([&](int i) { return f(i); }, n, k));
  }
}

TEST_CASE("invert_transform examples") {
  const auto g = binvert::invert_transform(binvert::f0_sequence(FamilySpec::row(2), 5));
  CHECK(values_of(g) == std::vector<ExactInt>{1, 3, 6, 13, 28});
  const auto powers = binvert::invert_transform(ones(10));
  for (int n = 1; n <= 10; ++n) CHECK(powers(n) == ExactInt(1) << (n - 1));
  CHECK(binvert::invert_transform(binvert::f0_sequence(FamilySpec::diagonal(1), 10)) == powers);
}

TEST_CASE("invert transform satisfies G = F (1 + G) on random inputs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> value(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ExactInt> values;
    for (int i = 0; i < 16; ++i) values.emplace_back(value(rng));
    const SeqFn f(values, "random");
    const SeqFn g = binvert::invert_transform(f);
    CHECK(g.values() == binvert::testing::invert_by_series(values));
  }
}

TEST_CASE("fm examples") {
  CHECK(values_of(binvert::fm(FamilySpec::row(2), 1, 5)) ==
        std::vector<ExactInt>{1, 3, 6, 13, 28});
  CHECK(binvert::fm(FamilySpec::central(), 0, 8) ==
        binvert::f0_sequence(FamilySpec::central(), 8));
  const auto threes = binvert::fm(FamilySpec::diagonal(1), 2, 12);
  const auto twice = binvert::testing::invert_by_series(binvert::testing::invert_by_series(
      std::vector<ExactInt>(12, 1)));
  for (int n = 1; n <= 12; ++n) {
    CHECK(threes(n) == binvert::ipow(3, n - 1));
    CHECK(threes(n) == twice[n - 1]);
  }
  CHECK(values_of(binvert::fm(FamilySpec::row(2), 2, 8)) ==
        std::vector<ExactInt>{1, 4, 13, 44, 148, 498, 1676, 5640});
  CHECK_THROWS_AS(binvert::fm(FamilySpec::row(2), -1, 5), std::invalid_argument);
}

TEST_CASE("cm examples and borders") {
  CHECK(binvert::cm(FamilySpec::row(2), 1, 6).at(3, 2) == 4);
  CHECK(binvert::cm(FamilySpec::diagonal(3), 1, 6).at(3, 2) == 6);
  CHECK_THROWS_AS(binvert::cm(FamilySpec::row(2), 0, 5), std::invalid_argument);
  for (const auto& spec : named_families()) {
    for (int m = 1; m <= 3; ++m) {
      const CTriangle t = binvert::cm(spec, m, 12);
      CHECK(t.m() == m);
      REQUIRE(t.base().has_value());
      CHECK(*t.base() == spec);
      const SeqFn prev = binvert::fm(spec, m - 1, 12);
      for (int n = 1; n <= 12; ++n) {
        CHECK(t.at(n, 1) == prev(n));
        CHECK(t.at(n, n) == 1);
      }
    }
  }
}

TEST_CASE("lift examples") {
  const CTriangle row2 = binvert::cm(FamilySpec::row(2), 1, 10);
  CHECK(binvert::lift_cm_from_c1(row2, 1, 4, 2) == row2.at(4, 2));
  CHECK(binvert::lift_cm_from_c1(row2, 2, 3, 1) == 6);
  CHECK(binvert::lift_fm_from_c1(row2, 1, 4) == 13);
  CHECK(binvert::lift_fm_from_c1(row2, 1, 1) == 1);

  const CTriangle diag3 = binvert::cm(FamilySpec::diagonal(3), 1, 10);
  CHECK(binvert::lift_cm_from_c1(diag3, 2, 4, 2) ==
        binvert::cm(FamilySpec::diagonal(3), 2, 10).at(4, 2));
  const CTriangle diag2 = binvert::cm(FamilySpec::diagonal(2), 1, 10);
  CHECK(binvert::lift_fm_from_c1(diag2, 2, 3) == binvert::fm(FamilySpec::diagonal(2), 2, 10)(3));

  CHECK_THROWS_AS(binvert::lift_cm_from_c1(row2, 1, 11, 1), std::out_of_range);
  CHECK_THROWS_AS(binvert::lift_cm_from_c1(row2, 1, 4, 5), std::out_of_range);
  CHECK_THROWS_AS(binvert::lift_fm_from_c1(row2, 0, 4), std::invalid_argument);
  const CTriangle m2 = binvert::cm(FamilySpec::row(2), 2, 5);
  CHECK_THROWS_AS(binvert::lift_fm_from_c1(m2, 2, 3), std::invalid_argument);
}

TEST_CASE("lifts agree with the direct engine for every family") {
  for (const auto& spec : named_families()) {
    const CTriangle c1 = binvert::cm(spec, 1, 16);
    for (int m = 1; m <= 3; ++m) {
      const CTriangle direct = binvert::cm(spec, m, 16);
      const SeqFn f = binvert::fm(spec, m, 16);
      for (int n = 1; n <= 16; ++n) {
        for (int k = 1; k <= n; ++k)
          REQUIRE(binvert::lift_cm_from_c1(c1, m, n, k) == direct.at(n, k));
        REQUIRE(binvert::lift_fm_from_c1(c1, m, n) == f(n));
      }
    }
  }
}

TEST_CASE("lifts also hold for arbitrary f0 with f0(1) = 1") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> value(0, 6);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ExactInt> values{1};
    for (int i = 1; i < 10; ++i) values.emplace_back(value(rng));
    const auto spec = FamilySpec::custom(values);
    const CTriangle c1 = binvert::cm(spec, 1, 10);
    for (int m = 1; m <= 4; ++m) {
      const CTriangle direct = binvert::cm(spec, m, 10);
      for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k)
          REQUIRE(binvert::lift_cm_from_c1(c1, m, n, k) == direct.at(n, k));
    }
  }
}

TEST_CASE("triangle serialization") {
  const CTriangle t = binvert::cm(FamilySpec::central(), 1, 3);
  std::ostringstream csv;
  binvert::write_triangle_csv(csv, t);
  CHECK(csv.str() == "n,k,value\n1,1,1\n2,1,2\n2,2,1\n3,1,6\n3,2,4\n3,3,1\n");
  std::ostringstream tsv;
  binvert::write_triangle_tsv(tsv, t);
  CHECK(tsv.str() == "1\t1\n2\t2\t1\n3\t6\t4\t1\n");
}
