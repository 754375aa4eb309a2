#include <doctest.h>

#include <sstream>

#include "binvert/enumerate.hpp"
#include "binvert/families.hpp"

using binvert::ExactInt;
using binvert::FamilySpec;

TEST_CASE("f0 examples") {
  CHECK(binvert::f0(FamilySpec::row(2), 2) == 2);
  CHECK(binvert::f0(FamilySpec::diagonal(3), 3) == 6);
  CHECK(binvert::f0(FamilySpec::central_adjacent(), 2) == 3);
  CHECK(binvert::f0(FamilySpec::central(), 3) == 6);
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(FamilySpec::row(0), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::diagonal(-1), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::custom({}), std::invalid_argument);
  CHECK_THROWS_AS(binvert::f0(FamilySpec::row(2), 0), std::invalid_argument);
}

TEST_CASE("custom family reads stored values and rejects out-of-range indices") {
  const auto spec = FamilySpec::custom({1, 5, 7});
  CHECK(binvert::f0(spec, 2) == 5);
  CHECK_THROWS_AS(binvert::f0(spec, 4), std::out_of_range);
  CHECK_THROWS_AS(binvert::f0_sequence(spec, 4), std::out_of_range);
}

TEST_CASE("word_length") {
  CHECK(binvert::word_length(FamilySpec::row(2), 1) == 0);
  CHECK(binvert::word_length(FamilySpec::central(), 3) == 4);
  CHECK(binvert::word_length(FamilySpec::central_adjacent(), 1) == 1);
  CHECK(binvert::word_length(FamilySpec::diagonal(4), 6) == 5);
  CHECK_THROWS_AS(binvert::word_length(FamilySpec::custom({1}), 1), std::invalid_argument);
}

TEST_CASE("family invariants") {
  for (int a = 1; a <= 6; ++a) {
    for (int n = a + 2; n <= 30; ++n) CHECK(binvert::f0(FamilySpec::row(a), n) == 0);
  }
  for (int n = 1; n <= 40; ++n) CHECK(binvert::f0(FamilySpec::diagonal(1), n) == 1);
  for (const auto& spec : {FamilySpec::row(1), FamilySpec::row(5), FamilySpec::diagonal(1),
                           FamilySpec::diagonal(4), FamilySpec::central(),
                           FamilySpec::central_adjacent()}) {
    CHECK(binvert::f0(spec, 1) == 1);
  }
}

namespace {

std::uint64_t binary_words_with_excess(int length, int excess) {
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << length); ++mask) {
    const int ones = __builtin_popcount(mask);
    if (ones - (length - ones) == excess) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("central families count balanced and one-heavy binary words") {
  for (int n = 1; n <= 9; ++n) {
    CHECK(binvert::f0(FamilySpec::central(), n) == binary_words_with_excess(2 * n - 2, 0));
    CHECK(binvert::f0(FamilySpec::central_adjacent(), n) ==
          binary_words_with_excess(2 * n - 1, 1));
  }
}

TEST_CASE("f0_sequence is 1-indexed") {
  const auto f = binvert::f0_sequence(FamilySpec::row(2), 5);
  CHECK(f.size() == 5);
  CHECK(f(1) == 1);
  CHECK(f(2) == 2);
  CHECK(f(3) == 1);
  CHECK(f(4) == 0);
  CHECK_THROWS_AS(f(0), std::out_of_range);
  CHECK_THROWS_AS(f(6), std::out_of_range);
}

TEST_CASE("custom values file format") {
  std::istringstream in("# leading comment\n1\n\n  -4 \n123456789012345678901234567890\n");
  const auto values = binvert::read_custom_values(in);
  REQUIRE(values.size() == 3);
  CHECK(values[1] == -4);
  CHECK(values[2].str() == "123456789012345678901234567890");

  std::istringstream bad("1\nabc\n");
  CHECK_THROWS_AS(binvert::read_custom_values(bad), std::invalid_argument);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(binvert::read_custom_values(empty), std::invalid_argument);
}

TEST_CASE("family names round trip") {
  for (auto kind : {binvert::FamilyKind::Row, binvert::FamilyKind::Diagonal,
                    binvert::FamilyKind::Central, binvert::FamilyKind::CentralAdjacent,
                    binvert::FamilyKind::Custom}) {
    CHECK(binvert::parse_family_kind(binvert::family_kind_name(kind)) == kind);
  }
  CHECK_THROWS_AS(binvert::parse_family_kind("pascal"), std::invalid_argument);
}
