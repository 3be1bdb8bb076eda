#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arboreal/sequence.hpp"

using namespace arboreal;
using u64 = std::uint64_t;

TEST_CASE("builtin kinds produce the expected terms") {
  CHECK(IncrementSequence::squares().term(3) == 9);
  CHECK(IncrementSequence::cubes().term(2) == 8);
  CHECK(IncrementSequence::odds().term(4) == 7);
  CHECK(IncrementSequence::naturals().term(1) == 1);
}

TEST_CASE("powers line up with the naturals") {
  const auto nat = IncrementSequence::naturals();
  const auto sq = IncrementSequence::squares();
  const auto cu = IncrementSequence::cubes();
  for (u64 j = 1; j <= 1000; ++j) {
    CHECK(sq.term(j) == nat.term(j) * nat.term(j));
    CHECK(cu.term(j) == nat.term(j) * nat.term(j) * nat.term(j));
  }
}

TEST_CASE("polynomial kind reproduces naturals from [0,1]") {
  const auto poly = IncrementSequence::polynomial({0, 1});
  for (u64 j = 1; j <= 200; ++j)
    CHECK(poly.term(j) == IncrementSequence::naturals().term(j));
}

TEST_CASE("nonpositive polynomial values are rejected with the offending index") {
  CHECK_THROWS_WITH_AS(IncrementSequence::polynomial({-5, 1}),
                       "polynomial sequence: term at j = 1 is below 1",
                       std::domain_error);
  CHECK_THROWS_WITH_AS(IncrementSequence::polynomial({6, -5, 1}),
                       "polynomial sequence: term at j = 2 is below 1",
                       std::domain_error);
  CHECK_THROWS_AS(IncrementSequence::polynomial({0, -1}), std::domain_error);
  CHECK_THROWS_AS(IncrementSequence::polynomial({0}), std::domain_error);
  // f(j) = j^2 - 10j + 26 dips to 1 at j = 5 but never below: accepted.
  CHECK(IncrementSequence::polynomial({26, -10, 1}).term(5) == 1);
}

TEST_CASE("index errors are range errors, overflow is reported") {
  const auto list = IncrementSequence::explicit_list({4, 1, 5});
  CHECK(list.term(3) == 5);
  CHECK(list.term_count() == 3);
  CHECK_THROWS_AS(list.term(4), std::out_of_range);
  CHECK_THROWS_AS(list.term(0), std::out_of_range);
  CHECK_THROWS_AS(IncrementSequence::explicit_list({}), std::domain_error);
  CHECK_THROWS_AS(IncrementSequence::explicit_list({3, 0, 1}), std::domain_error);

  const auto cubes = IncrementSequence::cubes();
  CHECK_FALSE(cubes.term_count().has_value());
  CHECK_THROWS_AS(cubes.term(u64(1) << 22), std::overflow_error);
}

TEST_CASE("spec strings parse back to the same sequences") {
  for (const char* spec : {"naturals", "squares", "cubes", "odds"}) {
    const auto seq = IncrementSequence::parse(spec);
    CHECK(seq.spec_string() == spec);
  }
  const auto poly = IncrementSequence::parse("poly:1,0,2");
  CHECK(poly.spec_string() == "poly:1,0,2");
  CHECK(poly.term(3) == 19);
  const auto list = IncrementSequence::parse("list:9,8,7");
  CHECK(list.term(2) == 8);

  CHECK_THROWS_AS(IncrementSequence::parse("fibonacci"), std::invalid_argument);
  CHECK_THROWS_AS(IncrementSequence::parse("poly:"), std::invalid_argument);
  CHECK_THROWS_AS(IncrementSequence::parse("poly:1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(IncrementSequence::parse("list:0,2"), std::invalid_argument);
}

TEST_CASE("polynomial forms are exposed for bound derivation") {
  CHECK(IncrementSequence::cubes().polynomial_form()->degree() == 3);
  CHECK(IncrementSequence::odds().polynomial_form()->coefficients() ==
        std::vector<long long>{-1, 2});
  CHECK(IncrementSequence::explicit_list({1, 2}).polynomial_form() == nullptr);
}
