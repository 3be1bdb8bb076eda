#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <thread>

#include "arboreal/errors.hpp"
#include "arboreal/inverse_totient.hpp"

using namespace arboreal;
using u64 = std::uint64_t;

TEST_CASE("fibers of the worked values") {
  CHECK(totient_fiber(1).members == std::vector<u64>{1, 2});
  CHECK(totient_fiber(14).members.empty());
  CHECK(totient_fiber(24).members ==
        std::vector<u64>{35, 39, 45, 52, 56, 70, 72, 78, 84, 90});
  CHECK(totient_fiber(3).members.empty());
  CHECK_THROWS_AS(totient_fiber(0), std::domain_error);
}

TEST_CASE("fibers of odd targets above 1 are empty") {
  for (u64 m = 3; m <= 999; m += 2) CHECK(totient_fiber(m).members.empty());
}

TEST_CASE("members are sound, sorted and closed under doubling odds") {
  for (u64 m = 1; m <= 10'000; ++m) {
    const TotientFiber fiber = totient_fiber(m);
    CHECK(std::is_sorted(fiber.members.begin(), fiber.members.end()));
    CHECK(std::adjacent_find(fiber.members.begin(), fiber.members.end()) ==
          fiber.members.end());
    for (u64 x : fiber.members) {
      CHECK(euler_phi(x) == m);
      if (x & 1)
        CHECK(std::binary_search(fiber.members.begin(), fiber.members.end(), 2 * x));
    }
  }
}

TEST_CASE("divisor order never changes the set") {
  for (u64 m = 1; m <= 500; ++m) {
    CHECK(totient_fiber(m, DivisorOrder::ascending).members ==
          totient_fiber(m, DivisorOrder::descending).members);
  }
}

TEST_CASE("brute-force oracle equivalence") {
  const auto buckets = totient_fibers_bruteforce_upto(500);
  for (u64 m = 1; m <= 500; ++m) CHECK(totient_fiber(m).members == buckets[m]);

  CHECK(totient_fiber_bruteforce(1).members == std::vector<u64>{1, 2});
  CHECK(totient_fiber_bruteforce(24).members == totient_fiber(24).members);
  CHECK(totient_fiber_bruteforce(500).members == totient_fiber(500).members);
}

TEST_CASE("oracle budget and domain errors") {
  CHECK_THROWS_AS(totient_fiber_bruteforce(0), std::domain_error);
  CHECK_THROWS_AS(totient_fiber_bruteforce(100'000), resource_error);
  CHECK_THROWS_AS(totient_fibers_bruteforce_upto(0), std::domain_error);
}

TEST_CASE("fiber cache returns the plain fiber") {
  FiberCache cache;
  for (u64 m : {1ull, 14ull, 24ull, 240ull}) {
    const auto cached = cache.get(m);
    CHECK(*cached == totient_fiber(m).members);
    CHECK(cache.get(m) == cached);  // same shared entry on the second hit
  }
  CHECK(cache.size() == 4);
}

TEST_CASE("fiber cache under concurrent hammering") {
  FiberCache cache;
  std::vector<std::thread> pool;
  std::array<bool, 4> ok{true, true, true, true};
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (u64 m = 1; m <= 400; ++m) {
        if (*cache.get(m) != totient_fiber(m).members) ok[t] = false;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (bool t : ok) CHECK(t);
  CHECK(cache.size() == 400);
}
