#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <numeric>
#include <random>
#include <thread>

#include "arboreal/errors.hpp"
#include "arboreal/totient.hpp"

using namespace arboreal;
using u64 = std::uint64_t;

namespace {

// Definition-level oracle: count coprime residues directly.
u64 phi_by_gcd(u64 n) {
  u64 count = 0;
  for (u64 y = 1; y <= n; ++y)
    if (std::gcd(y, n) == 1) ++count;
  return count;
}

// Lucas-Lehmer, an independent route to the primality of 2^p - 1.
bool mersenne_prime(unsigned p) {
  const u64 m = (u64(1) << p) - 1;
  unsigned __int128 s = 4;
  for (unsigned i = 0; i + 2 < p; ++i) s = (s * s + m - 2) % m;
  return s % m == 0;
}

}  // namespace

TEST_CASE("euler_phi on known values") {
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(7) == 6);
  CHECK(euler_phi(1024) == 512);
  CHECK_THROWS_AS(euler_phi(0), std::domain_error);
}

TEST_CASE("euler_phi agrees with the coprime count") {
  for (u64 n = 1; n <= 2000; ++n) CHECK(euler_phi(n) == phi_by_gcd(n));
}

TEST_CASE("phi_sieve small values and agreement") {
  const auto ph = phi_sieve(4);
  CHECK(ph == std::vector<u64>{0, 1, 1, 2, 2});
  CHECK(phi_sieve(12)[12] == 4);
  CHECK_THROWS_AS(phi_sieve(0), std::domain_error);

  const auto big = phi_sieve(1'000'000);
  std::mt19937_64 rng(20240521);
  std::uniform_int_distribution<u64> dist(1, 1'000'000);
  for (int i = 0; i < 1000; ++i) {
    const u64 n = dist(rng);
    CHECK(big[n] == euler_phi(n));
  }
}

TEST_CASE("factorize structure and round trip") {
  const Factorization f12 = factorize(12);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0] == PrimePower{2, 2});
  CHECK(f12.factors[1] == PrimePower{3, 1});

  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1).value() == 1);
  CHECK_THROWS_AS(factorize(0), std::domain_error);

  // 6000^3 shows up as the largest increment the cube runs ever add.
  const u64 cube = 6000ull * 6000 * 6000;
  const Factorization fc = factorize(cube);
  REQUIRE(fc.factors.size() == 3);
  CHECK(fc.factors[0] == PrimePower{2, 12});
  CHECK(fc.factors[1] == PrimePower{3, 3});
  CHECK(fc.factors[2] == PrimePower{5, 9});
  CHECK(fc.value() == cube);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const u64 n = rng() >> (rng() % 40);
    if (n == 0) continue;
    const Factorization f = factorize(n);
    CHECK(f.value() == n);
    u64 last = 0;
    for (const auto& [p, e] : f.factors) {
      CHECK(p > last);
      CHECK(is_prime(p));
      CHECK(e >= 1);
      last = p;
    }
  }
}

TEST_CASE("is_prime basics and a Mersenne prime") {
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(561));  // Carmichael

  const u64 m61 = (u64(1) << 61) - 1;
  REQUIRE(mersenne_prime(61));
  CHECK(is_prime(m61));
  CHECK_FALSE(is_prime(m61 - 2));

  const auto ph = phi_sieve(20'000);
  for (u64 n = 2; n <= 20'000; ++n) CHECK(is_prime(n) == (ph[n] == n - 1));
}

TEST_CASE("divisors in both orders") {
  CHECK(divisors(24) == std::vector<u64>{1, 2, 3, 4, 6, 8, 12, 24});
  CHECK(divisors(24, DivisorOrder::descending) ==
        std::vector<u64>{24, 12, 8, 6, 4, 3, 2, 1});
  CHECK(divisors(1) == std::vector<u64>{1});
  CHECK_THROWS_AS(divisors(0), std::domain_error);
}

TEST_CASE("phi is multiplicative on coprime pairs") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<u64> dist(1, 1u << 20);
  int checked = 0;
  while (checked < 500) {
    const u64 m = dist(rng), n = dist(rng);
    if (std::gcd(m, n) != 1) continue;
    CHECK(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
    ++checked;
  }
}

TEST_CASE("phi parity and the classic bounds") {
  for (u64 n = 3; n <= 5000; ++n) CHECK(euler_phi(n) % 2 == 0);
  for (u64 n = 1; n <= 5000; ++n) {
    const u64 phi = euler_phi(n);
    CHECK(phi <= n);
    CHECK((phi == n) == (n == 1));
    const u64 phi2n = euler_phi(2 * n);
    CHECK(phi2n <= n);
    const bool power_of_two = (n & (n - 1)) == 0;
    CHECK((phi2n == n) == power_of_two);
  }
}

TEST_CASE("PhiCache matches euler_phi on both paths") {
  const PhiCache cache(1u << 12, 1u << 16);
  CHECK(cache(1) == 1);
  CHECK(cache(12) == 4);
  CHECK_THROWS_AS(cache(0), std::domain_error);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const u64 n = 1 + (rng() % (1u << 24));  // straddles the sieve boundary
    CHECK(cache(n) == euler_phi(n));
    CHECK(cache(n) == euler_phi(n));  // cached second time
  }
}

TEST_CASE("PhiCache under concurrent hammering") {
  const PhiCache cache(1u << 10, 1u << 14);
  std::vector<std::thread> pool;
  std::array<bool, 4> ok{true, true, true, true};
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      std::mt19937_64 rng(1000 + t % 2);  // overlapping streams across threads
      for (int i = 0; i < 2000; ++i) {
        const u64 n = 1 + (rng() % (1u << 22));
        if (cache(n) != euler_phi(n)) ok[t] = false;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (bool t : ok) CHECK(t);
}
