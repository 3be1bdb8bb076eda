#include "arboreal/inverse_totient.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "arboreal/errors.hpp"

namespace arboreal {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Candidate {
  u64 value;
  u64 phi;
};

}  // namespace

TotientFiber totient_fiber(u64 m, DivisorOrder order) {
  if (m == 0) throw std::domain_error("totient_fiber: m must be positive");

  TotientFiber fiber;
  fiber.m = m;
  if (m == 1) fiber.members.push_back(1);  // phi(1) = 1; the general pass yields 2

  // Candidates are coprime products of prime powers whose totient divides m
  // but has not reached it. Extending a candidate multiplies its totient, so
  // exact hits are emitted and never re-extended; the only extension of a hit
  // that preserves the totient is doubling an odd value, handled inline.
  std::vector<Candidate> candidates{{1, 1}};
  for (u64 d : divisors(m, order)) {
    if (d == std::numeric_limits<u64>::max() || !is_prime(d + 1)) continue;
    const u64 p = d + 1;
    std::vector<Candidate> with_p;
    for (const Candidate& c : candidates) {
      // phi(c.value * p^k) = c.phi * (p-1) * p^(k-1), coprimality guaranteed
      // because each prime is visited once.
      u128 phi = u128(c.phi) * (p - 1);
      u128 value = u128(c.value) * p;
      while (phi <= m && m % static_cast<u64>(phi) == 0) {
        if (value > std::numeric_limits<u64>::max())
          throw std::overflow_error("totient_fiber: preimage exceeds 64 bits");
        const u64 v = static_cast<u64>(value);
        if (phi == m) {
          fiber.members.push_back(v);
          if (v & 1) fiber.members.push_back(2 * v);
          break;  // further powers of p overshoot m
        }
        with_p.push_back({v, static_cast<u64>(phi)});
        phi *= p;
        value *= p;
      }
    }
    candidates.insert(candidates.end(), with_p.begin(), with_p.end());
  }

  std::sort(fiber.members.begin(), fiber.members.end());
  fiber.members.erase(std::unique(fiber.members.begin(), fiber.members.end()),
                      fiber.members.end());
  return fiber;
}

TotientFiber totient_fiber_bruteforce(u64 m, u64 sieve_budget) {
  if (m == 0) throw std::domain_error("totient_fiber_bruteforce: m must be positive");
  const u128 wanted = u128(2) * m * m;
  if (wanted > sieve_budget)
    throw resource_error("totient_fiber_bruteforce: scan limit " +
                         std::to_string(static_cast<double>(wanted)) +
                         " exceeds sieve budget " + std::to_string(sieve_budget));
  const u64 limit = static_cast<u64>(wanted);
  const std::vector<u64> ph = phi_sieve(limit);
  TotientFiber fiber;
  fiber.m = m;
  for (u64 n = 1; n <= limit; ++n) {
    if (ph[n] == m) fiber.members.push_back(n);
  }
  return fiber;
}

std::vector<std::vector<u64>> totient_fibers_bruteforce_upto(u64 m_max,
                                                             u64 sieve_budget) {
  if (m_max == 0)
    throw std::domain_error("totient_fibers_bruteforce_upto: m_max must be positive");
  const u128 wanted = u128(2) * m_max * m_max;
  if (wanted > sieve_budget)
    throw resource_error("totient_fibers_bruteforce_upto: scan limit exceeds budget");
  const u64 limit = static_cast<u64>(wanted);
  const std::vector<u64> ph = phi_sieve(limit);
  std::vector<std::vector<u64>> fibers(m_max + 1);
  for (u64 n = 1; n <= limit; ++n) {
    if (ph[n] <= m_max) fibers[ph[n]].push_back(n);
  }
  return fibers;
}

FiberCache::FiberCache(std::size_t max_entries)
    : shard_capacity_(max_entries / kShards + 1) {}

std::shared_ptr<const std::vector<u64>> FiberCache::get(u64 m) {
  Shard& sh = shards_[(m * 0x9e3779b97f4a7c15ull) >> 58];
  {
    std::lock_guard<std::mutex> lock(sh.mu);
    auto it = sh.map.find(m);
    if (it != sh.map.end()) return it->second;
  }
  auto fiber = std::make_shared<const std::vector<u64>>(
      totient_fiber(m).members);
  {
    std::lock_guard<std::mutex> lock(sh.mu);
    auto it = sh.map.find(m);
    if (it != sh.map.end()) return it->second;
    if (sh.map.size() < shard_capacity_) sh.map.emplace(m, fiber);
  }
  return fiber;
}

std::size_t FiberCache::size() const {
  std::size_t total = 0;
  for (const Shard& sh : shards_) {
    std::lock_guard<std::mutex> lock(sh.mu);
    total += sh.map.size();
  }
  return total;
}

}  // namespace arboreal
