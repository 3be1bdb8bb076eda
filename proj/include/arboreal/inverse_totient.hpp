#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "arboreal/totient.hpp"

namespace arboreal {

// The complete preimage set of Euler's totient at m. Possibly empty
// (m = 14 being the smallest even example). Members ascend strictly.
struct TotientFiber {
  std::uint64_t m = 0;
  std::vector<std::uint64_t> members;

  friend bool operator==(const TotientFiber&, const TotientFiber&) = default;
};

// Enumerates { n : phi(n) = m } via candidate growth over the primes p with
// p - 1 dividing m. Each candidate is a product of distinct prime powers
// whose totient properly divides m; a candidate whose totient hits m exactly
// is emitted (together with its double when odd, since phi(2x) = phi(x) for
// odd x). The divisor iteration order does not affect the returned set, but
// descending tends to run faster because large-prime candidates wash out of
// the divisibility test early.
TotientFiber totient_fiber(std::uint64_t m,
                           DivisorOrder order = DivisorOrder::descending);

inline constexpr std::uint64_t kDefaultSieveBudget = 50'000'000;

// Independent oracle: sieves phi over [1, 2m^2] and collects matches.
// Complete because phi(n) >= sqrt(n/2), so every preimage of m is <= 2m^2.
// Raises resource_error when 2m^2 exceeds `sieve_budget`.
TotientFiber totient_fiber_bruteforce(std::uint64_t m,
                                      std::uint64_t sieve_budget = kDefaultSieveBudget);

// Bucketed variant of the oracle: one sieve over [1, 2*m_max^2] yields the
// fibers of every m <= m_max at once. Entry [m] is the fiber of m.
std::vector<std::vector<std::uint64_t>> totient_fibers_bruteforce_upto(
    std::uint64_t m_max, std::uint64_t sieve_budget = kDefaultSieveBudget);

// Concurrent value -> fiber memo. get() always returns the full fiber of m;
// duplicate concurrent computations are possible and harmless (idempotent
// inserts). Entries stop being added once `max_entries` is reached.
class FiberCache {
 public:
  explicit FiberCache(std::size_t max_entries = (1u << 21));

  std::shared_ptr<const std::vector<std::uint64_t>> get(std::uint64_t m);

  std::size_t size() const;

 private:
  static constexpr std::size_t kShards = 64;

  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<std::uint64_t,
                       std::shared_ptr<const std::vector<std::uint64_t>>>
        map;
  };

  std::array<Shard, kShards> shards_;
  std::size_t shard_capacity_;
};

}  // namespace arboreal
