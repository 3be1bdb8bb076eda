#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace arboreal {

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization, factors in strictly ascending prime order.
// An empty factor list represents n = 1.
struct Factorization {
  std::vector<PrimePower> factors;

  std::uint64_t value() const;    // multiplies the factorization back out
  std::uint64_t totient() const;  // prod (p-1) * p^(e-1)
};

// Deterministic and exact over the whole 64-bit range. 0 and 1 are not prime.
bool is_prime(std::uint64_t n) noexcept;

// Trial division by small primes, then Miller-Rabin + Pollard-Brent rho for
// what remains. Deterministic. n = 0 raises std::domain_error.
Factorization factorize(std::uint64_t n);

// Euler's totient: the count of 1 <= y <= n coprime to n.
std::uint64_t euler_phi(std::uint64_t n);

// phi for every 1 <= i <= limit; entry [0] is a filler zero. Allocates
// 8 bytes per entry, so limit = 10^7 costs ~80 MB; the caller owns that
// trade. limit = 0 raises std::domain_error.
std::vector<std::uint64_t> phi_sieve(std::uint64_t limit);

enum class DivisorOrder { ascending, descending };

// All divisors of n, generated from the factorization and sorted per `order`.
std::vector<std::uint64_t> divisors(std::uint64_t n,
                                    DivisorOrder order = DivisorOrder::ascending);

// Memoizing phi evaluator for hot loops: a plain sieve below `small_limit`
// and a sharded hash map above it. Safe for concurrent use; results are
// identical to euler_phi regardless of thread interleaving. Inserts stop
// once a shard is full, lookups simply fall through to a fresh computation.
class PhiCache {
 public:
  explicit PhiCache(std::uint64_t small_limit = (1u << 22),
                    std::size_t max_entries = (1u << 22));

  std::uint64_t operator()(std::uint64_t n) const;

 private:
  static constexpr std::size_t kShards = 64;

  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<std::uint64_t, std::uint64_t> map;
  };

  std::vector<std::uint32_t> small_;  // small_[i] = phi(i) for i < small_.size()
  mutable std::array<Shard, kShards> shards_;
  std::size_t shard_capacity_;
};

}  // namespace arboreal
