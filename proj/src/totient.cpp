#include "arboreal/totient.hpp"

#include <algorithm>
#include <stdexcept>

#include "arboreal/errors.hpp"

namespace arboreal {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

// One strong-probable-prime round. n odd, n-1 = d * 2^s.
bool sprp(u64 n, u64 a, u64 d, unsigned s) {
  a %= n;
  if (a == 0) return true;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Primes below 2^16, shared by trial division and divisor-candidate checks.
const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t kLimit = 1u << 16;
    std::vector<bool> composite(kLimit, false);
    std::vector<std::uint32_t> ps;
    for (std::uint32_t i = 2; i < kLimit; ++i) {
      if (composite[i]) continue;
      ps.push_back(i);
      for (std::uint64_t j = std::uint64_t(i) * i; j < kLimit; j += i)
        composite[j] = true;
    }
    return ps;
  }();
  return primes;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Pollard-Brent rho. n must be odd, composite and have no factor <= 255.
// Fully deterministic: fixed start, increment stepped on failure.
u64 rho_split(u64 n) {
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 v) { return static_cast<u64>((u128(v) * v + c) % n); };
    u64 x = 2, y = 2, ys = 2, d = 1, q = 1;
    const u64 batch = 64;
    for (u64 r = 1; d == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && d == 1; k += batch) {
        ys = y;
        const u64 stop = std::min(batch, r - k);
        for (u64 i = 0; i < stop; ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        d = gcd_u64(q, n);
      }
    }
    if (d == n) {
      // Batched gcd overshot; replay one step at a time from the checkpoint.
      d = 1;
      while (d == 1) {
        ys = step(ys);
        d = gcd_u64(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = rho_split(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  if (n < 3'215'031'751ull)
    return sprp(n, 2, d, s) && sprp(n, 3, d, s) && sprp(n, 5, d, s) &&
           sprp(n, 7, d, s);
  // Sinclair base set: deterministic for every 64-bit n.
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                1795265022ull}) {
    if (!sprp(n, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  Factorization f;
  if (n == 1) return f;
  std::vector<u64> primes;
  for (std::uint32_t p : small_primes()) {
    if (p > 255) break;
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
    if (u64(p) * p > n) break;
  }
  if (n > 1) {
    if (n < 256 * 256) {
      primes.push_back(n);
    } else {
      factor_into(n, primes);
    }
  }
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!f.factors.empty() && f.factors.back().prime == p) {
      ++f.factors.back().exponent;
    } else {
      f.factors.push_back({p, 1});
    }
  }
  return f;
}

std::uint64_t Factorization::value() const {
  u128 v = 1;
  for (const auto& [p, e] : factors) {
    for (std::uint32_t i = 0; i < e; ++i) {
      v *= p;
      if (v > ~0ull) throw std::overflow_error("Factorization::value overflows 64 bits");
    }
  }
  return static_cast<u64>(v);
}

std::uint64_t Factorization::totient() const {
  u64 r = 1;
  for (const auto& [p, e] : factors) {
    r *= p - 1;
    for (std::uint32_t i = 1; i < e; ++i) r *= p;
  }
  return r;
}

std::uint64_t euler_phi(u64 n) {
  if (n == 0) throw std::domain_error("euler_phi: n must be positive");
  return factorize(n).totient();
}

std::vector<std::uint64_t> phi_sieve(u64 limit) {
  if (limit == 0) throw std::domain_error("phi_sieve: limit must be positive");
  std::vector<u64> ph(limit + 1);
  for (u64 i = 0; i <= limit; ++i) ph[i] = i;
  ph[0] = 0;
  for (u64 i = 2; i <= limit; ++i) {
    if (ph[i] != i) continue;  // i composite once visited by a smaller prime
    for (u64 j = i; j <= limit; j += i) ph[j] -= ph[j] / i;
  }
  return ph;
}

std::vector<std::uint64_t> divisors(u64 n, DivisorOrder order) {
  if (n == 0) throw std::domain_error("divisors: n must be positive");
  Factorization f = factorize(n);
  std::vector<u64> ds{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = ds.size();
    u64 pk = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  if (order == DivisorOrder::descending) std::reverse(ds.begin(), ds.end());
  return ds;
}

PhiCache::PhiCache(u64 small_limit, std::size_t max_entries)
    : shard_capacity_(max_entries / kShards + 1) {
  if (small_limit > (1ull << 31)) small_limit = 1ull << 31;
  if (small_limit < 2) small_limit = 2;
  small_.resize(small_limit);
  for (u64 i = 0; i < small_limit; ++i) small_[i] = static_cast<std::uint32_t>(i);
  for (u64 i = 2; i < small_limit; ++i) {
    if (small_[i] != i) continue;
    for (u64 j = i; j < small_limit; j += i) small_[j] -= small_[j] / i;
  }
}

std::uint64_t PhiCache::operator()(u64 n) const {
  if (n < small_.size()) {
    if (n == 0) throw std::domain_error("euler_phi: n must be positive");
    return small_[n];
  }
  Shard& sh = shards_[(n * 0x9e3779b97f4a7c15ull) >> 58];
  {
    std::lock_guard<std::mutex> lock(sh.mu);
    auto it = sh.map.find(n);
    if (it != sh.map.end()) return it->second;
  }
  u64 phi = euler_phi(n);
  {
    std::lock_guard<std::mutex> lock(sh.mu);
    if (sh.map.size() < shard_capacity_) sh.map.emplace(n, phi);
  }
  return phi;
}

}  // namespace arboreal
