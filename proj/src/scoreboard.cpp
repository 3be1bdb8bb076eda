#include "arboreal/scoreboard.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

namespace arboreal {

namespace {

using u64 = std::uint64_t;

u64 phi_of(const PhiCache* cache, u64 x) {
  return cache ? (*cache)(x) : euler_phi(x);
}

}  // namespace

PartialEvaluationTrace evaluate_trace(const IncrementSequence& seq, u64 n,
                                      const PhiCache* phi_cache) {
  if (n == 0) throw std::domain_error("evaluate_trace: n must be positive");
  if (auto count = seq.term_count(); count && n > *count)
    throw std::out_of_range("evaluate_trace: sequence exhausted before index " +
                            std::to_string(n));
  PartialEvaluationTrace trace;
  trace.n = n;
  trace.values.assign(n + 1, 0);
  u64 acc = 0;
  for (u64 k = n; k >= 1; --k) {
    const u64 a = seq.term(k);
    if (acc > std::numeric_limits<u64>::max() - a)
      throw std::overflow_error("evaluate_trace: increment sum exceeds 64 bits");
    acc = phi_of(phi_cache, a + acc);
    trace.values[k - 1] = acc;
  }
  return trace;
}

std::uint64_t scoreboard_value(const IncrementSequence& seq, u64 n,
                               const PhiCache* phi_cache) {
  if (n == 0) throw std::domain_error("scoreboard_value: n must be positive");
  if (auto count = seq.term_count(); count && n > *count)
    throw std::out_of_range("scoreboard_value: sequence exhausted before index " +
                            std::to_string(n));
  u64 acc = 0;
  for (u64 k = n; k >= 1; --k) acc = phi_of(phi_cache, seq.term(k) + acc);
  return acc;
}

std::vector<std::uint64_t> scoreboard_sequence(const IncrementSequence& seq,
                                               u64 n_max,
                                               const EvalOptions& options) {
  if (n_max == 0) throw std::domain_error("scoreboard_sequence: n_max must be positive");
  if (auto count = seq.term_count(); count && n_max > *count)
    throw std::out_of_range("scoreboard_sequence: sequence exhausted before index " +
                            std::to_string(n_max));
  std::vector<u64> out(n_max);
  unsigned threads = std::max(1u, options.threads);
  if (n_max < threads) threads = static_cast<unsigned>(n_max);
  if (threads == 1) {
    for (u64 n = 1; n <= n_max; ++n)
      out[n - 1] = scoreboard_value(seq, n, options.phi_cache);
    return out;
  }
  // Interleaved assignment balances the quadratic per-n cost.
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (u64 n = t + 1; n <= n_max; n += threads)
          out[n - 1] = scoreboard_value(seq, n, options.phi_cache);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace arboreal
