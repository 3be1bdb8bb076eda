#pragma once

#include <cstdint>
#include <vector>

#include "arboreal/sequence.hpp"
#include "arboreal/totient.hpp"

namespace arboreal {

// Partial evaluations of one nested totient expression: values[k] holds the
// result after the innermost n - k increments have been folded, so
// values[n] = 0, values[k-1] = phi(a_k + values[k]), and values[0] is the
// scoreboard value.
struct PartialEvaluationTrace {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> values;  // indexed by k, size n + 1

  std::uint64_t final_value() const { return values.front(); }
};

struct EvalOptions {
  unsigned threads = 1;
  const PhiCache* phi_cache = nullptr;
};

PartialEvaluationTrace evaluate_trace(const IncrementSequence& seq, std::uint64_t n,
                                      const PhiCache* phi_cache = nullptr);

std::uint64_t scoreboard_value(const IncrementSequence& seq, std::uint64_t n,
                               const PhiCache* phi_cache = nullptr);

// Entry [i] is the scoreboard value at n = i + 1. Each n is evaluated
// independently; the shared phi cache is the only reuse across entries.
std::vector<std::uint64_t> scoreboard_sequence(const IncrementSequence& seq,
                                               std::uint64_t n_max,
                                               const EvalOptions& options = {});

}  // namespace arboreal
