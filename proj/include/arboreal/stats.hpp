#pragma once

#include <cstdint>
#include <vector>

#include "arboreal/arboreal.hpp"
#include "arboreal/scoreboard.hpp"
#include "arboreal/sequence.hpp"

namespace arboreal {

enum class CountMode {
  distinct_values,    // canonical: one node per distinct value at a height
  path_multiplicity,  // root-paths per value; equal here because each value
                      // at height k+1 has exactly one parent value
};

// (height, node count) pairs; a dead tree gets a final zero-count entry at
// the height where its expansion emptied. The path-multiplicity overload
// needs the sequence to recover each value's parent.
std::vector<std::pair<std::uint64_t, std::uint64_t>> tree_size_profile(
    const TotientTree& tree);
std::vector<std::pair<std::uint64_t, std::uint64_t>> tree_size_profile(
    const TotientTree& tree, const IncrementSequence& seq, CountMode mode);

// Per-height breakdown of which tree owns the forest's nodes. Counts are
// exact; shares are emitted as count/total only at serialization time.
struct CanopyLevel {
  std::uint64_t height = 0;
  std::uint64_t total = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> root_counts;  // root asc
};

std::vector<CanopyLevel> canopy_density(const ForestReport& forest,
                                        CountMode mode = CountMode::distinct_values);

// Trailing-window share of each scoreboard value: at position n the window
// covers (n - window, n]. Rows for n in [window, n_max], value-ascending.
struct RollingShareRow {
  std::uint64_t n = 0;
  std::uint64_t value = 0;
  std::uint64_t count = 0;
  std::uint64_t window = 0;
};

std::vector<RollingShareRow> fruit_rolling_share(const std::vector<std::uint64_t>& values,
                                                 std::uint64_t window);
std::vector<RollingShareRow> fruit_rolling_share(const IncrementSequence& seq,
                                                 std::uint64_t n_max,
                                                 std::uint64_t window,
                                                 const EvalOptions& options = {});

// Exact occurrence counts of scoreboard values over n in [1, n_max]. The
// occurrence list is materialized only for values seen at most
// kOccurrenceListMax times, enough to pin down the finite rows.
inline constexpr std::uint64_t kOccurrenceListMax = 64;

struct FrequencyTable {
  struct Row {
    std::uint64_t value = 0;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> occurrences;  // only when count <= kOccurrenceListMax
  };

  std::uint64_t n_max = 0;
  std::vector<Row> rows;  // value-ascending

  const Row* find(std::uint64_t value) const;
};

FrequencyTable value_frequencies(const std::vector<std::uint64_t>& values);
FrequencyTable value_frequencies(const IncrementSequence& seq, std::uint64_t n_max,
                                 const EvalOptions& options = {});

}  // namespace arboreal
