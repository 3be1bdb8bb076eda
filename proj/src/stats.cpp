#include "arboreal/stats.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "arboreal/errors.hpp"

namespace arboreal {

namespace {

using u64 = std::uint64_t;

// Multiplicity propagation down the levels. Each value at height k+1 has the
// unique parent phi(value + a_{k+1}), so this reproduces distinct counting;
// it exists to make that equivalence testable rather than assumed.
std::vector<u64> path_multiplicity_profile(const TotientTree& tree,
                                           const IncrementSequence& seq) {
  std::vector<u64> counts(tree.levels.size(), 0);
  std::unordered_map<u64, u64> mult{{tree.root, 1}};
  counts[0] = 1;
  for (std::size_t k = 0; k + 1 < tree.levels.size(); ++k) {
    const u64 a_next = seq.term(k + 1);
    std::unordered_map<u64, u64> next;
    u64 total = 0;
    for (u64 y : tree.levels[k + 1]) {
      const u64 parent = euler_phi(y + a_next);
      auto it = mult.find(parent);
      if (it == mult.end())
        throw consistency_error("path multiplicity: orphan value at height " +
                                std::to_string(k + 1));
      next.emplace(y, it->second);
      total += it->second;
    }
    counts[k + 1] = total;
    mult = std::move(next);
  }
  return counts;
}

}  // namespace

std::vector<std::pair<u64, u64>> tree_size_profile(const TotientTree& tree) {
  std::vector<std::pair<u64, u64>> profile;
  profile.reserve(tree.levels.size() + 1);
  for (std::size_t k = 0; k < tree.levels.size(); ++k)
    profile.emplace_back(k, tree.levels[k].size());
  if (tree.status.kind == TreeStatusKind::died)
    profile.emplace_back(tree.levels.size(), 0);
  return profile;
}

std::vector<std::pair<u64, u64>> tree_size_profile(const TotientTree& tree,
                                                   const IncrementSequence& seq,
                                                   CountMode mode) {
  if (mode == CountMode::distinct_values) return tree_size_profile(tree);
  const std::vector<u64> counts = path_multiplicity_profile(tree, seq);
  std::vector<std::pair<u64, u64>> profile;
  profile.reserve(counts.size() + 1);
  for (std::size_t k = 0; k < counts.size(); ++k) profile.emplace_back(k, counts[k]);
  if (tree.status.kind == TreeStatusKind::died)
    profile.emplace_back(counts.size(), 0);
  return profile;
}

std::vector<CanopyLevel> canopy_density(const ForestReport& forest, CountMode mode) {
  std::size_t max_levels = 0;
  for (const TotientTree& tree : forest.trees)
    max_levels = std::max(max_levels, tree.levels.size());

  std::vector<CanopyLevel> out(max_levels);
  for (std::size_t k = 0; k < max_levels; ++k) out[k].height = k;
  for (const TotientTree& tree : forest.trees) {
    std::vector<u64> counts;
    if (mode == CountMode::path_multiplicity)
      counts = path_multiplicity_profile(tree, forest.sequence);
    for (std::size_t k = 0; k < tree.levels.size(); ++k) {
      const u64 c = mode == CountMode::path_multiplicity
                        ? counts[k]
                        : tree.levels[k].size();
      if (c == 0) continue;
      out[k].root_counts.emplace_back(tree.root, c);
      out[k].total += c;
    }
  }
  for (CanopyLevel& level : out)
    std::sort(level.root_counts.begin(), level.root_counts.end());
  return out;
}

std::vector<RollingShareRow> fruit_rolling_share(const std::vector<u64>& values,
                                                 u64 window) {
  if (window == 0) throw std::domain_error("rolling share: window must be positive");
  if (window > values.size())
    throw std::domain_error("rolling share: window exceeds the value range");
  std::vector<RollingShareRow> rows;
  std::map<u64, u64> counts;  // ordered so emission ascends by value
  for (std::size_t i = 0; i < values.size(); ++i) {
    ++counts[values[i]];
    if (i + 1 < window) continue;
    if (i + 1 > window) {
      const u64 leaving = values[i - window];
      auto it = counts.find(leaving);
      if (--(it->second) == 0) counts.erase(it);
    }
    for (const auto& [value, count] : counts)
      rows.push_back({i + 1, value, count, window});
  }
  return rows;
}

std::vector<RollingShareRow> fruit_rolling_share(const IncrementSequence& seq,
                                                 u64 n_max, u64 window,
                                                 const EvalOptions& options) {
  return fruit_rolling_share(scoreboard_sequence(seq, n_max, options), window);
}

const FrequencyTable::Row* FrequencyTable::find(u64 value) const {
  for (const Row& row : rows)
    if (row.value == value) return &row;
  return nullptr;
}

FrequencyTable value_frequencies(const std::vector<u64>& values) {
  FrequencyTable table;
  table.n_max = values.size();
  std::map<u64, std::vector<u64>> occurrences;
  for (std::size_t i = 0; i < values.size(); ++i)
    occurrences[values[i]].push_back(i + 1);
  for (auto& [value, ns] : occurrences) {
    FrequencyTable::Row row;
    row.value = value;
    row.count = ns.size();
    if (ns.size() <= kOccurrenceListMax) row.occurrences = std::move(ns);
    table.rows.push_back(std::move(row));
  }
  return table;
}

FrequencyTable value_frequencies(const IncrementSequence& seq, u64 n_max,
                                 const EvalOptions& options) {
  return value_frequencies(scoreboard_sequence(seq, n_max, options));
}

}  // namespace arboreal
