#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arboreal/bounds.hpp"
#include "arboreal/inverse_totient.hpp"
#include "arboreal/sequence.hpp"

namespace arboreal {

enum class TreeStatusKind {
  died,       // no continuation above the last nonempty level
  survived,   // still alive at the height cap
  overgrown,  // the increment sequence ran out while the tree was alive
  node_capped // the node budget tripped before the tree resolved
};

struct TreeStatus {
  TreeStatusKind kind = TreeStatusKind::died;
  // died: last height with a live node; survived: the cap; overgrown: the
  // height whose expansion needed a missing term; node_capped: the height
  // reached when the budget tripped.
  std::uint64_t height = 0;

  friend bool operator==(const TreeStatus&, const TreeStatus&) = default;
};

std::string to_string(TreeStatusKind kind);

// One totient tree: levels[k] holds the distinct values a partial evaluation
// k steps above the root can take, pruned below by empty fibers and above by
// the bound. A zero arising at height h is recorded as a fruit, certifying
// that the scoreboard value at n = h equals the root.
struct TotientTree {
  std::uint64_t root = 0;
  std::vector<std::vector<std::uint64_t>> levels;  // nonempty level sets
  std::vector<std::uint64_t> fruit_heights;        // ascending
  TreeStatus status;
  std::uint64_t node_count = 0;
  // Set when survival was certified by a realized chain instead of full
  // level materialization: the trace of this n runs through the tree and
  // stays under the bound up to the cap.
  std::optional<std::uint64_t> survival_witness;
};

struct GrowthCaps {
  std::uint64_t height_cap = 2000;
  std::uint64_t node_cap = 10'000'000;
};

struct GrowOptions {
  unsigned threads = 1;
  FiberCache* fiber_cache = nullptr;
  // grow_forest only: a tree that trips the node cap is re-examined for a
  // scoreboard occurrence of its root at some n in (height_cap,
  // height_cap + survival_probe_range]. Such an n certifies a live in-bound
  // chain at every height up to the cap, so the tree is marked survived
  // with that witness. 0 disables the probe. Death is never probed: an
  // emptied expansion is already exact.
  std::uint64_t survival_probe_range = 1000;
};

// Depth-first search in the style of the recursive fruit procedure: yields
// every height where the expansion of (x at height k) reaches zero, plus the
// terminal status. No cross-branch bookkeeping; useful as the reference for
// the level-set grower.
struct FruitResult {
  std::vector<std::uint64_t> heights;
  TreeStatus status;
};

FruitResult fruit(std::uint64_t x, std::uint64_t k, const IncrementSequence& seq,
                  const BoundProvider& bound, const GrowthCaps& caps = {},
                  FiberCache* fiber_cache = nullptr);

// Breadth-wise grower materializing level sets; equal values at equal height
// merge, which loses nothing because a value at height k+1 determines its
// parent at height k.
TotientTree grow_tree(std::uint64_t root, const IncrementSequence& seq,
                      const BoundProvider& bound, const GrowthCaps& caps = {},
                      const GrowOptions& options = {});

struct ForestReport {
  IncrementSequence sequence;
  BoundProvider bound;
  GrowthCaps caps;
  std::vector<TotientTree> trees;  // root-ascending
};

// One tree per candidate root: 1 together with every even value up to b_0
// (odd values above 1 are never totient values). Requires a finite b_0.
ForestReport grow_forest(const IncrementSequence& seq, const BoundProvider& bound,
                         const GrowthCaps& caps = {}, const GrowOptions& options = {});

// Closed-form description assembled from a fully resolved forest: each dead
// fruitful tree contributes its finite height list, the single survivor
// becomes the "otherwise" row. Any other status pattern is inconclusive.
// Every emitted row is cross-checked against direct evaluation; a mismatch
// raises consistency_error.
struct CaseEquation {
  struct Case {
    std::uint64_t value = 0;
    std::vector<std::uint64_t> heights;
  };

  bool conclusive = false;
  std::vector<Case> cases;               // value-ascending, conclusive only
  std::optional<std::uint64_t> otherwise;
  std::string detail;                    // status summary when inconclusive
};

CaseEquation synthesize_case_equation(const ForestReport& forest);

}  // namespace arboreal
