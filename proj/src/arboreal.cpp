#include "arboreal/arboreal.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

#include "arboreal/errors.hpp"

namespace arboreal {

namespace {

using u64 = std::uint64_t;

// Effective growth ceiling: the height cap, shortened when the sequence is
// finite. Expansion from height k needs term k+1.
struct Ceiling {
  u64 height;
  bool from_exhaustion;
};

Ceiling effective_ceiling(const IncrementSequence& seq, const GrowthCaps& caps) {
  if (auto count = seq.term_count(); count && *count < caps.height_cap)
    return {*count, true};
  return {caps.height_cap, false};
}

const std::vector<u64>& fiber_of(FiberCache* cache, FiberCache& fallback, u64 m,
                                 std::shared_ptr<const std::vector<u64>>& keep) {
  keep = (cache ? *cache : fallback).get(m);
  return *keep;
}

}  // namespace

std::string to_string(TreeStatusKind kind) {
  switch (kind) {
    case TreeStatusKind::died: return "died";
    case TreeStatusKind::survived: return "survived";
    case TreeStatusKind::overgrown: return "overgrown";
    case TreeStatusKind::node_capped: return "node_capped";
  }
  return "?";
}

FruitResult fruit(u64 x, u64 k, const IncrementSequence& seq,
                  const BoundProvider& bound, const GrowthCaps& caps,
                  FiberCache* fiber_cache) {
  FiberCache local_cache;
  const Ceiling ceiling = effective_ceiling(seq, caps);

  FruitResult result;
  u64 max_live_height = 0;
  bool any_live = false;
  bool at_ceiling = false;
  u64 visited = 0;

  struct Frame {
    u64 value;
    u64 height;
  };
  std::vector<Frame> stack;
  stack.push_back({x, k});

  while (!stack.empty()) {
    const Frame frame = stack.back();
    stack.pop_back();

    if (frame.value == 0) {
      result.heights.push_back(frame.height);
      continue;
    }
    if (frame.value > bound.at(frame.height)) continue;

    any_live = true;
    max_live_height = std::max(max_live_height, frame.height);
    if (++visited > caps.node_cap) {
      result.status = {TreeStatusKind::node_capped, frame.height};
      std::sort(result.heights.begin(), result.heights.end());
      return result;
    }
    if (frame.height >= ceiling.height) {
      at_ceiling = true;
      continue;
    }

    const u64 a_next = seq.term(frame.height + 1);
    std::shared_ptr<const std::vector<u64>> keep;
    for (u64 w : fiber_of(fiber_cache, local_cache, frame.value, keep)) {
      if (w < a_next) continue;
      stack.push_back({w - a_next, frame.height + 1});
    }
  }

  if (at_ceiling) {
    result.status = {ceiling.from_exhaustion ? TreeStatusKind::overgrown
                                             : TreeStatusKind::survived,
                     ceiling.height};
  } else {
    result.status = {TreeStatusKind::died, any_live ? max_live_height : k};
  }
  std::sort(result.heights.begin(), result.heights.end());
  result.heights.erase(
      std::unique(result.heights.begin(), result.heights.end()),
      result.heights.end());
  return result;
}

TotientTree grow_tree(u64 root, const IncrementSequence& seq,
                      const BoundProvider& bound, const GrowthCaps& caps,
                      const GrowOptions& options) {
  if (root == 0) throw std::domain_error("grow_tree: root must be positive");
  FiberCache local_cache;
  FiberCache& cache = options.fiber_cache ? *options.fiber_cache : local_cache;
  const Ceiling ceiling = effective_ceiling(seq, caps);

  TotientTree tree;
  tree.root = root;
  tree.levels.push_back({root});
  tree.node_count = 1;

  if (root > bound.at(0)) {
    tree.status = {TreeStatusKind::died, 0};
    return tree;
  }

  u64 k = 0;
  while (true) {
    if (k >= ceiling.height) {
      tree.status = {ceiling.from_exhaustion ? TreeStatusKind::overgrown
                                             : TreeStatusKind::survived,
                     ceiling.height};
      break;
    }
    const u64 a_next = seq.term(k + 1);
    const u64 next_bound = bound.at(k + 1);
    const std::vector<u64>& level = tree.levels[k];

    std::vector<u64> next;
    bool fruit_here = false;
    auto expand_range = [&](std::size_t lo, std::size_t hi, std::vector<u64>& out,
                            bool& fruit_out) {
      for (std::size_t i = lo; i < hi; ++i) {
        auto fiber = cache.get(level[i]);
        for (u64 w : *fiber) {
          if (w < a_next) continue;
          const u64 y = w - a_next;
          if (y == 0) {
            fruit_out = true;
          } else if (y <= next_bound) {
            out.push_back(y);
          }
        }
      }
    };

    const unsigned threads = options.threads;
    if (threads > 1 && level.size() >= 2 * threads && level.size() >= 64) {
      std::vector<std::vector<u64>> parts(threads);
      std::vector<char> fruit_parts(threads, 0);
      std::vector<std::exception_ptr> errors(threads);
      std::vector<std::thread> pool;
      const std::size_t chunk = (level.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = std::min<std::size_t>(t * chunk, level.size());
        const std::size_t hi = std::min<std::size_t>(lo + chunk, level.size());
        pool.emplace_back([&, t, lo, hi] {
          try {
            bool fr = false;
            expand_range(lo, hi, parts[t], fr);
            fruit_parts[t] = fr ? 1 : 0;
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
      for (unsigned t = 0; t < threads; ++t) {
        next.insert(next.end(), parts[t].begin(), parts[t].end());
        fruit_here = fruit_here || fruit_parts[t];
      }
    } else {
      expand_range(0, level.size(), next, fruit_here);
    }

    if (fruit_here) tree.fruit_heights.push_back(k + 1);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());

    if (next.empty()) {
      tree.status = {TreeStatusKind::died, k};
      break;
    }
    tree.node_count += next.size();
    tree.levels.push_back(std::move(next));
    ++k;
    if (tree.node_count > caps.node_cap) {
      tree.status = {TreeStatusKind::node_capped, k};
      break;
    }
  }
  return tree;
}

namespace {

// Resolves node-capped trees whose roots demonstrably recur: a scoreboard
// value equal to the root at some n past the cap supplies a chain of
// partial evaluations occupying every height up to the cap. The chain must
// also respect the bound, which is checked directly rather than assumed.
void probe_survivors(ForestReport& report, const GrowOptions& options) {
  if (options.survival_probe_range == 0) return;
  std::vector<TotientTree*> pending;
  for (TotientTree& tree : report.trees)
    if (tree.status.kind == TreeStatusKind::node_capped) pending.push_back(&tree);
  if (pending.empty()) return;
  if (report.sequence.term_count())
    return;  // finite sequences cannot certify heights past their end

  const u64 cap = report.caps.height_cap;
  const PhiCache phi_cache;
  for (u64 n = cap + 1; n <= cap + options.survival_probe_range; ++n) {
    const PartialEvaluationTrace trace = evaluate_trace(report.sequence, n, &phi_cache);
    const u64 value = trace.final_value();
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (pending[i]->root != value) continue;
      bool in_bound = true;
      for (u64 k = 0; k <= cap && in_bound; ++k)
        in_bound = trace.values[k] <= report.bound.at(k);
      if (!in_bound) continue;
      pending[i]->status = {TreeStatusKind::survived, cap};
      pending[i]->survival_witness = n;
      pending.erase(pending.begin() + i);
      break;
    }
    if (pending.empty()) break;
  }
}

}  // namespace

ForestReport grow_forest(const IncrementSequence& seq, const BoundProvider& bound,
                         const GrowthCaps& caps, const GrowOptions& options) {
  if (bound.unbounded())
    throw std::domain_error(
        "grow_forest: needs a bound with finite b_0 to enumerate roots");
  const u64 b0 = bound.at(0);

  ForestReport report{seq, bound, caps, {}};
  FiberCache local_cache;
  GrowOptions tree_options = options;
  if (tree_options.fiber_cache == nullptr) tree_options.fiber_cache = &local_cache;

  std::vector<u64> roots{1};
  for (u64 x = 2; x <= b0; x += 2) roots.push_back(x);
  report.trees.reserve(roots.size());
  for (u64 root : roots)
    report.trees.push_back(grow_tree(root, seq, bound, caps, tree_options));
  probe_survivors(report, options);
  return report;
}

CaseEquation synthesize_case_equation(const ForestReport& forest) {
  CaseEquation eq;
  std::vector<const TotientTree*> survivors;
  std::string trouble;
  for (const TotientTree& tree : forest.trees) {
    switch (tree.status.kind) {
      case TreeStatusKind::survived:
        survivors.push_back(&tree);
        break;
      case TreeStatusKind::died:
        break;
      default:
        if (!trouble.empty()) trouble += ", ";
        trouble += "root " + std::to_string(tree.root) + " " +
                   to_string(tree.status.kind) + " at height " +
                   std::to_string(tree.status.height);
    }
  }
  if (!trouble.empty()) {
    eq.detail = "unresolved trees: " + trouble;
    return eq;
  }
  if (survivors.size() != 1) {
    eq.detail = "expected exactly one surviving tree, found " +
                std::to_string(survivors.size());
    if (!survivors.empty()) {
      eq.detail += " (roots";
      for (const TotientTree* t : survivors)
        eq.detail += " " + std::to_string(t->root);
      eq.detail += ")";
    }
    return eq;
  }

  u64 max_height = 0;
  for (const TotientTree& tree : forest.trees) {
    if (tree.status.kind != TreeStatusKind::died || tree.fruit_heights.empty())
      continue;
    eq.cases.push_back({tree.root, tree.fruit_heights});
    max_height = std::max(max_height, tree.fruit_heights.back());
  }
  std::sort(eq.cases.begin(), eq.cases.end(),
            [](const CaseEquation::Case& a, const CaseEquation::Case& b) {
              return a.value < b.value;
            });
  eq.otherwise = survivors.front()->root;
  eq.conclusive = true;

  // Every claimed row must agree with direct evaluation, and a stretch of
  // "otherwise" heights beyond the finite rows must hit the survivor.
  const PhiCache phi_cache(1u << 20);
  std::vector<u64> covered;  // heights claimed by finite rows
  for (const CaseEquation::Case& c : eq.cases) {
    for (u64 h : c.heights) {
      const u64 direct = scoreboard_value(forest.sequence, h, &phi_cache);
      if (direct != c.value)
        throw consistency_error(
            "case equation mismatch: tree " + std::to_string(c.value) +
            " claims n = " + std::to_string(h) + " but direct evaluation gives " +
            std::to_string(direct));
      covered.push_back(h);
    }
  }
  std::sort(covered.begin(), covered.end());
  u64 sample_to = max_height + 32;
  if (auto count = forest.sequence.term_count())
    sample_to = std::min<u64>(sample_to, *count);
  for (u64 n = 1; n <= sample_to; ++n) {
    if (std::binary_search(covered.begin(), covered.end(), n)) continue;
    const u64 direct = scoreboard_value(forest.sequence, n, &phi_cache);
    if (direct != *eq.otherwise)
      throw consistency_error(
          "case equation mismatch: n = " + std::to_string(n) +
          " should fall to the surviving tree " + std::to_string(*eq.otherwise) +
          " but direct evaluation gives " + std::to_string(direct));
  }
  return eq;
}

}  // namespace arboreal
