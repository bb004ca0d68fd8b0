#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "squarefold/surface.hpp"

namespace squarefold {

// Key for a gluing modulo square relabeling and per-square dihedral
// relabeling. A connected gluing's code is the square count followed by one
// breadth-first edge record per (square, side), minimized over all
// (seed square, dihedral frame) pairs; disconnected inputs concatenate
// per-component codes in sorted order.
struct CanonicalCode {
  std::vector<std::uint32_t> code;

  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const Gluing& g);

// Rebuilds the canonical representative: canonical_code(gluing_from_code(c))
// == c, and the representative is equivalent to every gluing with that code.
Gluing gluing_from_code(const CanonicalCode& code);

std::string code_to_string(const CanonicalCode& code);
CanonicalCode code_from_string(const std::string& s);

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t valid_leaves = 0;
  std::uint64_t pruned = 0;

  void merge(const EnumerationStats& o) {
    nodes += o.nodes;
    leaves += o.leaves;
    valid_leaves += o.valid_leaves;
    pruned += o.pruned;
  }
};

// Partial search state. `prefix` lists identifications in branch order; each
// entry matched the lowest side that was unmatched when it was applied.
// An optional candidate index range restricts the first branch below the
// prefix, so subtrees can be split without growing the prefix.
struct EnumerationTask {
  int n = 0;
  std::vector<std::tuple<int, Side, int, Side, bool>> prefix;
  int range_lo = -1;  // -1: no restriction
  int range_hi = -1;
  EnumerationStats statistics;
};

EnumerationTask root_task(int n);

// At most k tasks whose subtrees partition t's subtree.
std::vector<EnumerationTask> split_task(const EnumerationTask& t, int k);

struct EnumerationOptions {
  std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
  bool prune_corner_classes = true;  // prune once a class exceeds 4 corners
  bool prune_connectivity = false;   // prune closed proper sub-components
  std::optional<std::uint64_t> shuffle_seed;  // randomize branch order
};

// Shared counter for parallel task execution.
struct NodeBudget {
  std::atomic<std::uint64_t> used{0};
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();

  bool charge() { return used.fetch_add(1, std::memory_order_relaxed) < limit; }
};

struct TaskResult {
  std::vector<EnumerationTask> remainder;  // unexplored subtrees, budget stop
  EnumerationStats stats;
  bool budget_exhausted = false;
  bool stopped_by_callback = false;
};

// Depth-first search below `t`. Calls `emit` for every valid leaf (raw, not
// deduplicated); a false return stops the search. When the shared budget is
// exhausted the unexplored frontier is returned in `remainder`.
TaskResult run_task(
    const EnumerationTask& t, const EnumerationOptions& opt, NodeBudget* budget,
    const std::function<bool(const Gluing&, const CanonicalCode&)>& emit);

struct EnumerationResult {
  std::set<CanonicalCode> codes;
  std::vector<EnumerationTask> pending;  // nonempty iff !complete
  EnumerationStats stats;
  bool complete = true;
};

// Every valid gluing of exactly n squares, once per canonical code.
// `resume` continues from a checkpoint frontier with `already` found codes.
EnumerationResult run_enumeration(
    int n, const EnumerationOptions& opt = {}, int jobs = 1,
    const std::vector<EnumerationTask>* resume = nullptr,
    const std::set<CanonicalCode>* already = nullptr);

// Complete enumeration as sorted codes; throws budget_error on exhaustion.
std::vector<CanonicalCode> enumerate_gluings(int n,
                                             const EnumerationOptions& opt = {},
                                             int jobs = 1);

// Canonical representatives in code order.
std::vector<Gluing> enumerate_gluing_reps(int n,
                                          const EnumerationOptions& opt = {},
                                          int jobs = 1);

// Up to `count` distinct valid gluings found by a randomized branch order;
// deterministic for a fixed seed. Returns fewer only when fewer exist.
std::vector<Gluing> sample_valid_gluings(int n, int count, std::uint64_t seed);

struct Checkpoint {
  int n = 0;
  std::vector<EnumerationTask> pending;
  std::set<CanonicalCode> emitted;
};

void write_checkpoint(const std::string& path, const Checkpoint& cp);
Checkpoint read_checkpoint(const std::string& path);

}  // namespace squarefold
