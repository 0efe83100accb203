#pragma once

#include <cstdint>
#include <vector>

#include "treelay/enumerate.hpp"
#include "treelay/multigraph.hpp"
#include "treelay/rooted_tree.hpp"
#include "treelay/tree.hpp"

namespace treelay {

// Witnesses are the lexicographically smallest serializations among the
// optima, capped to bound memory; optimal_count is always exact. The merge
// rule makes results identical across shard counts.
struct ExactSolution {
    std::int64_t best_value = 0;
    std::vector<Layout> witnesses;
    std::uint64_t trees_evaluated = 0;
    std::uint64_t optimal_count = 0;
};

struct RootedExactSolution {
    std::int64_t best_value = 0;
    std::vector<RootedBinaryTree> witnesses;
    std::uint64_t trees_evaluated = 0;
    std::uint64_t optimal_count = 0;
};

struct SigmaSolution {
    std::int64_t best_value = 0;
    std::vector<LeafTree> shapes;  // one representative per argmin shape
    std::uint64_t trees_evaluated = 0;
};

inline constexpr std::size_t kDefaultWitnessLimit = 100;

// Global minimum of tree length over the enumerated space (unrooted_deg3 or
// routing_maxdeg modes). Unrooted scans honor parallel_shards; the routing
// scan is a single deduplicating pass.
ExactSolution solve_min_tree_length(const Multigraph& g, const EnumerationSpec& spec,
                                    std::size_t witness_limit = kDefaultWitnessLimit);

RootedExactSolution solve_min_rooted_tree_length(const Multigraph& g,
                                                 const EnumerationSpec& spec,
                                                 std::size_t witness_limit = kDefaultWitnessLimit);

// Label-free objective: minimum sigma_LL over unlabeled shapes.
SigmaSolution solve_min_sigma_ll(int leaf_count, const EnumerationSpec& spec);

// True iff every enumerated layout has every edge congestion >= min degree.
bool verify_congested(const Multigraph& g, const EnumerationSpec& spec);

}  // namespace treelay
