#pragma once

#include <cstdint>
#include <vector>

#include "treelay/multigraph.hpp"
#include "treelay/tree.hpp"

namespace treelay {

enum class SearchStrategy { first_improvement, steepest };

struct SearchConfig {
    std::uint64_t seed = 1;
    int restarts = 1;
    bool use_nni = true;
    bool use_leaf_swap = true;
    SearchStrategy strategy = SearchStrategy::first_improvement;
    int max_plateau_steps = 0;
};

struct RestartTrace {
    int restart = 0;
    std::int64_t initial_value = 0;
    std::int64_t final_value = 0;
    int steps = 0;
};

struct SearchResult {
    Layout layout;
    std::int64_t value = 0;
    std::vector<RestartTrace> trace;
};

// Uniformly random labeled topology by random leaf insertion (each of the
// 2k-3 edges equally likely at every step); deterministic given the seed.
Layout initial_layout(const Multigraph& g, std::uint64_t seed);

// Restarted descent over NNI and leaf-swap moves. The returned layout admits
// no improving move in the configured move set; ties across restarts break
// toward the lower restart index.
SearchResult local_search(const Multigraph& g, const SearchConfig& config);

}  // namespace treelay
