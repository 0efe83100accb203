#pragma once

#include <optional>
#include <vector>

#include "treelay/multigraph.hpp"

namespace treelay {

// Partition V(G) into blocks inducing cliques of exactly the given sizes,
// or nullopt if none exists. Backtracking with canonical block ordering;
// deterministic.
std::optional<VertexPartition> solve_clique_cover(const Multigraph& g, std::vector<int> sizes);

}  // namespace treelay
