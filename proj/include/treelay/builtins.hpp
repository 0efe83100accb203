#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treelay/multigraph.hpp"

namespace treelay {

// Named small graphs shipped with the binary so experiments and the
// verification suites need no external data. Accepted names:
//   path:N cycle:N star:N complete:N complete_minus_matching:N q3 twin_k4
// plus the short aliases pN, cN, starN, kN, kNmm.
std::optional<Multigraph> builtin_graph(const std::string& name);

// The fixed n=8 corpus used by the reduction soundness suite.
std::vector<std::string> reduction_corpus();

// Connected builtins with at most max_vertices vertices, for sweep suites.
std::vector<std::string> small_corpus(int max_vertices);

}  // namespace treelay
