#include "treelay/clique_cover.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace treelay {

namespace {

struct CoverSearch {
    const Multigraph& g;
    int n;
    std::vector<std::vector<char>> adj;
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_cap;       // target size per opened block
    std::vector<int> unopened;        // multiset of sizes not yet opened
    std::vector<char> unopened_used;

    explicit CoverSearch(const Multigraph& graph, std::vector<int> sizes)
        : g(graph), n(graph.vertex_count()), adj(n, std::vector<char>(n, 0)), unopened(std::move(sizes)) {
        for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
        std::sort(unopened.begin(), unopened.end());
        unopened_used.assign(unopened.size(), 0);
    }

    bool fits(int v, const std::vector<int>& block) const {
        return std::all_of(block.begin(), block.end(), [&](int u) { return adj[v][u]; });
    }

    // Vertices are placed in index order, so each block's first vertex is its
    // minimum; opening at most one new block per distinct size kills the
    // block-permutation symmetry.
    bool place(int v) {
        if (v == n) return true;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (static_cast<int>(blocks[b].size()) == block_cap[b]) continue;
            if (!fits(v, blocks[b])) continue;
            blocks[b].push_back(v);
            if (place(v + 1)) return true;
            blocks[b].pop_back();
        }
        int last_size = -1;
        for (std::size_t i = 0; i < unopened.size(); ++i) {
            if (unopened_used[i] || unopened[i] == last_size) continue;
            last_size = unopened[i];
            unopened_used[i] = 1;
            blocks.push_back({v});
            block_cap.push_back(unopened[i]);
            if (place(v + 1)) return true;
            blocks.pop_back();
            block_cap.pop_back();
            unopened_used[i] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<VertexPartition> solve_clique_cover(const Multigraph& g, std::vector<int> sizes) {
    if (!g.is_simple())
        throw std::invalid_argument("solve_clique_cover: graph must be simple");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("solve_clique_cover: sizes must be positive");
    const long long total = std::accumulate(sizes.begin(), sizes.end(), 0ll);
    if (total != g.vertex_count())
        throw std::invalid_argument("solve_clique_cover: sizes must sum to the vertex count");

    if (g.vertex_count() == 0) return VertexPartition{};
    CoverSearch search(g, std::move(sizes));
    if (!search.place(0)) return std::nullopt;
    VertexPartition p{std::move(search.blocks)};
    validate_partition(p, g.vertex_count());
    return p;
}

}  // namespace treelay
