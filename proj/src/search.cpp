#include "treelay/search.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "treelay/measures.hpp"

namespace treelay {

namespace {

// rng() % m is deterministic across standard library implementations, unlike
// std::uniform_int_distribution; the modulo bias is irrelevant at these sizes.
int bounded(std::mt19937_64& rng, int m) { return static_cast<int>(rng() % m); }

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
    return seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(restart);
}

std::vector<std::pair<int, int>> random_insertion_edges(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges = {{0, n}, {1, n}, {2, n}};
    for (int leaf = 3; leaf < n; ++leaf) {
        const int i = bounded(rng, static_cast<int>(edges.size()));
        auto [x, y] = edges[i];
        const int w = n + leaf - 2;
        edges[i] = {x, w};
        edges.push_back({w, y});
        edges.push_back({w, leaf});
    }
    return edges;
}

// Descent state over one labeled topology. side[i] is the vertex bitmask of
// the component holding edges[i].second once that edge is removed; per-edge
// congestions and the total are maintained incrementally.
struct DescentState {
    const Multigraph& g;
    int n;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> vertex_of_leaf;  // leaf node id -> graph vertex
    std::vector<std::vector<int>> adj;
    std::vector<std::uint64_t> side;
    std::vector<std::int64_t> cong;
    std::int64_t total = 0;

    DescentState(const Multigraph& graph, std::vector<std::pair<int, int>> e)
        : g(graph), n(graph.vertex_count()), edges(std::move(e)) {
        vertex_of_leaf.resize(n);
        for (int v = 0; v < n; ++v) vertex_of_leaf[v] = v;
        rebuild();
    }

    int node_count() const { return static_cast<int>(edges.size()) + 1; }

    std::int64_t cut_weight(std::uint64_t s) const {
        std::int64_t c = 0;
        for (const auto& e : g.edges())
            if (((s >> e.u) ^ (s >> e.v)) & 1u) c += e.mult;
        return c;
    }

    void rebuild() {
        const int nodes = node_count();
        adj.assign(nodes, {});
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        side.assign(edges.size(), 0);
        cong.assign(edges.size(), 0);
        total = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            side[i] = subtree_mask(edges[i].second, edges[i].first);
            cong[i] = cut_weight(side[i]);
            total += cong[i];
        }
    }

    // Vertex mask of the subtree at v looking away from the neighbor `from`.
    std::uint64_t subtree_mask(int v, int from) const {
        std::uint64_t mask = v < n ? (1ull << vertex_of_leaf[v]) : 0ull;
        for (int u : adj[v])
            if (u != from) mask |= subtree_mask(u, v);
        return mask;
    }

    int edge_index(int a, int b) const {
        for (std::size_t i = 0; i < edges.size(); ++i)
            if ((edges[i].first == a && edges[i].second == b) ||
                (edges[i].first == b && edges[i].second == a))
                return static_cast<int>(i);
        throw std::logic_error("descent: missing edge");
    }

    // --- NNI across internal edge ei ---
    // Swapping subtrees only changes the congestion of the crossed edge.
    struct NniMove {
        int ei;
        int b;  // neighbor of x moved to y
        int c;  // neighbor of y moved to x
    };

    std::vector<NniMove> nni_moves() const {
        std::vector<NniMove> out;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [x, y] = edges[i];
            if (x < n || y < n) continue;
            std::vector<int> xs, ys;
            for (int u : adj[x])
                if (u != y) xs.push_back(u);
            for (int u : adj[y])
                if (u != x) ys.push_back(u);
            std::sort(ys.begin(), ys.end());
            const int b = std::max(xs[0], xs[1]);
            for (int c : ys) out.push_back({static_cast<int>(i), b, c});
        }
        return out;
    }

    std::int64_t nni_delta(const NniMove& m) const {
        auto [x, y] = edges[m.ei];
        const std::uint64_t mask_b = subtree_mask(m.b, x);
        const std::uint64_t mask_c = subtree_mask(m.c, y);
        std::uint64_t y_side = side[m.ei];  // component of edges[ei].second == y
        std::uint64_t new_y_side = (y_side & ~mask_c) | mask_b;
        return cut_weight(new_y_side) - cong[m.ei];
    }

    void apply_nni(const NniMove& m) {
        auto [x, y] = edges[m.ei];
        const std::uint64_t mask_b = subtree_mask(m.b, x);
        const std::uint64_t mask_c = subtree_mask(m.c, y);
        const int exb = edge_index(x, m.b);
        const int eyc = edge_index(y, m.c);
        // Rewire; sides of the relocated edges are their unchanged subtrees.
        edges[exb] = {y, m.b};
        side[exb] = mask_b;
        edges[eyc] = {x, m.c};
        side[eyc] = mask_c;
        adj[x].erase(std::find(adj[x].begin(), adj[x].end(), m.b));
        adj[y].erase(std::find(adj[y].begin(), adj[y].end(), m.c));
        adj[x].push_back(m.c);
        adj[y].push_back(m.b);
        *std::find(adj[m.b].begin(), adj[m.b].end(), x) = y;
        *std::find(adj[m.c].begin(), adj[m.c].end(), y) = x;
        side[m.ei] = (side[m.ei] & ~mask_c) | mask_b;
        const std::int64_t nc = cut_weight(side[m.ei]);
        total += nc - cong[m.ei];
        cong[m.ei] = nc;
    }

    // --- leaf-label swap ---
    // Only edges on the tree path between the two leaves change.
    std::vector<int> path_edges(int leaf_a, int leaf_b) const {
        std::vector<int> parent(node_count(), -2);
        std::vector<int> queue{leaf_a};
        parent[leaf_a] = -1;
        for (std::size_t i = 0; i < queue.size() && parent[leaf_b] == -2; ++i)
            for (int u : adj[queue[i]])
                if (parent[u] == -2) {
                    parent[u] = queue[i];
                    queue.push_back(u);
                }
        std::vector<int> out;
        for (int v = leaf_b; parent[v] != -1; v = parent[v]) out.push_back(edge_index(v, parent[v]));
        return out;
    }

    std::int64_t swap_delta(int u, int w) const {
        const std::uint64_t flip = (1ull << u) | (1ull << w);
        std::int64_t delta = 0;
        for (int ei : path_edges(leaf_of(u), leaf_of(w)))
            delta += cut_weight(side[ei] ^ flip) - cong[ei];
        return delta;
    }

    void apply_swap(int u, int w) {
        const std::uint64_t flip = (1ull << u) | (1ull << w);
        for (int ei : path_edges(leaf_of(u), leaf_of(w))) {
            side[ei] ^= flip;
            const std::int64_t nc = cut_weight(side[ei]);
            total += nc - cong[ei];
            cong[ei] = nc;
        }
        const int la = leaf_of(u), lb = leaf_of(w);
        std::swap(vertex_of_leaf[la], vertex_of_leaf[lb]);
    }

    int leaf_of(int vertex) const {
        for (int l = 0; l < n; ++l)
            if (vertex_of_leaf[l] == vertex) return l;
        throw std::logic_error("descent: vertex has no leaf");
    }

    Layout to_layout() const {
        std::vector<TreeEdge> es;
        es.reserve(edges.size());
        for (auto [a, b] : edges) es.push_back(make_tree_edge(a, b));
        LeafTree t = LeafTree::from_edges(node_count(), es);
        std::vector<int> phi(n);
        for (int l = 0; l < n; ++l) phi[vertex_of_leaf[l]] = l;
        return make_layout(std::move(t), std::move(phi));
    }
};

struct Candidate {
    bool is_nni = false;
    DescentState::NniMove nni{};
    int u = 0, w = 0;
    std::int64_t delta = 0;
};

// Scan order: NNI moves by (edge index, partner), then swaps by (u, w).
template <class F>
void for_each_candidate(const DescentState& st, const SearchConfig& cfg, F&& fn) {
    if (cfg.use_nni)
        for (const auto& m : st.nni_moves()) {
            Candidate c;
            c.is_nni = true;
            c.nni = m;
            c.delta = st.nni_delta(m);
            if (fn(c)) return;
        }
    if (cfg.use_leaf_swap)
        for (int u = 0; u < st.n; ++u)
            for (int w = u + 1; w < st.n; ++w) {
                Candidate c;
                c.u = u;
                c.w = w;
                c.delta = st.swap_delta(u, w);
                if (fn(c)) return;
            }
}

int descend(DescentState& st, const SearchConfig& cfg) {
    int steps = 0;
    int plateau_left = cfg.max_plateau_steps;
    while (true) {
        Candidate chosen;
        bool found = false;
        if (cfg.strategy == SearchStrategy::first_improvement) {
            for_each_candidate(st, cfg, [&](const Candidate& c) {
                if (c.delta < 0) {
                    chosen = c;
                    found = true;
                    return true;
                }
                return false;
            });
        } else {
            for_each_candidate(st, cfg, [&](const Candidate& c) {
                if (c.delta < 0 && (!found || c.delta < chosen.delta)) {
                    chosen = c;
                    found = true;
                }
                return false;
            });
        }
        if (!found && plateau_left > 0) {
            for_each_candidate(st, cfg, [&](const Candidate& c) {
                if (c.delta == 0) {
                    chosen = c;
                    found = true;
                    return true;
                }
                return false;
            });
            if (found) --plateau_left;
        }
        if (!found) return steps;
        if (chosen.is_nni)
            st.apply_nni(chosen.nni);
        else
            st.apply_swap(chosen.u, chosen.w);
        ++steps;
    }
}

}  // namespace

Layout initial_layout(const Multigraph& g, std::uint64_t seed) {
    if (g.vertex_count() < 3)
        throw std::invalid_argument("initial_layout: need at least 3 vertices");
    std::mt19937_64 rng(seed);
    DescentState st(g, random_insertion_edges(g.vertex_count(), rng));
    return st.to_layout();
}

SearchResult local_search(const Multigraph& g, const SearchConfig& config) {
    if (g.vertex_count() < 3)
        throw std::invalid_argument("local_search: need at least 3 vertices");
    if (config.restarts < 1)
        throw std::invalid_argument("local_search: restarts must be >= 1");
    if (!config.use_nni && !config.use_leaf_swap)
        throw std::invalid_argument("local_search: move set must be non-empty");

    SearchResult best;
    best.value = std::numeric_limits<std::int64_t>::max();
    for (int r = 0; r < config.restarts; ++r) {
        std::mt19937_64 rng(restart_seed(config.seed, r));
        DescentState st(g, random_insertion_edges(g.vertex_count(), rng));
        RestartTrace trace;
        trace.restart = r;
        trace.initial_value = st.total;
        trace.steps = descend(st, config);
        trace.final_value = st.total;
        best.trace.push_back(trace);
        if (st.total < best.value) {
            best.value = st.total;
            best.layout = st.to_layout();
        }
    }
    return best;
}

}  // namespace treelay
