#include "treelay/exact.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "treelay/isomorphism.hpp"
#include "treelay/measures.hpp"
#include "treelay/newick.hpp"

namespace treelay {

namespace {

constexpr int kMaxNodes = 32;

// Allocation-free evaluation over the enumerator's raw edge lists.
struct Scratch {
    std::array<std::array<int, 3>, kMaxNodes> adj;
    std::array<int, kMaxNodes> deg;
    std::array<int, kMaxNodes> parent;
    std::array<int, kMaxNodes> order;
    std::array<std::uint64_t, kMaxNodes> below;

    // Fills parent/order/below for the tree in `edges`; returns node count.
    int prepare(const std::vector<std::pair<int, int>>& edges, int leaf_count) {
        const int n = static_cast<int>(edges.size()) + 1;
        for (int v = 0; v < n; ++v) deg[v] = 0;
        for (auto [a, b] : edges) {
            adj[a][deg[a]++] = b;
            adj[b][deg[b]++] = a;
        }
        parent[0] = -1;
        order[0] = 0;
        int filled = 1;
        for (int i = 0; i < filled; ++i) {
            const int x = order[i];
            for (int j = 0; j < deg[x]; ++j) {
                const int y = adj[x][j];
                if (y != parent[x]) {
                    parent[y] = x;
                    order[filled++] = y;
                }
            }
        }
        for (int v = 0; v < n; ++v) below[v] = v < leaf_count ? (1ull << v) : 0ull;
        for (int i = n - 1; i >= 1; --i) {
            const int x = order[i];
            below[parent[x]] |= below[x];
        }
        return n;
    }
};

std::int64_t cut_weight(std::uint64_t side, const std::vector<GraphEdge>& pairs) {
    std::int64_t c = 0;
    for (const auto& e : pairs)
        if (((side >> e.u) ^ (side >> e.v)) & 1u) c += e.mult;
    return c;
}

std::int64_t eval_length(const std::vector<std::pair<int, int>>& edges, int leaf_count,
                         const std::vector<GraphEdge>& pairs, Scratch& s) {
    const int n = s.prepare(edges, leaf_count);
    std::int64_t total = 0;
    for (int i = 1; i < n; ++i) total += cut_weight(s.below[s.order[i]], pairs);
    return total;
}

std::int64_t eval_sigma(const std::vector<std::pair<int, int>>& edges, int leaf_count,
                        Scratch& s) {
    const int n = s.prepare(edges, leaf_count);
    std::int64_t total = 0;
    for (int i = 1; i < n; ++i) {
        const auto c = static_cast<std::int64_t>(std::popcount(s.below[s.order[i]]));
        total += c * (leaf_count - c);
    }
    return total;
}

std::int64_t eval_min_congestion(const std::vector<std::pair<int, int>>& edges, int leaf_count,
                                 const std::vector<GraphEdge>& pairs, Scratch& s) {
    const int n = s.prepare(edges, leaf_count);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int i = 1; i < n; ++i) best = std::min(best, cut_weight(s.below[s.order[i]], pairs));
    return best;
}

// Rooted tree length via the leaf-handle encoding: skip the handle's edge;
// cut parity is unaffected by which side of an edge the mask describes.
std::int64_t eval_rooted_length(const std::vector<std::pair<int, int>>& edges, int handle,
                                const std::vector<GraphEdge>& pairs, Scratch& s) {
    const int n = s.prepare(edges, handle + 1);
    std::int64_t total = 0;
    for (int i = 1; i < n; ++i) {
        if (s.order[i] == handle) continue;
        total += cut_weight(s.below[s.order[i]], pairs);
    }
    return total;
}

// Bounded, order-independent witness pool keyed by serialization.
template <class T>
struct WitnessPool {
    std::size_t limit;
    std::map<std::string, T> items;

    void offer(const std::string& key, const T& value) {
        if (limit == 0) return;
        if (items.size() == limit) {
            auto last = std::prev(items.end());
            if (key >= last->first) return;
        }
        items.emplace(key, value);
        if (items.size() > limit) items.erase(std::prev(items.end()));
    }

    void merge(WitnessPool&& other) {
        for (auto& [k, v] : other.items) offer(k, v);
    }
};

void validate_graph_size(const Multigraph& g, const EnumerationSpec& spec) {
    if (g.vertex_count() != spec.leaf_count)
        throw std::invalid_argument("solve: graph vertex count != spec leaf count");
    if (g.vertex_count() > kMaxNodes / 2 - 2)
        throw std::invalid_argument("solve: instance too large");
}

template <class Result, class Worker>
Result run_sharded(const EnumerationSpec& spec, Worker&& worker) {
    const int shards = std::max(1, spec.parallel_shards);
    std::vector<Result> partial(shards);
    if (shards == 1) {
        worker(0, 1, partial[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(shards);
        for (int s = 0; s < shards; ++s)
            threads.emplace_back([&, s] { worker(s, shards, partial[s]); });
        for (auto& t : threads) t.join();
    }
    Result merged = std::move(partial[0]);
    for (int s = 1; s < shards; ++s) merged.merge(std::move(partial[s]));
    return merged;
}

struct LayoutShardResult {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::uint64_t evaluated = 0;
    std::uint64_t optimal = 0;
    WitnessPool<Layout> pool{kDefaultWitnessLimit, {}};

    void merge(LayoutShardResult&& o) {
        evaluated += o.evaluated;
        if (o.best < best) {
            best = o.best;
            optimal = o.optimal;
            pool = std::move(o.pool);
        } else if (o.best == best) {
            optimal += o.optimal;
            pool.merge(std::move(o.pool));
        }
    }
};

struct RootedShardResult {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::uint64_t evaluated = 0;
    std::uint64_t optimal = 0;
    WitnessPool<RootedBinaryTree> pool{kDefaultWitnessLimit, {}};

    void merge(RootedShardResult&& o) {
        evaluated += o.evaluated;
        if (o.best < best) {
            best = o.best;
            optimal = o.optimal;
            pool = std::move(o.pool);
        } else if (o.best == best) {
            optimal += o.optimal;
            pool.merge(std::move(o.pool));
        }
    }
};

struct SigmaShardResult {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::uint64_t evaluated = 0;
    std::map<std::string, LeafTree> shapes;

    void merge(SigmaShardResult&& o) {
        evaluated += o.evaluated;
        if (o.best < best) {
            best = o.best;
            shapes = std::move(o.shapes);
        } else if (o.best == best) {
            for (auto& [k, v] : o.shapes) shapes.emplace(k, v);
        }
    }
};

}  // namespace

ExactSolution solve_min_tree_length(const Multigraph& g, const EnumerationSpec& spec,
                                    std::size_t witness_limit) {
    check_enumeration_guard(spec);
    validate_graph_size(g, spec);
    if (spec.mode == TreeMode::rooted_binary)
        throw std::invalid_argument("solve_min_tree_length: use solve_min_rooted_tree_length");

    const std::vector<GraphEdge>& pairs = g.edges();

    if (spec.mode == TreeMode::routing_maxdeg) {
        // Deduplicated space; enumerated in one pass.
        LayoutShardResult r;
        r.pool.limit = witness_limit;
        enumerate_routing(spec.leaf_count, spec.max_degree, [&](const LeafTree& t) {
            ++r.evaluated;
            Layout l = leaf_id_layout(t);
            const std::int64_t v = tree_length(l, g);
            if (v < r.best) {
                r.best = v;
                r.optimal = 0;
                r.pool.items.clear();
            }
            if (v == r.best) {
                ++r.optimal;
                r.pool.offer(to_newick(l), l);
            }
        });
        ExactSolution out;
        out.best_value = r.best;
        out.trees_evaluated = r.evaluated;
        out.optimal_count = r.optimal;
        for (auto& [k, v] : r.pool.items) out.witnesses.push_back(std::move(v));
        return out;
    }

    auto worker = [&](int shard, int shards, LayoutShardResult& r) {
        r.pool.limit = witness_limit;
        Scratch scratch;
        detail::visit_cubic(spec.leaf_count, shard, shards,
                            [&](const std::vector<std::pair<int, int>>& edges) {
                                ++r.evaluated;
                                const std::int64_t v =
                                    eval_length(edges, spec.leaf_count, pairs, scratch);
                                if (v > r.best) return;
                                if (v < r.best) {
                                    r.best = v;
                                    r.optimal = 0;
                                    r.pool.items.clear();
                                }
                                ++r.optimal;
                                Layout l = leaf_id_layout(detail::tree_from_raw(edges));
                                r.pool.offer(to_newick(l), l);
                            });
    };
    LayoutShardResult r = run_sharded<LayoutShardResult>(spec, worker);

    ExactSolution out;
    out.best_value = r.best;
    out.trees_evaluated = r.evaluated;
    out.optimal_count = r.optimal;
    for (auto& [k, v] : r.pool.items) out.witnesses.push_back(std::move(v));
    return out;
}

RootedExactSolution solve_min_rooted_tree_length(const Multigraph& g,
                                                 const EnumerationSpec& spec,
                                                 std::size_t witness_limit) {
    if (spec.mode != TreeMode::rooted_binary)
        throw std::invalid_argument("solve_min_rooted_tree_length: spec mode must be rooted");
    check_enumeration_guard(spec);
    validate_graph_size(g, spec);

    const std::vector<GraphEdge>& pairs = g.edges();
    const int handle = spec.leaf_count;

    auto worker = [&](int shard, int shards, RootedShardResult& r) {
        r.pool.limit = witness_limit;
        Scratch scratch;
        detail::visit_cubic(spec.leaf_count + 1, shard, shards,
                            [&](const std::vector<std::pair<int, int>>& edges) {
                                ++r.evaluated;
                                const std::int64_t v =
                                    eval_rooted_length(edges, handle, pairs, scratch);
                                if (v > r.best) return;
                                if (v < r.best) {
                                    r.best = v;
                                    r.optimal = 0;
                                    r.pool.items.clear();
                                }
                                ++r.optimal;
                                RootedBinaryTree b = detail::rooted_from_raw(edges, handle);
                                r.pool.offer(to_newick(b), b);
                            });
    };
    RootedShardResult r = run_sharded<RootedShardResult>(spec, worker);

    RootedExactSolution out;
    out.best_value = r.best;
    out.trees_evaluated = r.evaluated;
    out.optimal_count = r.optimal;
    for (auto& [k, v] : r.pool.items) out.witnesses.push_back(std::move(v));
    return out;
}

SigmaSolution solve_min_sigma_ll(int leaf_count, const EnumerationSpec& spec) {
    EnumerationSpec local = spec;
    local.leaf_count = leaf_count;
    local.mode = TreeMode::unrooted_deg3;
    check_enumeration_guard(local);

    auto worker = [&](int shard, int shards, SigmaShardResult& r) {
        Scratch scratch;
        detail::visit_cubic(leaf_count, shard, shards,
                            [&](const std::vector<std::pair<int, int>>& edges) {
                                ++r.evaluated;
                                const std::int64_t v = eval_sigma(edges, leaf_count, scratch);
                                if (v > r.best) return;
                                if (v < r.best) {
                                    r.best = v;
                                    r.shapes.clear();
                                }
                                LeafTree t = detail::tree_from_raw(edges);
                                std::string key = canonical_form(t);
                                r.shapes.emplace(std::move(key), std::move(t));
                            });
    };
    SigmaShardResult r = run_sharded<SigmaShardResult>(local, worker);

    SigmaSolution out;
    out.best_value = r.best;
    out.trees_evaluated = r.evaluated;
    for (auto& [k, v] : r.shapes) out.shapes.push_back(std::move(v));
    return out;
}

bool verify_congested(const Multigraph& g, const EnumerationSpec& spec) {
    EnumerationSpec local = spec;
    local.mode = TreeMode::unrooted_deg3;
    local.leaf_count = g.vertex_count();
    if (g.vertex_count() == 2) return true;  // the single edge is its own cut
    check_enumeration_guard(local);
    validate_graph_size(g, local);

    const std::int64_t nabla = g.min_degree();
    const std::vector<GraphEdge>& pairs = g.edges();
    std::atomic<bool> congested{true};

    auto worker = [&](int shard, int shards, char&) {
        Scratch scratch;
        detail::visit_cubic(local.leaf_count, shard, shards,
                            [&](const std::vector<std::pair<int, int>>& edges) {
                                if (!congested.load(std::memory_order_relaxed)) return;
                                if (eval_min_congestion(edges, local.leaf_count, pairs, scratch) <
                                    nabla)
                                    congested.store(false, std::memory_order_relaxed);
                            });
    };
    const int shards = std::max(1, local.parallel_shards);
    if (shards == 1) {
        char dummy = 0;
        worker(0, 1, dummy);
    } else {
        std::vector<std::thread> threads;
        std::vector<char> dummies(shards, 0);
        for (int s = 0; s < shards; ++s)
            threads.emplace_back([&, s] { worker(s, shards, dummies[s]); });
        for (auto& t : threads) t.join();
    }
    return congested.load();
}

}  // namespace treelay
