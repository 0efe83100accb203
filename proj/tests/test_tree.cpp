#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "treelay/enumerate.hpp"
#include "treelay/isomorphism.hpp"
#include "treelay/newick.hpp"
#include "treelay/rooted_tree.hpp"
#include "treelay/tree.hpp"

using namespace treelay;

namespace {

// quartet ((0,1),(2,3)): leaves 0..3, internals 4 and 5
LeafTree quartet01() {
    return LeafTree::from_edges(6, {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 5}});
}

LeafTree star3() { return LeafTree::from_edges(4, {{0, 3}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("leaf tree construction rejects non-trees") {
    CHECK_THROWS_AS(LeafTree::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(LeafTree::from_edges(4, {{0, 1}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(LeafTree::from_adjacency({{1}, {}}), std::invalid_argument);
    LeafTree q = quartet01();
    CHECK(q.is_layout_tree());
    CHECK(q.leaf_count() == 4);
    CHECK(q.edge_count() == 5);
}

TEST_CASE("leaf distance") {
    CHECK(leaf_distance(star3(), 0, 1) == 2);
    CHECK(leaf_distance(star3(), 1, 2) == 2);
    LeafTree q = quartet01();
    CHECK(leaf_distance(q, 0, 1) == 2);
    CHECK(leaf_distance(q, 0, 2) == 3);
    CHECK(leaf_distance(q, 0, 0) == 0);
    CHECK_THROWS_AS(leaf_distance(q, 0, 9), std::invalid_argument);
}

TEST_CASE("edge cut") {
    LeafTree q = quartet01();
    auto [a, b] = edge_cut(q, make_tree_edge(4, 5));
    CHECK(a == std::vector<int>{0, 1});
    CHECK(b == std::vector<int>{2, 3});

    auto [la, lb] = edge_cut(q, make_tree_edge(0, 4));
    CHECK(la == std::vector<int>{0});
    CHECK(lb == std::vector<int>{1, 2, 3});

    auto [sa, sb] = edge_cut(star3(), make_tree_edge(1, 3));
    CHECK(sa == std::vector<int>{1});
    CHECK(sb == std::vector<int>{0, 2});

    CHECK_THROWS_AS(edge_cut(q, make_tree_edge(0, 5)), std::invalid_argument);
}

TEST_CASE("edge cut parts cover all leaves") {
    enumerate_unrooted(6, [](const LeafTree& t) {
        for (const auto& e : t.edge_list()) {
            auto [a, b] = edge_cut(t, e);
            CHECK(static_cast<int>(a.size() + b.size()) == t.leaf_count());
        }
    });
}

TEST_CASE("edge classification") {
    LeafTree q = quartet01();
    EdgeClasses classes = classify_edges(q);
    CHECK(classes.external.size() == 4);
    CHECK(classes.internal.size() == 1);
    CHECK(classes.internal[0] == make_tree_edge(4, 5));
}

TEST_CASE("nni on the quartet yields the two other quartets") {
    LeafTree q = quartet01();
    auto moves = nni_neighbors(q);
    REQUIRE(moves.size() == 2);
    std::set<std::string> got;
    for (const auto& t : moves) {
        CHECK(t.is_layout_tree());
        CHECK(t.leaf_count() == 4);
        got.insert(canonical_form(leaf_id_layout(t)));
        CHECK(canonical_form(leaf_id_layout(t)) != canonical_form(leaf_id_layout(q)));
    }
    CHECK(got.size() == 2);
}

TEST_CASE("nni counts and invariants") {
    CHECK(nni_neighbors(star3()).empty());
    int fives = 0;
    enumerate_unrooted(5, [&](const LeafTree& t) {
        if (fives++) return;
        auto moves = nni_neighbors(t);
        CHECK(moves.size() == 4);  // n-3 internal edges, 2 swaps each
        std::string self = canonical_form(leaf_id_layout(t));
        for (const auto& m : moves) {
            CHECK(m.leaf_count() == 5);
            CHECK(canonical_form(leaf_id_layout(m)) != self);
        }
    });
}

TEST_CASE("subdivide edge with a single leaf") {
    LeafTree q = quartet01();
    std::vector<int> ids;
    LeafTree t = subdivide_edge(q, make_tree_edge(4, 5), RootedBinaryTree::leaf(4), &ids);
    CHECK(t.leaf_count() == 5);
    CHECK(t.node_count() == 8);
    CHECK(t.is_layout_tree());
    REQUIRE(ids.size() == 1);
    CHECK(t.is_leaf(ids[0]));
}

TEST_CASE("subdividing an external edge then contracting is the identity") {
    LeafTree q = quartet01();
    LeafTree t = subdivide_edge(q, make_tree_edge(0, 4), RootedBinaryTree::leaf(9));
    // remove the added leaf: its neighbor w becomes degree 2 and contracts away
    std::vector<std::vector<int>> adj(t.node_count());
    for (int v = 0; v < t.node_count(); ++v) adj[v] = t.neighbors(v);
    int added = t.node_count() - 1;
    int w = adj[added][0];
    adj[w].erase(std::find(adj[w].begin(), adj[w].end(), added));
    adj[added].clear();
    adj.pop_back();
    LeafTree pruned = contract_degree2(LeafTree::from_adjacency(std::move(adj)));
    CHECK(tree_isomorphic(pruned, q));
}

TEST_CASE("contract degree-2 nodes") {
    // path 0-1-2: middle contracts, result is a single edge
    LeafTree path = LeafTree::from_edges(3, {{0, 1}, {1, 2}});
    LeafTree e = contract_degree2(path);
    CHECK(e.node_count() == 2);
    CHECK(e.edge_count() == 1);
}

TEST_CASE("rooted binary tree basics") {
    auto cherry = RootedBinaryTree::join(RootedBinaryTree::leaf(0), RootedBinaryTree::leaf(1));
    CHECK(cherry.leaf_count() == 2);
    CHECK(cherry.node_count() == 3);
    CHECK(cherry.leaf_labels() == std::vector<int>{0, 1});
    auto post = cherry.postorder();
    CHECK(post.back() == cherry.root());

    auto balanced = RootedBinaryTree::join(
        cherry, RootedBinaryTree::join(RootedBinaryTree::leaf(2), RootedBinaryTree::leaf(3)));
    CHECK(balanced.leaf_count() == 4);
    CHECK(balanced.node_count() == 7);
}

TEST_CASE("rooted to unrooted suppresses the root") {
    auto cherry = RootedBinaryTree::join(RootedBinaryTree::leaf(0), RootedBinaryTree::leaf(1));
    Layout edge = rooted_to_unrooted(cherry);
    CHECK(edge.tree.node_count() == 2);
    CHECK(edge.tree.edge_count() == 1);

    auto balanced = RootedBinaryTree::join(
        cherry, RootedBinaryTree::join(RootedBinaryTree::leaf(2), RootedBinaryTree::leaf(3)));
    Layout q = rooted_to_unrooted(balanced);
    CHECK(q.tree.leaf_count() == 4);
    CHECK(tree_isomorphic(q.tree, quartet01()));
    CHECK(leaf_distance(q.tree, q.phi[0], q.phi[1]) == 2);
    CHECK(leaf_distance(q.tree, q.phi[0], q.phi[2]) == 3);

    CHECK_THROWS_AS(rooted_to_unrooted(RootedBinaryTree::leaf(0)), std::invalid_argument);
}

TEST_CASE("rooted to unrooted preserves leaf count") {
    enumerate_rooted(5, [](const RootedBinaryTree& b) {
        Layout l = rooted_to_unrooted(b);
        CHECK(l.tree.leaf_count() == b.leaf_count());
        CHECK(l.tree.is_layout_tree());
    });
}

TEST_CASE("root suppression shortens only paths through the root") {
    enumerate_rooted(5, [](const RootedBinaryTree& b) {
        // rooted distances via the undirected view of b
        std::vector<std::vector<int>> adj(b.node_count());
        std::vector<int> leaf_of(b.leaf_count(), -1);
        for (int v = 0; v < b.node_count(); ++v) {
            if (b.is_leaf(v)) {
                leaf_of[b.label(v)] = v;
                continue;
            }
            for (int c : b.children(v)) {
                adj[v].push_back(c);
                adj[c].push_back(v);
            }
        }
        auto bfs = [&](int from) {
            std::vector<int> dist(adj.size(), -1);
            std::vector<int> queue{from};
            dist[from] = 0;
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (int y : adj[queue[i]])
                    if (dist[y] < 0) {
                        dist[y] = dist[queue[i]] + 1;
                        queue.push_back(y);
                    }
            return dist;
        };
        Layout flat = rooted_to_unrooted(b);
        for (int u = 0; u < b.leaf_count(); ++u) {
            auto rd = bfs(leaf_of[u]);
            for (int w = u + 1; w < b.leaf_count(); ++w) {
                const int unrooted_d = leaf_distance(flat.tree, flat.phi[u], flat.phi[w]);
                CHECK(unrooted_d <= rd[leaf_of[w]]);
                CHECK(rd[leaf_of[w]] - unrooted_d <= 1);
            }
        }
    });
}

TEST_CASE("isomorphism labeled vs unlabeled") {
    LeafTree a = quartet01();
    LeafTree b = LeafTree::from_edges(6, {{0, 4}, {2, 4}, {1, 5}, {3, 5}, {4, 5}});  // ((0,2),(1,3))
    CHECK(tree_isomorphic(a, b));
    CHECK(!layout_isomorphic(leaf_id_layout(a), leaf_id_layout(b)));
    CHECK(layout_isomorphic(leaf_id_layout(a), leaf_id_layout(a)));
    CHECK(tree_isomorphic(a, a));
}

TEST_CASE("newick round trips") {
    Layout q = leaf_id_layout(quartet01());
    std::string s = to_newick(q);
    Layout parsed = layout_from_newick(s);
    CHECK(layout_isomorphic(q, parsed));
    CHECK(to_newick(parsed) == s);

    Layout pair = layout_from_newick("(v0,v1);");
    CHECK(pair.tree.node_count() == 2);
    CHECK(to_newick(pair) == "(v0,v1);");

    auto rooted = rooted_from_newick("(((v0,v1),v2),v3);");
    CHECK(rooted.leaf_count() == 4);
    CHECK(to_newick(rooted) == "(((v0,v1),v2),v3);");

    CHECK_THROWS_AS(layout_from_newick("((v0,v1)"), std::invalid_argument);
    CHECK_THROWS_AS(layout_from_newick("(v0,v0);"), std::invalid_argument);
    CHECK_THROWS_AS(layout_from_newick("(v0,v2);"), std::invalid_argument);
    CHECK_THROWS_AS(rooted_from_newick("(v0,v1,v2);"), std::invalid_argument);
}

TEST_CASE("newick round trip across enumerated layouts") {
    enumerate_unrooted(5, [](const LeafTree& t) {
        Layout l = leaf_id_layout(t);
        std::string s = to_newick(l);
        CHECK(layout_isomorphic(l, layout_from_newick(s)));
    });
}

TEST_CASE("layout validation") {
    CHECK_THROWS_AS(make_layout(quartet01(), {0, 1, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(make_layout(quartet01(), {0, 1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_layout(quartet01(), {0, 1, 2}), std::invalid_argument);
    Layout l = make_layout(quartet01(), {3, 2, 1, 0});
    CHECK(l.vertex_at(3) == 0);
    CHECK(l.leaf_of(0) == 3);
}

TEST_CASE("nni moves connect the labeled topology space") {
    for (int n : {4, 5, 6}) {
        std::set<std::string> all;
        LeafTree start;
        bool first = true;
        enumerate_unrooted(n, [&](const LeafTree& t) {
            all.insert(canonical_form(leaf_id_layout(t)));
            if (first) {
                start = t;
                first = false;
            }
        });
        std::set<std::string> reached{canonical_form(leaf_id_layout(start))};
        std::vector<LeafTree> frontier{start};
        while (!frontier.empty()) {
            std::vector<LeafTree> next;
            for (const LeafTree& t : frontier)
                for (const LeafTree& m : nni_neighbors(t))
                    if (reached.insert(canonical_form(leaf_id_layout(m))).second)
                        next.push_back(m);
            frontier = std::move(next);
        }
        CHECK(reached == all);
    }
}

TEST_CASE("cubic tree node counts") {
    for (int n : {4, 5, 6, 7}) {
        int internal_expected = n - 2;
        enumerate_unrooted(n, [&](const LeafTree& t) {
            CHECK(t.node_count() == 2 * n - 2);
            CHECK(t.edge_count() == 2 * n - 3);
            CHECK(t.node_count() - t.leaf_count() == internal_expected);
        });
    }
}
