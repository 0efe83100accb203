#include <doctest.h>

#include <stdexcept>

#include "oracle.hpp"
#include "treelay/builtins.hpp"
#include "treelay/clique_cover.hpp"
#include "treelay/exact.hpp"
#include "treelay/family.hpp"
#include "treelay/reductions.hpp"

using namespace treelay;

namespace {

EnumerationSpec unrooted(int n, int shards = 1) {
    return {n, TreeMode::unrooted_deg3, 3, shards, false};
}

}  // namespace

TEST_CASE("clique4 gadget construction") {
    Multigraph c8 = *builtin_graph("cycle:8");
    ReductionArtifact a = reduce_clique4_multigraph(c8);
    CHECK(a.m_value == 112);  // 8 * (2*8 - 2)
    CHECK(a.output.multiplicity(0, 1) == 113);
    CHECK(a.output.multiplicity(0, 2) == 112);

    CHECK(reduce_clique4_multigraph(Multigraph::complete(4)).m_value == 36);

    CHECK_THROWS_AS(reduce_clique4_multigraph(*builtin_graph("cycle:6")), std::invalid_argument);
    CHECK_THROWS_AS(reduce_clique4_multigraph(Multigraph(4, {{0, 1, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(reduce_clique4_multigraph(Multigraph(4)), std::invalid_argument);
}

TEST_CASE("clique4 extraction end to end") {
    Multigraph c8 = *builtin_graph("cycle:8");
    ReductionArtifact a = reduce_clique4_multigraph(c8);
    ExactSolution sol = solve_min_tree_length(a.output, unrooted(8, 2), 1000);
    auto partition = extract_clique4_answer(a, sol);
    REQUIRE(partition.has_value());
    validate_partition(*partition, 8);
    CHECK(blocks_are_cliques(*partition, c8));
    for (const auto& block : partition->blocks) CHECK(block.size() == 2);

    Multigraph star = *builtin_graph("star:8");
    ReductionArtifact sa = reduce_clique4_multigraph(star);
    ExactSolution ssol = solve_min_tree_length(sa.output, unrooted(8, 2), 1000);
    CHECK(!extract_clique4_answer(sa, ssol).has_value());
}

TEST_CASE("budget separation on the n=4 instance") {
    Multigraph c4 = *builtin_graph("cycle:4");
    ReductionArtifact a = reduce_clique4_multigraph(c4);
    enumerate_unrooted(4, [&](const LeafTree& t) {
        Layout l = leaf_id_layout(t);
        CHECK(tree_length(l, c4) < a.m_value);
    });
}

TEST_CASE("subdivision construction") {
    ReductionArtifact tri = subdivide_all_edges(Multigraph::complete(3));
    CHECK(tri.output.vertex_count() == 6);
    CHECK(tri.output.edge_total() == 6);
    CHECK(tri.output.is_simple());
    for (int v = 0; v < 6; ++v) CHECK(tri.output.degree(v) == 2);  // a six-cycle
    CHECK(tri.output.connected());

    ReductionArtifact par = subdivide_all_edges(Multigraph(2, {{0, 1, 2}}));
    CHECK(par.output.vertex_count() == 4);
    CHECK(par.output.edge_total() == 4);
    for (std::size_t i = 0; i < par.subdivision_endpoints.size(); ++i) {
        CHECK(par.output.degree(2 + static_cast<int>(i)) == 2);
        CHECK(par.subdivision_endpoints[i] == std::pair<int, int>{0, 1});
    }
}

TEST_CASE("balanced subtree congestion total") {
    CHECK(balanced_subtree_congestion_total(1) == 2);
    CHECK(balanced_subtree_congestion_total(2) == 8);
    // q=3: root edge 6, children hold 2 and 1 leaves
    CHECK(balanced_subtree_congestion_total(3) == 6 + 8 + 2);
    CHECK_THROWS_AS(balanced_subtree_congestion_total(0), std::invalid_argument);
}

TEST_CASE("subdivided optimum formula matches exhaustive search") {
    // n=2, l=2: the subdivided graph is a 4-cycle
    Multigraph g2 = Multigraph::complete(2, 2);
    ExactSolution base2 = solve_min_tree_length(g2, unrooted(2));
    ReductionArtifact sub2 = subdivide_all_edges(g2);
    ExactSolution full2 = solve_min_tree_length(sub2.output, unrooted(4));
    CHECK(expected_subdivided_optimum(base2, g2) == full2.best_value);
    CHECK(full2.best_value == 10);

    // n=3, l=2: nine vertices, exhaustive over all 135135 layouts
    Multigraph g3 = Multigraph::complete(3, 2);
    ExactSolution base3 = solve_min_tree_length(g3, unrooted(3));
    CHECK(base3.best_value == 12);
    ReductionArtifact sub3 = subdivide_all_edges(g3);
    ExactSolution full3 = solve_min_tree_length(sub3.output, unrooted(9, 4), 200);
    CHECK(expected_subdivided_optimum(base3, g3) == 48);
    CHECK(full3.best_value == 48);

    CHECK_THROWS_AS(expected_subdivided_optimum(base3, Multigraph::complete(3, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(expected_subdivided_optimum(base3, Multigraph(3, {{0, 1, 2}, {1, 2, 2}})),
                    std::invalid_argument);
}

TEST_CASE("subdivided witnesses attach only to external segments") {
    Multigraph g3 = Multigraph::complete(3, 2);
    ReductionArtifact sub3 = subdivide_all_edges(g3);
    ExactSolution full3 = solve_min_tree_length(sub3.output, unrooted(9, 4), 100);
    CHECK(!full3.witnesses.empty());
    for (const Layout& w : full3.witnesses) CHECK(witness_subdivides_only_external(w, 3));
}

TEST_CASE("constructed subdivided layout attains the optimum") {
    // Base: K3 with multiplicity 2 on the 3-leaf star. Subdividing each
    // external edge once with a cherry of subdivision vertices realizes the
    // predicted optimum exactly.
    Multigraph g3 = Multigraph::complete(3, 2);
    ReductionArtifact sub3 = subdivide_all_edges(g3);
    // subdivision vertex ids: pair (0,1) -> 3,4; (0,2) -> 5,6; (1,2) -> 7,8
    REQUIRE(sub3.subdivision_endpoints ==
            std::vector<std::pair<int, int>>{{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}, {1, 2}});

    LeafTree star = LeafTree::from_edges(4, {{0, 3}, {1, 3}, {2, 3}});
    auto cherry = RootedBinaryTree::join(RootedBinaryTree::leaf(0), RootedBinaryTree::leaf(1));

    std::vector<int> ids0, ids1, ids2;
    LeafTree t = subdivide_edge(star, make_tree_edge(0, 3), cherry, &ids0);
    t = subdivide_edge(t, make_tree_edge(1, 3), cherry, &ids1);
    t = subdivide_edge(t, make_tree_edge(2, 3), cherry, &ids2);
    CHECK(t.leaf_count() == 9);
    CHECK(t.is_layout_tree());

    // attachment node order is (leaf, leaf, root); hang one subdivision
    // vertex of each incident pair off each original vertex
    std::vector<int> phi(9, -1);
    phi[0] = 0;
    phi[1] = 1;
    phi[2] = 2;
    phi[3] = ids0[0];  // (0,1) near vertex 0
    phi[5] = ids0[1];  // (0,2) near vertex 0
    phi[4] = ids1[0];  // (0,1) near vertex 1
    phi[7] = ids1[1];  // (1,2) near vertex 1
    phi[6] = ids2[0];  // (0,2) near vertex 2
    phi[8] = ids2[1];  // (1,2) near vertex 2
    Layout constructed = make_layout(t, phi);
    CHECK(tree_length(constructed, sub3.output) == 48);
    CHECK(witness_subdivides_only_external(constructed, 3));
}

TEST_CASE("pendant gadget") {
    Multigraph k4 = Multigraph::complete(4);
    ReductionArtifact a = add_pendant(k4, 0);
    CHECK(a.output.vertex_count() == 5);
    CHECK(a.output.edge_total() == 7);
    CHECK(a.output.degree(4) == 1);
    CHECK_THROWS_AS(add_pendant(k4, 9), std::invalid_argument);

    // optimum grows by min degree + 2 for the congested complete bases
    for (int n : {4, 5}) {
        Multigraph base = Multigraph::complete(n);
        ReductionArtifact pend = add_pendant(base, 0);
        const std::int64_t before = solve_min_tree_length(base, unrooted(n)).best_value;
        const std::int64_t after =
            solve_min_tree_length(pend.output, unrooted(n + 1)).best_value;
        CHECK(after == before + base.min_degree() + 2);
    }
}

TEST_CASE("pendant witnesses cherry the pendant with its anchor") {
    Multigraph k4 = Multigraph::complete(4);
    ReductionArtifact pend = add_pendant(k4, 0);
    ExactSolution sol = solve_min_tree_length(pend.output, unrooted(5), 1000);
    for (const Layout& w : sol.witnesses) {
        // the pendant leaf and phi(v) share their internal neighbor
        const int pleaf = w.phi[pend.added_vertex];
        const int vleaf = w.phi[pend.pendant_vertex];
        CHECK(w.tree.neighbors(pleaf)[0] == w.tree.neighbors(vleaf)[0]);
    }
}

TEST_CASE("isolated vertex gadget and the rooted +1 law") {
    Multigraph k4 = Multigraph::complete(4);
    ReductionArtifact iso = add_isolated(k4);
    CHECK(iso.output.vertex_count() == 5);
    CHECK(iso.output.edge_total() == 6);

    ReductionArtifact pend = add_pendant(k4, 0);
    ReductionArtifact chain = add_isolated(pend.output);
    const std::int64_t unrooted_opt =
        solve_min_tree_length(pend.output, unrooted(5)).best_value;
    EnumerationSpec rspec{6, TreeMode::rooted_binary, 3, 1, false};
    RootedExactSolution rooted_sol =
        solve_min_rooted_tree_length(chain.output, rspec, 1000);
    CHECK(rooted_sol.best_value == unrooted_opt + 1);

    for (const auto& w : rooted_sol.witnesses) {
        bool isolated_at_root = false;
        for (int c : w.children(w.root()))
            if (w.is_leaf(c) && w.label(c) == chain.added_vertex) isolated_at_root = true;
        CHECK(isolated_at_root);
    }
}

TEST_CASE("padding to k(k-1)^l") {
    // k=3, n'=2: already the right size, no padding
    Multigraph c6 = *builtin_graph("cycle:6");
    ReductionArtifact none = pad_to_k_power(c6, 3);
    CHECK(none.output.vertex_count() == 6);
    CHECK(none.pad_component.empty());
    CHECK(none.output.edges() == c6.edges());

    // k=3, n'=3: pad three vertices, one per component
    Multigraph g9(9, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1},
                      {6, 7, 1}, {7, 8, 1}, {6, 8, 1}});
    ReductionArtifact padded = pad_to_k_power(g9, 3);
    CHECK(padded.pad_l == 2);
    CHECK(padded.output.vertex_count() == 12);
    CHECK(padded.pad_component == std::vector<int>{0, 1, 2});
    for (int p = 9; p < 12; ++p)
        for (int u = 0; u < 9; ++u) CHECK(padded.output.has_edge(p, u));
    CHECK(!padded.output.has_edge(9, 10));

    CHECK_THROWS_AS(pad_to_k_power(*builtin_graph("path:4"), 3), std::invalid_argument);

    // equivalence: cover exists before iff after
    auto before = solve_clique_cover(g9, {3, 3, 3});
    auto after = solve_clique_cover(padded.output, {4, 4, 4});
    CHECK(before.has_value());
    CHECK(after.has_value());

    Multigraph star9 = *builtin_graph("star:9");
    ReductionArtifact spad = pad_to_k_power(star9, 3);
    CHECK(!solve_clique_cover(star9, {3, 3, 3}).has_value());
    CHECK(!solve_clique_cover(spad.output, {4, 4, 4}).has_value());
}

TEST_CASE("cliquek routing gadget") {
    Multigraph c6 = *builtin_graph("cycle:6");
    ReductionArtifact a = reduce_cliquek_routing(c6, 3);
    CHECK(a.m_value == 6 * 10);
    EnumerationSpec spec{6, TreeMode::routing_maxdeg, 3, 1, false};
    ExactSolution sol = solve_min_tree_length(a.output, spec, 1000);

    // the optimal routing tree is the T(3,3) member with one central node
    REQUIRE(!sol.witnesses.empty());
    for (const Layout& w : sol.witnesses) {
        CHECK(is_family_member(w.tree, FamilyParams{3, 3}));
        auto centers = central_nodes(w.tree);
        REQUIRE(centers.size() == 1);
        CHECK(w.tree.degree(centers[0]) == 3);
    }

    auto partition = extract_cliquek_answer(a, sol);
    REQUIRE(partition.has_value());
    CHECK(partition->blocks.size() == 3);
    for (const auto& b : partition->blocks) CHECK(b.size() == 2);
    CHECK(blocks_are_cliques(*partition, c6));

    Multigraph star6 = *builtin_graph("star:6");
    ReductionArtifact sa = reduce_cliquek_routing(star6, 3);
    ExactSolution ssol = solve_min_tree_length(sa.output, spec, 1000);
    CHECK(!extract_cliquek_answer(sa, ssol).has_value());

    CHECK_THROWS_AS(reduce_cliquek_routing(*builtin_graph("cycle:8"), 3), std::invalid_argument);
}

TEST_CASE("end-to-end soundness across the builtin corpus") {
    for (const std::string& name : reduction_corpus()) {
        Multigraph g = *builtin_graph(name);
        ReductionArtifact a = reduce_clique4_multigraph(g);
        ExactSolution sol = solve_min_tree_length(a.output, unrooted(8, 2), 1000);
        auto extracted = extract_clique4_answer(a, sol);
        auto direct = solve_clique_cover(g, {2, 2, 2, 2});
        CHECK(extracted.has_value() == direct.has_value());
        if (extracted) CHECK(blocks_are_cliques(*extracted, g));
    }
}
