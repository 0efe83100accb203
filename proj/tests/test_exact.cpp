#include <doctest.h>

#include <stdexcept>

#include <set>

#include "oracle.hpp"
#include "treelay/builtins.hpp"
#include "treelay/clique_cover.hpp"
#include "treelay/enumerate.hpp"
#include "treelay/exact.hpp"
#include "treelay/family.hpp"
#include "treelay/isomorphism.hpp"
#include "treelay/measures.hpp"
#include "treelay/newick.hpp"

using namespace treelay;

namespace {

EnumerationSpec unrooted(int n, int shards = 1) {
    return {n, TreeMode::unrooted_deg3, 3, shards, false};
}

EnumerationSpec rooted(int n) { return {n, TreeMode::rooted_binary, 3, 1, false}; }

}  // namespace

TEST_CASE("enumeration counts match double factorials") {
    CHECK(count_trees(unrooted(4)) == 3);
    CHECK(count_trees(unrooted(6)) == 105);
    CHECK(count_trees(unrooted(7)) == 945);
    for (int n = 3; n <= 9; ++n)
        CHECK(count_trees(unrooted(n)) == double_factorial(2 * n - 5));
    CHECK(count_trees(rooted(4)) == 15);
    for (int n = 2; n <= 8; ++n)
        CHECK(count_trees(rooted(n)) == double_factorial(2 * n - 3));
}

TEST_CASE("enumeration yields each labeled topology once") {
    std::set<std::string> seen;
    enumerate_unrooted(6, [&](const LeafTree& t) {
        CHECK(t.is_layout_tree());
        CHECK(t.leaf_count() == 6);
        CHECK(seen.insert(canonical_form(leaf_id_layout(t))).second);
    });
    CHECK(seen.size() == 105);

    std::set<std::string> rseen;
    enumerate_rooted(5, [&](const RootedBinaryTree& b) {
        CHECK(rseen.insert(canonical_form(b, true)).second);
    });
    CHECK(rseen.size() == 105);
}

TEST_CASE("routing enumeration") {
    // n=4, Delta=4: the three quartets plus the degree-4 star
    EnumerationSpec spec{4, TreeMode::routing_maxdeg, 4, 1, false};
    CHECK(count_trees(spec) == 4);
    enumerate_routing(4, 4, [](const LeafTree& t) {
        CHECK(t.is_routing_tree(4));
        CHECK(t.leaf_count() == 4);
    });
    // Delta=3 reduces to the cubic space
    EnumerationSpec cubic{5, TreeMode::routing_maxdeg, 3, 1, false};
    CHECK(count_trees(cubic) == 15);

    // n=5, Delta=5: 15 cubic + C(5,2) single-multifurcation + 1 star
    EnumerationSpec wide{5, TreeMode::routing_maxdeg, 5, 1, false};
    CHECK(count_trees(wide) == 26);
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(count_trees(unrooted(11)), GuardError);
    CHECK_THROWS_AS(check_enumeration_guard(EnumerationSpec{13, TreeMode::unrooted_deg3, 3, 1, true}),
                    GuardError);
    CHECK_NOTHROW(check_enumeration_guard(EnumerationSpec{12, TreeMode::unrooted_deg3, 3, 1, true}));
    CHECK_THROWS_AS(check_enumeration_guard(EnumerationSpec{10, TreeMode::rooted_binary, 3, 1, false}),
                    GuardError);
}

TEST_CASE("exact solver spot values") {
    Multigraph k4 = Multigraph::complete(4);
    ExactSolution s = solve_min_tree_length(k4, unrooted(4));
    CHECK(s.best_value == 16);
    CHECK(s.optimal_count == 3);
    CHECK(s.trees_evaluated == 3);

    RootedExactSolution r = solve_min_rooted_tree_length(k4, rooted(4));
    CHECK(r.best_value == 19);
    CHECK(r.optimal_count == 12);
    CHECK(r.trees_evaluated == 15);

    EnumerationSpec routing4{4, TreeMode::routing_maxdeg, 4, 1, false};
    CHECK(solve_min_tree_length(k4, routing4).best_value == 12);

    CHECK(solve_min_tree_length(Multigraph::complete(5), unrooted(5)).best_value == 32);
    CHECK(solve_min_tree_length(*builtin_graph("cycle:8"), unrooted(8)).best_value == 26);
    CHECK(solve_min_tree_length(*builtin_graph("q3"), unrooted(8)).best_value == 44);

    CHECK_THROWS_AS(solve_min_tree_length(k4, unrooted(5)), std::invalid_argument);
}

TEST_CASE("witnesses evaluate to the optimum via the independent evaluator") {
    Multigraph g = *builtin_graph("cycle:6");
    ExactSolution s = solve_min_tree_length(g, unrooted(6));
    CHECK(!s.witnesses.empty());
    for (const Layout& w : s.witnesses)
        CHECK(oracle::path_sum_tree_length(w, g) == s.best_value);

    Multigraph k4 = Multigraph::complete(4);
    RootedExactSolution r = solve_min_rooted_tree_length(k4, rooted(4));
    for (const auto& w : r.witnesses) CHECK(alpha_beta(w, k4).beta == r.best_value);
}

TEST_CASE("solver determinism and shard invariance") {
    Multigraph g = *builtin_graph("cycle:7");
    ExactSolution a = solve_min_tree_length(g, unrooted(7, 1));
    ExactSolution b = solve_min_tree_length(g, unrooted(7, 3));
    ExactSolution c = solve_min_tree_length(g, unrooted(7, 1));
    CHECK(a.best_value == b.best_value);
    CHECK(a.optimal_count == b.optimal_count);
    CHECK(a.trees_evaluated == b.trees_evaluated);
    auto newicks = [](const ExactSolution& s) {
        std::vector<std::string> out;
        for (const auto& w : s.witnesses) out.push_back(to_newick(w));
        return out;
    };
    CHECK(newicks(a) == newicks(b));
    CHECK(newicks(a) == newicks(c));
}

TEST_CASE("sigma solver") {
    SigmaSolution s4 = solve_min_sigma_ll(4, unrooted(4));
    CHECK(s4.best_value == 16);
    CHECK(s4.shapes.size() == 1);

    SigmaSolution s3 = solve_min_sigma_ll(3, unrooted(3));
    CHECK(s3.best_value == 6);

    SigmaSolution s8 = solve_min_sigma_ll(8, unrooted(8, 2));
    CHECK(s8.best_value == 120);
    REQUIRE(s8.shapes.size() == 1);
    CHECK(tree_isomorphic(s8.shapes[0], family_layout_tree(8, FamilyParams{3, 3})));
}

TEST_CASE("min tree length of complete graphs equals min sigma") {
    for (int n = 3; n <= 7; ++n) {
        ExactSolution s = solve_min_tree_length(Multigraph::complete(n), unrooted(n));
        SigmaSolution sig = solve_min_sigma_ll(n, unrooted(n));
        CHECK(s.best_value == sig.best_value);
        for (const Layout& w : s.witnesses)
            CHECK(is_family_member(w.tree, FamilyParams{3, 3}));
    }
}

TEST_CASE("rooted optimum is never below the unrooted optimum") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3);
        Multigraph g = oracle::random_simple_graph(n, rng);
        CHECK(solve_min_rooted_tree_length(g, rooted(n)).best_value >=
              solve_min_tree_length(g, unrooted(n)).best_value);
    }
}

TEST_CASE("clique cover") {
    Multigraph c8 = *builtin_graph("cycle:8");
    auto cover = solve_clique_cover(c8, {2, 2, 2, 2});
    REQUIRE(cover.has_value());
    validate_partition(*cover, 8);
    CHECK(blocks_are_cliques(*cover, c8));

    CHECK(!solve_clique_cover(*builtin_graph("star:8"), {2, 2, 2, 2}).has_value());
    CHECK(solve_clique_cover(Multigraph::complete(8), {2, 2, 2, 2}).has_value());

    // C6 has no triangle; two joined triangles do
    CHECK(!solve_clique_cover(*builtin_graph("cycle:6"), {3, 3}).has_value());
    Multigraph triangles(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1},
                             {0, 3, 1}});
    auto t = solve_clique_cover(triangles, {3, 3});
    REQUIRE(t.has_value());
    CHECK(blocks_are_cliques(*t, triangles));

    CHECK_THROWS_AS(solve_clique_cover(c8, {2, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(solve_clique_cover(Multigraph(2, {{0, 1, 2}}), {1, 1}),
                    std::invalid_argument);
}

TEST_CASE("verify congested") {
    CHECK(verify_congested(Multigraph::complete(5), unrooted(5)));
    CHECK(verify_congested(*builtin_graph("path:4"), unrooted(4)));
    CHECK(verify_congested(Multigraph(2, {{0, 1, 1}}), unrooted(2)));
    // two disjoint edges admit a layout with a zero-congestion cut
    Multigraph two_edges(4, {{0, 1, 1}, {2, 3, 1}});
    CHECK(!verify_congested(two_edges, unrooted(4)));
}
