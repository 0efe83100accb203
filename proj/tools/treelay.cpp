// Command-line front end: measure, solve, enumerate, canonical, cover,
// reduce, verify. Reports are JSON with stable key order; all randomness
// flows from --seed. Exit codes: 0 success, 2 parse error, 3 precondition,
// 4 size guard, 5 check failure.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treelay/builtins.hpp"
#include "treelay/clique_cover.hpp"
#include "treelay/enumerate.hpp"
#include "treelay/exact.hpp"
#include "treelay/family.hpp"
#include "treelay/graph_io.hpp"
#include "treelay/isomorphism.hpp"
#include "treelay/measures.hpp"
#include "treelay/newick.hpp"
#include "treelay/reductions.hpp"
#include "treelay/search.hpp"

using json = nlohmann::ordered_json;
using namespace treelay;

namespace {

class CheckFailure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct GraphInput {
    std::string graph_file;
    std::string builtin;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--graph", graph_file, "graph file");
        cmd->add_option("--builtin", builtin, "builtin graph name (e.g. cycle:8, k4)");
    }

    Multigraph load(json& inputs) const {
        if (!graph_file.empty()) {
            std::string text = read_file(graph_file);
            inputs["graph"] = fnv1a_digest(text);
            return read_graph(text);
        }
        if (!builtin.empty()) {
            auto g = builtin_graph(builtin);
            if (!g) throw std::invalid_argument("unknown builtin graph: " + builtin);
            inputs["graph"] = "builtin:" + builtin;
            return *g;
        }
        throw std::invalid_argument("need --graph or --builtin");
    }
};

json report_frame(const std::string& command) {
    json r;
    r["command"] = command;
    r["inputs"] = json::object();
    return r;
}

void emit(json& report, std::chrono::steady_clock::time_point start) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    report["wall_clock_ms"] = ms;
    std::cout << report.dump(2) << "\n";
}

json measure_to_json(const MeasureReport& r) {
    json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["tree_length"] = r.tree_length;
    j["sigma_ll"] = r.sigma_ll;
    j["max_dilation"] = r.max_dilation;
    j["max_congestion"] = r.max_congestion;
    j["alpha"] = r.alpha;
    j["beta"] = r.beta;
    json dil = json::array();
    for (const auto& [e, d] : r.per_graph_edge_dilation)
        dil.push_back({{"u", e.u}, {"v", e.v}, {"mult", e.mult}, {"dilation", d}});
    json con = json::array();
    for (const auto& [e, c] : r.per_tree_edge_congestion)
        con.push_back({{"a", e.a}, {"b", e.b}, {"congestion", c}});
    j["per_edge"] = {{"dilations", std::move(dil)}, {"congestions", std::move(con)}};
    return j;
}

TreeMode parse_mode(const std::string& mode) {
    if (mode == "unrooted") return TreeMode::unrooted_deg3;
    if (mode == "rooted") return TreeMode::rooted_binary;
    if (mode == "routing") return TreeMode::routing_maxdeg;
    throw std::invalid_argument("mode must be unrooted, rooted or routing");
}

json solution_to_json(const ExactSolution& sol, std::size_t max_witnesses = 10) {
    json j;
    j["best_value"] = sol.best_value;
    j["trees_evaluated"] = sol.trees_evaluated;
    j["optimal_count"] = sol.optimal_count;
    json w = json::array();
    for (std::size_t i = 0; i < sol.witnesses.size() && i < max_witnesses; ++i)
        w.push_back(json{{"kind", "unrooted"}, {"newick", to_newick(sol.witnesses[i])}});
    j["witnesses"] = std::move(w);
    return j;
}

// ---------------------------------------------------------------- checks ---

struct CheckRun {
    json results = json::array();
    int failures = 0;

    void record(const std::string& name, bool ok, const std::string& detail) {
        results.push_back({{"check", name}, {"pass", ok}, {"detail", detail}});
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << ": " << detail << "\n";
        if (!ok) ++failures;
    }
};

// Independent dilation-sum route, used to cross-check the congestion route.
std::int64_t dilation_sum(const Layout& l, const Multigraph& g) {
    std::int64_t total = 0;
    for (const auto& e : g.edges())
        total += e.mult * leaf_distance(l.tree, l.phi[e.u], l.phi[e.v]);
    return total;
}

Multigraph random_simple_graph(int n, std::mt19937_64& rng) {
    std::vector<GraphEdge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 2) es.push_back({u, v, 1});
    return Multigraph(n, std::move(es));
}

void verify_family(CheckRun& run, int max_leaves, int shards) {
    for (int L = 3; L <= max_leaves; ++L) {
        EnumerationSpec spec{L, TreeMode::unrooted_deg3, 3, shards, false};
        SigmaSolution sig = solve_min_sigma_ll(L, spec);
        LeafTree member = family_layout_tree(L, FamilyParams{3, 3});
        const bool value_ok = sig.best_value == sigma_ll(member);
        const bool unique_ok =
            sig.shapes.size() == 1 && tree_isomorphic(sig.shapes[0], member);
        run.record("family_optimality_L" + std::to_string(L), value_ok && unique_ok,
                   "min sigma_ll " + std::to_string(sig.best_value) + " over " +
                       std::to_string(sig.trees_evaluated) + " trees, " +
                       std::to_string(sig.shapes.size()) + " argmin shape(s)");
    }
}

void verify_duality(CheckRun& run, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int bad = 0;
    std::string detail;
    for (int i = 0; i < samples; ++i) {
        const int n = 3 + static_cast<int>(rng() % 10);  // 3..12
        Multigraph g = random_simple_graph(n, rng);
        Layout l = initial_layout(g, rng());
        const std::int64_t by_congestion = tree_length(l, g);
        const std::int64_t by_dilation = dilation_sum(l, g);
        bool ok = by_congestion == by_dilation;
        // leaf-edge congestion = weighted degree
        for (int v = 0; v < n && ok; ++v) {
            TreeEdge leaf_edge = make_tree_edge(l.phi[v], l.tree.neighbors(l.phi[v])[0]);
            ok = congestion(l, g, leaf_edge) == g.degree(v);
        }
        // additivity and complement identity
        Multigraph gc = complement(g);
        ok = ok && tree_length(l, edge_disjoint_union(g, gc)) ==
                       tree_length(l, g) + tree_length(l, gc);
        ok = ok && tree_length(l, g) + tree_length(l, gc) == sigma_ll(l.tree);
        if (!ok && ++bad == 1) detail = "first failure at sample " + std::to_string(i);
    }
    run.record("duality_and_identities", bad == 0,
               bad == 0 ? std::to_string(samples) + " random pairs" : detail);
}

void verify_reductions(CheckRun& run, int shards) {
    for (const std::string& name : reduction_corpus()) {
        Multigraph g = *builtin_graph(name);
        ReductionArtifact art = reduce_clique4_multigraph(g);
        EnumerationSpec spec{g.vertex_count(), TreeMode::unrooted_deg3, 3, shards, false};
        ExactSolution sol = solve_min_tree_length(art.output, spec, 1000);
        std::optional<VertexPartition> extracted = extract_clique4_answer(art, sol);
        const int block = g.vertex_count() / 4;
        auto direct = solve_clique_cover(g, std::vector<int>(4, block));
        const bool agree = extracted.has_value() == direct.has_value();
        const bool pullback_ok = !extracted || blocks_are_cliques(*extracted, g);
        run.record("clique4_" + name, agree && pullback_ok,
                   std::string(extracted ? "YES" : "no cover") + " via layout optimum " +
                       std::to_string(sol.best_value) + ", direct solver " +
                       (direct ? "YES" : "no cover"));
    }
    // Budget separation at n=4 and n=8: original contribution stays under M,
    // non-family trees pay at least M extra on the complete part.
    for (const std::string& name : {std::string("cycle:4"), std::string("cycle:8")}) {
        Multigraph g = *builtin_graph(name);
        ReductionArtifact art = reduce_clique4_multigraph(g);
        const std::int64_t member_sigma =
            sigma_ll(family_layout_tree(g.vertex_count(), FamilyParams{3, 3}));
        bool ok = true;
        std::int64_t max_orig = 0;
        enumerate_unrooted(g.vertex_count(), [&](const LeafTree& t) {
            Layout l = leaf_id_layout(t);
            const std::int64_t orig = tree_length(l, g);
            max_orig = std::max(max_orig, orig);
            if (orig >= art.m_value) ok = false;
            const std::int64_t complete_part = art.m_value * sigma_ll(l.tree);
            if (!is_family_member(l.tree, FamilyParams{3, 3}) &&
                complete_part < art.m_value * member_sigma + art.m_value)
                ok = false;
        });
        run.record("budget_separation_" + name, ok,
                   "max original contribution " + std::to_string(max_orig) + " < M = " +
                       std::to_string(art.m_value));
    }
}

void verify_rooted(CheckRun& run, int shards, std::uint64_t seed) {
    for (int base_n : {4, 5}) {
        Multigraph base = Multigraph::complete(base_n);
        EnumerationSpec bspec{base_n, TreeMode::unrooted_deg3, 3, shards, false};
        const std::int64_t base_opt = solve_min_tree_length(base, bspec).best_value;

        ReductionArtifact pend = add_pendant(base, 0);
        EnumerationSpec pspec{base_n + 1, TreeMode::unrooted_deg3, 3, shards, false};
        const std::int64_t pend_opt = solve_min_tree_length(pend.output, pspec).best_value;
        const std::int64_t nabla = base.min_degree();
        run.record("pendant_increase_K" + std::to_string(base_n),
                   pend_opt == base_opt + nabla + 2,
                   "optimum " + std::to_string(pend_opt) + " = base " +
                       std::to_string(base_opt) + " + min degree + 2");

        ReductionArtifact iso = add_isolated(pend.output);
        EnumerationSpec rspec{base_n + 2, TreeMode::rooted_binary, 3, shards, false};
        RootedExactSolution rooted = solve_min_rooted_tree_length(iso.output, rspec, 1000);
        run.record("rooted_isolated_plus_one_K" + std::to_string(base_n),
                   rooted.best_value == pend_opt + 1,
                   "rooted optimum " + std::to_string(rooted.best_value));

        bool adjacency_ok = !rooted.witnesses.empty();
        for (const auto& w : rooted.witnesses) {
            bool found = false;
            for (int c : w.children(w.root()))
                if (w.is_leaf(c) && w.label(c) == iso.added_vertex) found = true;
            if (!found) adjacency_ok = false;
        }
        run.record("isolated_leaf_adjacent_root_K" + std::to_string(base_n), adjacency_ok,
                   std::to_string(rooted.witnesses.size()) + " witnesses scanned");
    }
    // Rooted optimum never beats the unrooted one.
    std::mt19937_64 rng(seed);
    bool mono = true;
    for (int i = 0; i < 10; ++i) {
        const int n = 4 + static_cast<int>(rng() % 3);
        Multigraph g = random_simple_graph(n, rng);
        EnumerationSpec us{n, TreeMode::unrooted_deg3, 3, shards, false};
        EnumerationSpec rs{n, TreeMode::rooted_binary, 3, shards, false};
        if (solve_min_rooted_tree_length(g, rs).best_value <
            solve_min_tree_length(g, us).best_value)
            mono = false;
    }
    run.record("rooted_at_least_unrooted", mono, "10 random graphs, n in 4..6");
}

void verify_routing(CheckRun& run, int shards) {
    Multigraph k4 = Multigraph::complete(4);
    EnumerationSpec spec{4, TreeMode::routing_maxdeg, 4, shards, false};
    ExactSolution sol = solve_min_tree_length(k4, spec);
    run.record("k4_routing_delta4", sol.best_value == 12,
               "optimum " + std::to_string(sol.best_value) + " over " +
                   std::to_string(sol.trees_evaluated) + " trees");

    for (const std::string& name : {std::string("cycle:6"), std::string("star:6")}) {
        Multigraph g = *builtin_graph(name);
        ReductionArtifact art = reduce_cliquek_routing(g, 3);
        EnumerationSpec rspec{6, TreeMode::routing_maxdeg, 3, shards, false};
        ExactSolution rsol = solve_min_tree_length(art.output, rspec, 1000);
        auto extracted = extract_cliquek_answer(art, rsol);
        auto direct = solve_clique_cover(g, {2, 2, 2});
        run.record("cliquek3_" + name, extracted.has_value() == direct.has_value(),
                   std::string(extracted ? "YES" : "no cover") + ", direct " +
                       (direct ? "YES" : "no cover"));
    }
}

json artifact_to_json(const ReductionArtifact& a, const std::string& output_file) {
    static const char* names[] = {"clique4", "subdivide", "pendant", "isolated", "pad", "cliquek"};
    json j;
    j["kind"] = names[static_cast<int>(a.kind)];
    j["original"] = write_graph(a.original);
    j["output_file"] = output_file;
    j["output_digest"] = fnv1a_digest(write_graph(a.output));
    j["m_value"] = a.m_value;
    j["k"] = a.clique_k;
    j["subdivision_endpoints"] = a.subdivision_endpoints;
    j["pendant_vertex"] = a.pendant_vertex;
    j["added_vertex"] = a.added_vertex;
    j["pad_l"] = a.pad_l;
    j["pad_component"] = a.pad_component;
    return j;
}

ReductionArtifact artifact_from_json(const json& j) {
    ReductionArtifact a;
    const std::string kind = j.at("kind");
    Multigraph original = read_graph(j.at("original").get<std::string>());
    if (kind == "clique4") {
        a = reduce_clique4_multigraph(original);
    } else if (kind == "subdivide") {
        a = subdivide_all_edges(original);
    } else if (kind == "pendant") {
        a = add_pendant(original, j.at("pendant_vertex").get<int>());
    } else if (kind == "isolated") {
        a = add_isolated(original);
    } else if (kind == "pad") {
        a = pad_to_k_power(original, j.at("k").get<int>());
    } else if (kind == "cliquek") {
        a = reduce_cliquek_routing(original, j.at("k").get<int>());
    } else {
        throw std::invalid_argument("unknown reduction kind: " + kind);
    }
    if (fnv1a_digest(write_graph(a.output)) != j.at("output_digest").get<std::string>())
        throw std::invalid_argument("sidecar does not match the reconstructed reduction");
    return a;
}

void verify_sidecar(CheckRun& run, const ReductionArtifact& art, int shards) {
    const Multigraph& g = art.original;
    const int n = g.vertex_count();
    switch (art.kind) {
        case ReductionKind::clique4_multigraph: {
            EnumerationSpec spec{n, TreeMode::unrooted_deg3, 3, shards, false};
            ExactSolution sol = solve_min_tree_length(art.output, spec, 1000);
            auto extracted = extract_clique4_answer(art, sol);
            auto direct = solve_clique_cover(g, std::vector<int>(4, n / 4));
            run.record("clique4_soundness", extracted.has_value() == direct.has_value(),
                       extracted ? "cover extracted" : "no cover (agrees)");
            break;
        }
        case ReductionKind::cliquek_routing: {
            EnumerationSpec spec{n, TreeMode::routing_maxdeg, art.clique_k, shards, false};
            ExactSolution sol = solve_min_tree_length(art.output, spec, 1000);
            auto extracted = extract_cliquek_answer(art, sol);
            auto direct = solve_clique_cover(g, std::vector<int>(art.clique_k, n / art.clique_k));
            run.record("cliquek_soundness", extracted.has_value() == direct.has_value(),
                       extracted ? "cover extracted" : "no cover (agrees)");
            break;
        }
        case ReductionKind::subdivision_simple: {
            bool ok = art.output.is_simple() &&
                      art.output.vertex_count() == n + static_cast<int>(g.edge_total());
            for (std::size_t i = 0; i < art.subdivision_endpoints.size(); ++i)
                if (art.output.degree(n + static_cast<int>(i)) != 2) ok = false;
            run.record("subdivision_structure", ok,
                       std::to_string(art.output.vertex_count()) + " vertices, all new degree 2");
            break;
        }
        case ReductionKind::pendant: {
            EnumerationSpec bs{n, TreeMode::unrooted_deg3, 3, shards, false};
            EnumerationSpec ps{n + 1, TreeMode::unrooted_deg3, 3, shards, false};
            const std::int64_t before = solve_min_tree_length(g, bs).best_value;
            const std::int64_t after = solve_min_tree_length(art.output, ps).best_value;
            run.record("pendant_optimum_increase", after == before + g.min_degree() + 2,
                       std::to_string(before) + " -> " + std::to_string(after));
            break;
        }
        case ReductionKind::rooted_isolated: {
            EnumerationSpec us{n, TreeMode::unrooted_deg3, 3, shards, false};
            EnumerationSpec rs{n + 1, TreeMode::rooted_binary, 3, shards, false};
            const std::int64_t unrooted = solve_min_tree_length(g, us).best_value;
            const std::int64_t rooted = solve_min_rooted_tree_length(art.output, rs).best_value;
            run.record("rooted_isolated_plus_one", rooted == unrooted + 1,
                       std::to_string(unrooted) + " -> " + std::to_string(rooted));
            break;
        }
        case ReductionKind::pad_k: {
            const int k = art.clique_k;
            auto before = solve_clique_cover(g, std::vector<int>(k, n / k));
            const int pn = art.output.vertex_count();
            auto after = solve_clique_cover(art.output, std::vector<int>(k, pn / k));
            run.record("pad_equivalence", before.has_value() == after.has_value(),
                       std::string(before ? "YES" : "no cover") + " preserved");
            break;
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"routing-tree length toolkit"};
    app.require_subcommand(1);

    // --- measure ---
    auto* measure_cmd = app.add_subcommand("measure", "evaluate a layout against a graph");
    GraphInput measure_graph;
    measure_graph.add_options(measure_cmd);
    std::string tree_file;
    bool rooted_tree = false, check_duality = false;
    measure_cmd->add_option("--tree", tree_file, "newick tree file")->required();
    measure_cmd->add_flag("--rooted", rooted_tree, "treat the tree as rooted");
    measure_cmd->add_flag("--check-duality", check_duality,
                          "assert dilation sum equals congestion sum");

    // --- solve ---
    auto* solve_cmd = app.add_subcommand("solve", "minimize tree length");
    GraphInput solve_graph;
    solve_graph.add_options(solve_cmd);
    bool solve_exact = false, solve_local = false, solve_override = false;
    std::string solve_mode = "unrooted";
    int solve_delta = 3, solve_shards = 1, solve_restarts = 20, solve_plateau = 0;
    std::uint64_t solve_seed = 1;
    std::size_t solve_witness_limit = kDefaultWitnessLimit;
    solve_cmd->add_flag("--exact", solve_exact, "exhaustive solver");
    solve_cmd->add_flag("--local", solve_local, "restarted local search");
    solve_cmd->add_option("--mode", solve_mode, "unrooted|rooted|routing");
    solve_cmd->add_option("--delta", solve_delta, "max degree for routing mode");
    solve_cmd->add_option("--shards", solve_shards, "parallel shards for the exact scan");
    solve_cmd->add_option("--seed", solve_seed, "random seed");
    solve_cmd->add_option("--restarts", solve_restarts, "local search restarts");
    solve_cmd->add_option("--max-plateau-steps", solve_plateau, "allowed sideways moves");
    solve_cmd->add_option("--witness-limit", solve_witness_limit, "witnesses kept");
    solve_cmd->add_flag("--override-guard", solve_override, "lift the soft size guard");

    // --- enumerate ---
    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate host trees");
    int enum_leaves = 0, enum_delta = 3;
    std::string enum_mode = "unrooted";
    bool enum_count_only = false, enum_override = false;
    std::size_t enum_limit = 10;
    enum_cmd->add_option("--leaves", enum_leaves, "leaf count")->required();
    enum_cmd->add_option("--mode", enum_mode, "unrooted|rooted|routing");
    enum_cmd->add_option("--delta", enum_delta, "max degree for routing mode");
    enum_cmd->add_flag("--count-only", enum_count_only, "report the count only");
    enum_cmd->add_option("--limit", enum_limit, "trees listed when not count-only");
    enum_cmd->add_flag("--override-guard", enum_override, "lift the soft size guard");

    // --- canonical ---
    auto* canon_cmd = app.add_subcommand("canonical", "build the level-filled family member");
    int canon_nodes = 0, canon_r = 3, canon_delta = 3;
    canon_cmd->add_option("--nodes", canon_nodes, "node count")->required();
    canon_cmd->add_option("--r", canon_r, "root budget R");
    canon_cmd->add_option("--delta", canon_delta, "max degree");

    // --- cover ---
    auto* cover_cmd = app.add_subcommand("cover", "fixed-size clique cover");
    GraphInput cover_graph;
    cover_graph.add_options(cover_cmd);
    std::string cover_sizes;
    cover_cmd->add_option("--sizes", cover_sizes, "comma-separated block sizes")->required();

    // --- reduce ---
    auto* reduce_cmd = app.add_subcommand("reduce", "build a hardness gadget");
    GraphInput reduce_graph;
    reduce_graph.add_options(reduce_cmd);
    std::string reduce_kind, reduce_out = "reduction";
    int reduce_vertex = 0, reduce_k = 3;
    reduce_cmd->add_option("--kind", reduce_kind, "clique4|subdivide|pendant|isolated|pad|cliquek")
        ->required();
    reduce_cmd->add_option("--vertex", reduce_vertex, "pendant attachment vertex");
    reduce_cmd->add_option("--k", reduce_k, "k for pad/cliquek");
    reduce_cmd->add_option("--out", reduce_out, "output path prefix");

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "run a named invariant suite");
    std::string verify_suite, verify_reduction, verify_corpus = "builtin";
    int verify_max_leaves = 8, verify_random = 100, verify_shards = 1;
    std::uint64_t verify_seed = 1;
    verify_cmd->add_option("suite", verify_suite, "family|duality|reductions|rooted|routing");
    verify_cmd->add_option("--reduction", verify_reduction, "sidecar JSON to re-check");
    verify_cmd->add_option("--corpus", verify_corpus, "reductions suite corpus (builtin)");
    verify_cmd->add_option("--max-leaves", verify_max_leaves, "family suite leaf bound");
    verify_cmd->add_option("--random", verify_random, "duality suite sample count");
    verify_cmd->add_option("--seed", verify_seed, "random seed");
    verify_cmd->add_option("--shards", verify_shards, "parallel shards");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (*measure_cmd) {
            json report = report_frame("measure");
            Multigraph g = measure_graph.load(report["inputs"]);
            std::string tree_text = read_file(tree_file);
            report["inputs"]["tree"] = fnv1a_digest(tree_text);
            MeasureReport r;
            if (rooted_tree) {
                RootedBinaryTree b = rooted_from_newick(tree_text);
                r = measure(b, g);
            } else {
                Layout l = layout_from_newick(tree_text);
                r = measure(l, g);
            }
            if (check_duality) {
                std::int64_t lam = 0;
                for (const auto& [e, d] : r.per_graph_edge_dilation) lam += e.mult * d;
                if (lam != r.tree_length)
                    throw CheckFailure("duality violated: dilation sum " + std::to_string(lam) +
                                       " != congestion sum " + std::to_string(r.tree_length));
            }
            report["tree_kind"] = rooted_tree ? "rooted" : "unrooted";
            report["result"] = measure_to_json(r);
            emit(report, start);
            return 0;
        }

        if (*solve_cmd) {
            json report = report_frame("solve");
            Multigraph g = solve_graph.load(report["inputs"]);
            report["seed"] = solve_seed;
            if (solve_exact == solve_local)
                throw std::invalid_argument("choose exactly one of --exact and --local");
            if (solve_exact) {
                EnumerationSpec spec{g.vertex_count(), parse_mode(solve_mode), solve_delta,
                                     solve_shards, solve_override};
                if (spec.mode == TreeMode::rooted_binary) {
                    RootedExactSolution sol =
                        solve_min_rooted_tree_length(g, spec, solve_witness_limit);
                    json j;
                    j["best_value"] = sol.best_value;
                    j["trees_evaluated"] = sol.trees_evaluated;
                    j["optimal_count"] = sol.optimal_count;
                    json w = json::array();
                    for (std::size_t i = 0; i < sol.witnesses.size() && i < 10; ++i)
                        w.push_back(json{{"kind", "rooted"}, {"newick", to_newick(sol.witnesses[i])}});
                    j["witnesses"] = std::move(w);
                    report["result"] = std::move(j);
                } else {
                    report["result"] =
                        solution_to_json(solve_min_tree_length(g, spec, solve_witness_limit));
                }
            } else {
                SearchConfig cfg;
                cfg.seed = solve_seed;
                cfg.restarts = solve_restarts;
                cfg.max_plateau_steps = solve_plateau;
                SearchResult res = local_search(g, cfg);
                json j;
                j["best_value"] = res.value;
                j["layout"] = to_newick(res.layout);
                json trace = json::array();
                for (const auto& t : res.trace) {
                    json entry = {{"restart", t.restart},
                                  {"initial", t.initial_value},
                                  {"final", t.final_value},
                                  {"steps", t.steps}};
                    std::cerr << entry.dump() << "\n";  // trace as JSON lines
                    trace.push_back(std::move(entry));
                }
                j["trace"] = std::move(trace);
                report["result"] = std::move(j);
            }
            emit(report, start);
            return 0;
        }

        if (*enum_cmd) {
            json report = report_frame("enumerate");
            EnumerationSpec spec{enum_leaves, parse_mode(enum_mode), enum_delta, 1, enum_override};
            json j;
            j["count"] = count_trees(spec);
            if (!enum_count_only) {
                json trees = json::array();
                std::size_t listed = 0;
                if (spec.mode == TreeMode::rooted_binary) {
                    enumerate_rooted(enum_leaves, [&](const RootedBinaryTree& b) {
                        if (listed++ < enum_limit) trees.push_back(to_newick(b));
                    });
                } else if (spec.mode == TreeMode::routing_maxdeg) {
                    enumerate_routing(enum_leaves, enum_delta, [&](const LeafTree& t) {
                        if (listed++ < enum_limit) trees.push_back(to_newick(leaf_id_layout(t)));
                    });
                } else {
                    enumerate_unrooted(enum_leaves, [&](const LeafTree& t) {
                        if (listed++ < enum_limit) trees.push_back(to_newick(leaf_id_layout(t)));
                    });
                }
                j["trees"] = std::move(trees);
            }
            report["result"] = std::move(j);
            emit(report, start);
            return 0;
        }

        if (*canon_cmd) {
            json report = report_frame("canonical");
            FamilyParams p{canon_r, canon_delta};
            FamilyMember m = build_family_member(canon_nodes, p);
            json j;
            j["nodes"] = m.tree.node_count();
            j["leaves"] = m.tree.leaf_count();
            json levels = json::array();
            for (int v = 0; v < m.tree.node_count(); ++v)
                levels.push_back({{"node", v}, {"level", m.embedding.level[v]}});
            j["levels"] = std::move(levels);
            // Leaves take fresh vertex indices in node order for serialization.
            std::vector<int> phi;
            for (int v = 0; v < m.tree.node_count(); ++v)
                if (m.tree.is_leaf(v)) phi.push_back(v);
            j["newick"] = m.tree.node_count() == 1
                              ? "v0;"
                              : to_newick(make_layout(m.tree, phi));
            j["layout_projection"] = to_newick(leaf_id_layout(
                [&] {
                    LeafTree t = contract_degree2(m.tree);
                    // renumber so leaves are 0..L-1
                    std::vector<int> leaf_first(t.node_count());
                    int next_leaf = 0, next_internal = t.leaf_count();
                    for (int v = 0; v < t.node_count(); ++v)
                        leaf_first[v] = t.is_leaf(v) ? next_leaf++ : next_internal++;
                    std::vector<std::vector<int>> adj(t.node_count());
                    for (int v = 0; v < t.node_count(); ++v)
                        for (int u : t.neighbors(v)) adj[leaf_first[v]].push_back(leaf_first[u]);
                    return LeafTree::from_adjacency(std::move(adj));
                }()));
            report["result"] = std::move(j);
            emit(report, start);
            return 0;
        }

        if (*cover_cmd) {
            json report = report_frame("cover");
            Multigraph g = cover_graph.load(report["inputs"]);
            std::vector<int> sizes;
            std::stringstream ss(cover_sizes);
            for (std::string tok; std::getline(ss, tok, ',');) sizes.push_back(std::stoi(tok));
            auto result = solve_clique_cover(g, sizes);
            json j;
            j["found"] = result.has_value();
            if (result) j["blocks"] = result->blocks;
            report["result"] = std::move(j);
            emit(report, start);
            return 0;
        }

        if (*reduce_cmd) {
            json report = report_frame("reduce");
            Multigraph g = reduce_graph.load(report["inputs"]);
            ReductionArtifact art;
            if (reduce_kind == "clique4")
                art = reduce_clique4_multigraph(g);
            else if (reduce_kind == "subdivide")
                art = subdivide_all_edges(g);
            else if (reduce_kind == "pendant")
                art = add_pendant(g, reduce_vertex);
            else if (reduce_kind == "isolated")
                art = add_isolated(g);
            else if (reduce_kind == "pad")
                art = pad_to_k_power(g, reduce_k);
            else if (reduce_kind == "cliquek")
                art = reduce_cliquek_routing(g, reduce_k);
            else
                throw std::invalid_argument("unknown reduction kind: " + reduce_kind);

            const std::string graph_path = reduce_out + ".graph";
            const std::string sidecar_path = reduce_out + ".json";
            write_file(graph_path, write_graph(art.output));
            json sidecar = artifact_to_json(art, graph_path);
            write_file(sidecar_path, sidecar.dump(2));
            json j;
            j["output_graph"] = graph_path;
            j["sidecar"] = sidecar_path;
            j["output_vertices"] = art.output.vertex_count();
            j["output_edge_total"] = art.output.edge_total();
            report["result"] = std::move(j);
            emit(report, start);
            return 0;
        }

        if (*verify_cmd) {
            json report = report_frame("verify");
            report["seed"] = verify_seed;
            CheckRun run;
            if (!verify_reduction.empty()) {
                json sidecar = json::parse(read_file(verify_reduction));
                report["inputs"]["sidecar"] = fnv1a_digest(sidecar.dump());
                ReductionArtifact art = artifact_from_json(sidecar);
                verify_sidecar(run, art, verify_shards);
            } else if (verify_suite == "family") {
                verify_family(run, verify_max_leaves, verify_shards);
            } else if (verify_suite == "duality") {
                verify_duality(run, verify_random, verify_seed);
            } else if (verify_suite == "reductions") {
                if (verify_corpus != "builtin")
                    throw std::invalid_argument("unknown corpus: " + verify_corpus);
                verify_reductions(run, verify_shards);
            } else if (verify_suite == "rooted") {
                verify_rooted(run, verify_shards, verify_seed);
            } else if (verify_suite == "routing") {
                verify_routing(run, verify_shards);
            } else {
                throw std::invalid_argument("unknown suite: " + verify_suite);
            }
            report["result"] = {{"checks", run.results}, {"failures", run.failures}};
            emit(report, start);
            if (run.failures > 0) return 5;
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return 4;
    } catch (const CheckFailure& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 5;
    } catch (const ReductionSoundnessError& e) {
        std::cerr << "reduction soundness violation: " << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
