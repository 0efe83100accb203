#include "treelay/newick.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace treelay {

namespace {

std::vector<int> peel_center(const LeafTree& t) {
    const int n = t.node_count();
    if (n == 1) return {0};
    std::vector<int> deg(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    std::vector<char> removed(n, 0);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int u : t.neighbors(v))
                if (!removed[u] && --deg[u] == 1) next.push_back(u);
        }
        layer = std::move(next);
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) out.push_back(v);
    return out;
}

struct ParsedNode {
    std::vector<int> children;
    int label = -1;  // vertex index for leaves
};

// Minimal recursive-descent parser for "(...,...)" groups and vK leaves.
struct NewickParser {
    const std::string& s;
    std::size_t pos = 0;
    std::vector<ParsedNode> nodes;

    explicit NewickParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
            ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("newick: " + msg + " at position " + std::to_string(pos));
    }

    int parse_node() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end");
        if (s[pos] == '(') {
            ++pos;
            const int id = static_cast<int>(nodes.size());
            nodes.push_back(ParsedNode{});
            while (true) {
                const int child = parse_node();  // may reallocate nodes
                nodes[id].children.push_back(child);
                skip_ws();
                if (pos < s.size() && s[pos] == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            return id;
        }
        if (s[pos] != 'v') fail("expected leaf label vK or '('");
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) fail("expected digits after 'v'");
        ParsedNode leaf;
        leaf.label = std::stoi(s.substr(start, pos - start));
        nodes.push_back(leaf);
        return static_cast<int>(nodes.size()) - 1;
    }

    int parse_document() {
        int root = parse_node();
        skip_ws();
        if (pos < s.size() && s[pos] == ';') ++pos;
        skip_ws();
        if (pos != s.size()) fail("trailing characters");
        return root;
    }
};

std::string render(const LeafTree& t, const std::vector<int>& leaf_label, int v, int parent) {
    if (t.is_leaf(v)) return "v" + std::to_string(leaf_label[v]);
    std::vector<std::string> subs;
    for (int u : t.neighbors(v))
        if (u != parent) subs.push_back(render(t, leaf_label, u, v));
    std::sort(subs.begin(), subs.end());
    std::string out = "(";
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (i) out += ",";
        out += subs[i];
    }
    return out + ")";
}

}  // namespace

std::string to_newick(const Layout& l) {
    std::vector<int> leaf_label(l.tree.node_count(), -1);
    for (int v = 0; v < l.vertex_count(); ++v) leaf_label[l.phi[v]] = v;
    if (l.tree.node_count() == 1) return "v" + std::to_string(leaf_label[0]) + ";";
    if (l.tree.node_count() == 2) {
        int a = std::min(leaf_label[0], leaf_label[1]);
        int b = std::max(leaf_label[0], leaf_label[1]);
        return "(v" + std::to_string(a) + ",v" + std::to_string(b) + ");";
    }
    // Centers of a tree with >= 3 nodes are internal, so rendering recurses.
    std::string best;
    for (int c : peel_center(l.tree)) {
        std::string s = render(l.tree, leaf_label, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best + ";";
}

std::string to_newick(const RootedBinaryTree& b) {
    std::function<std::string(int)> rec = [&](int v) {
        if (b.is_leaf(v)) return "v" + std::to_string(b.label(v));
        return "(" + rec(b.children(v)[0]) + "," + rec(b.children(v)[1]) + ")";
    };
    return rec(b.root()) + ";";
}

Layout layout_from_newick(const std::string& text) {
    NewickParser p(text);
    const int root = p.parse_document();
    const int pn = static_cast<int>(p.nodes.size());
    if (pn == 1) {
        if (p.nodes[0].label != 0)
            throw std::invalid_argument("newick: single-leaf layout must be labeled v0");
        return Layout{LeafTree::single_node(), {0}};
    }
    std::vector<std::vector<int>> adj(pn);
    for (int v = 0; v < pn; ++v)
        for (int c : p.nodes[v].children) {
            adj[v].push_back(c);
            adj[c].push_back(v);
        }
    // Unrooted convention: a binary root is an artifact of rendering.
    if (p.nodes[root].children.size() == 2) {
        int a = adj[root][0], b = adj[root][1];
        *std::find(adj[a].begin(), adj[a].end(), root) = b;
        *std::find(adj[b].begin(), adj[b].end(), root) = a;
        adj[root].clear();
    }
    // Compact ids over non-removed nodes.
    std::vector<int> remap(pn, -1);
    int next = 0;
    for (int v = 0; v < pn; ++v)
        if (!adj[v].empty() || pn == 1) remap[v] = next++;
    std::vector<std::vector<int>> cadj(next);
    for (int v = 0; v < pn; ++v)
        for (int u : adj[v]) cadj[remap[v]].push_back(remap[u]);
    LeafTree tree = LeafTree::from_adjacency(std::move(cadj));

    std::vector<int> phi;
    for (int v = 0; v < pn; ++v) {
        if (p.nodes[v].label < 0) continue;
        const int vertex = p.nodes[v].label;
        if (vertex >= static_cast<int>(phi.size())) phi.resize(vertex + 1, -1);
        if (phi[vertex] != -1)
            throw std::invalid_argument("newick: duplicate leaf label v" + std::to_string(vertex));
        phi[vertex] = remap[v];
    }
    for (std::size_t v = 0; v < phi.size(); ++v)
        if (phi[v] < 0)
            throw std::invalid_argument("newick: leaf labels must cover v0..v(L-1)");
    return make_layout(std::move(tree), std::move(phi));
}

RootedBinaryTree rooted_from_newick(const std::string& text) {
    NewickParser p(text);
    const int root = p.parse_document();
    std::function<RootedBinaryTree(int)> build = [&](int v) {
        const auto& node = p.nodes[v];
        if (node.children.empty()) return RootedBinaryTree::leaf(node.label);
        if (node.children.size() != 2)
            throw std::invalid_argument("newick: rooted tree must be strictly binary");
        return RootedBinaryTree::join(build(node.children[0]), build(node.children[1]));
    };
    return build(root);
}

}  // namespace treelay
