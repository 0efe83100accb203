#include "treelay/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace treelay {

namespace {

// 1 or 2 adjacent nodes left after iterated leaf removal.
std::vector<int> tree_center(const LeafTree& t) {
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

std::string encode_from(const LeafTree& t, int root, const std::vector<int>* leaf_text) {
    // leaf_text: per-node label string for leaves (vertex index), or null.
    std::function<std::string(int, int)> enc = [&](int v, int parent) {
        std::vector<std::string> subs;
        for (int u : t.neighbors(v))
            if (u != parent) subs.push_back(enc(u, v));
        std::sort(subs.begin(), subs.end());
        std::string s = "(";
        if (t.is_leaf(v) && leaf_text) s += std::to_string((*leaf_text)[v]);
        for (const auto& x : subs) s += x;
        s += ")";
        return s;
    };
    return enc(root, -1);
}

std::string canonical_impl(const LeafTree& t, const std::vector<int>* leaf_text) {
    if (t.node_count() == 0) return "";
    std::string best;
    for (int c : tree_center(t)) {
        std::string s = encode_from(t, c, leaf_text);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

std::string canonical_form(const LeafTree& t) { return canonical_impl(t, nullptr); }

std::string canonical_form(const Layout& l) {
    std::vector<int> leaf_text(l.tree.node_count(), -1);
    for (int v = 0; v < l.vertex_count(); ++v) leaf_text[l.phi[v]] = v;
    return canonical_impl(l.tree, &leaf_text);
}

std::string canonical_form(const RootedBinaryTree& b, bool labeled) {
    std::function<std::string(int)> enc = [&](int v) {
        if (b.is_leaf(v))
            return labeled ? "(" + std::to_string(b.label(v)) + ")" : std::string("()");
        std::string a = enc(b.children(v)[0]);
        std::string c = enc(b.children(v)[1]);
        if (c < a) std::swap(a, c);
        return "(" + a + c + ")";
    };
    return enc(b.root());
}

bool tree_isomorphic(const LeafTree& a, const LeafTree& b) {
    return a.node_count() == b.node_count() && canonical_form(a) == canonical_form(b);
}

bool layout_isomorphic(const Layout& a, const Layout& b) {
    return a.tree.node_count() == b.tree.node_count() && canonical_form(a) == canonical_form(b);
}

}  // namespace treelay
