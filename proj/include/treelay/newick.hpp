#pragma once

#include <string>

#include "treelay/rooted_tree.hpp"
#include "treelay/tree.hpp"

namespace treelay {

// Newick-style serialization. Leaves are written as "vK" where K is the graph
// vertex index; internal nodes are unlabeled. Unrooted trees render rooted at
// the canonical center (trifurcating root for layout trees); parsing an
// unrooted string contracts a binary root back out.
std::string to_newick(const Layout& l);
std::string to_newick(const RootedBinaryTree& b);

Layout layout_from_newick(const std::string& text);
RootedBinaryTree rooted_from_newick(const std::string& text);

}  // namespace treelay
