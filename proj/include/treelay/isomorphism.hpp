#pragma once

#include <string>

#include "treelay/rooted_tree.hpp"
#include "treelay/tree.hpp"

namespace treelay {

// Center-rooted AHU encodings. Equal strings <=> isomorphic; usable as hash
// keys for shape deduplication. Works on arbitrary trees (degree-2 nodes ok).
std::string canonical_form(const LeafTree& t);

// Leaf labels participate: equal strings <=> labeled-isomorphic layouts.
std::string canonical_form(const Layout& l);

std::string canonical_form(const RootedBinaryTree& b, bool labeled);

bool tree_isomorphic(const LeafTree& a, const LeafTree& b);
bool layout_isomorphic(const Layout& a, const Layout& b);

}  // namespace treelay
