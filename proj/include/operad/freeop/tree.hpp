#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace operad {

// Decorated binary tree in preorder. A non-negative entry is a leaf with that
// (0-based) label; a negative entry c is an internal vertex decorated by
// generator -1-c, followed by its left and right subtrees.
using TreeCode = std::vector<int>;

inline bool is_leaf(int c) { return c >= 0; }
inline int vertex_gen(int c) { return -1 - c; }
inline int vertex_code(int g) { return -1 - g; }

// One past the last entry of the subtree starting at pos.
std::size_t subtree_end(const TreeCode& t, std::size_t pos);
int tree_arity(const TreeCode& t);
int min_leaf(const TreeCode& t, std::size_t pos);
bool is_well_formed(const TreeCode& t);

// Replaces every leaf label l by map[l].
TreeCode relabel_leaves(const TreeCode& t, const std::vector<int>& map);
// Replaces the leaf labelled `leaf` by the subtree `sub` (whose labels are kept).
TreeCode substitute_leaf(const TreeCode& t, int leaf, const TreeCode& sub);
TreeCode make_vertex(int gen, const TreeCode& left, const TreeCode& right);
// Same tree with every vertex decorated by generator 0.
TreeCode strip_labels(const TreeCode& t);
// Generator labels of the internal vertices in preorder.
std::vector<int> vertex_labels(const TreeCode& t);

// Leaves printed 1-based, e.g. "mu(nu(1,2),3)".
std::string tree_str(const TreeCode& t, const std::vector<std::string>& names);

}  // namespace operad
