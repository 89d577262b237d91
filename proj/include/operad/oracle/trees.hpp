#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace operad::oracle {

// Brute-force enumerations used as independent counts in tests.

// All planar binary trees with n leaves, written as bracketings of x..x.
std::vector<std::string> planar_binary_trees(int n);
// Planar binary trees with n leaves and each of the n-1 vertices labelled by one of d generators.
std::vector<std::string> decorated_planar_trees(int n, int d);
// Binary trees with unordered children, leaves labelled 1..n and vertices labelled by one of d
// generators, each written once in canonical form.
std::vector<std::string> decorated_abstract_trees(int n, int d);

}  // namespace operad::oracle
