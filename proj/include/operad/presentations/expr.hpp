#pragma once

#include "operad/exact/rational.hpp"
#include "operad/freeop/genspace.hpp"
#include "operad/freeop/tree.hpp"

#include <string>
#include <utility>
#include <vector>

namespace operad {

// Parses a linear combination of arity-3 monomials in prefix notation, e.g.
//   "prec(prec(x,y),z) - prec(x,prec(y,z)) - 1/2*prec(x,succ(y,z))".
// Variables are x, y, z (leaves 1, 2, 3); operation names are generator names.
std::vector<std::pair<Rational, TreeCode>> parse_tree_combination(const GenSpace& g, const std::string& text);

// Same, in weight-two coordinates. In the regular case the variables must appear
// in the order x, y, z.
SparseVector parse_relation(const GenSpace& g, const std::string& text);

// Weight-two vector from v-coordinates on the generating space mu, mu' of k[S2]:
// text like "v1 - v2 + v3 - v4".
SparseVector parse_v_relation(const GenSpace& g, const std::string& text);

struct VEntry {
    int comp;
    std::size_t upper;
    std::size_t lower;
};
// v_1..v_12 as (type, upper, lower) with 0 = mu and 1 = mu'.
extern const VEntry kVTable[12];

}  // namespace operad
