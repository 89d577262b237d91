#pragma once

#include "operad/exact/echelon.hpp"
#include "operad/exact/subspace.hpp"
#include "operad/freeop/freespan.hpp"

#include <vector>

namespace operad {

// The ideal (R) of F(V) generated by weight-two relations, for arities 1..nmax.
//
// I(3) is R. For n >= 4, I(n) is spanned by grafts of a basis of I(n-1):
//   symmetric: replace leaf n-1 by g(x_a, x_b) for every pair a < b, and g(x, x_k)
//     for every k, the other leaves relabelled monotonically;
//   regular: x o_i g for every slot, g o_1 x and g o_2 x;
// for every generator g. Every tree containing a relation vertex pair has either
// a cherry or a root leaf outside that pair, so these grafts already span I(n).
// The symmetric result is then closed under adjacent transpositions
// (orbit saturation) and the number of vectors this adds is recorded.
class IdealTower {
public:
    IdealTower(GenSpace gen, const Subspace& relations_w2, int nmax, bool saturate = true);

    const GenSpace& gen() const { return gen_; }
    int max_arity() const { return nmax_; }
    const FreeSpan& free_span(int n) const;
    const Echelon& echelon(int n) const;
    std::size_t ideal_dim(int n) const { return echelon(n).rank(); }
    std::size_t free_dim(int n) const { return free_span(n).dim(); }
    std::size_t quotient_dim(int n) const { return free_dim(n) - ideal_dim(n); }
    // Canonical RREF form of I(n); costs a full back-substitution.
    Subspace ideal(int n) const { return Subspace::from_echelon(echelon(n)); }
    std::size_t saturation_added(int n) const { return added_.at(static_cast<std::size_t>(n - 1)); }

private:
    void build(int n, bool saturate);

    GenSpace gen_;
    int nmax_;
    std::vector<FreeSpan> spans_;
    std::vector<Echelon> ech_;
    std::vector<std::size_t> added_;
};

// (R)(n) as a canonical subspace of F(V)(n).
Subspace ideal_span(const GenSpace& gen, const Subspace& relations_w2, int n);

}  // namespace operad
