#pragma once

#include "operad/exact/perm.hpp"
#include "operad/exact/rational.hpp"
#include "operad/freeop/genspace.hpp"
#include "operad/freeop/tree.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace operad {

// Largest arity accepted by FreeSpan and the ideal computations. Default 5;
// raising it to 6 is supported but slow for two-dimensional generators.
int free_max_arity();
void set_free_max_arity(int n);
constexpr int kHardMaxArity = 7;

// Basis of the arity-n component of the free operad on a generating space.
//
// Symmetric kind: trees with leaves labelled 0..n-1 in which the children of every
// vertex are ordered by their minimal leaf; dim = (2n-3)!! d^(n-1).
// Regular kind: planar trees with leaves 0..n-1 from left to right (the
// non-symmetric operad); dim = Catalan(n-1) d^(n-1).
// Basis index = shape * d^(n-1) + vertex labels read in preorder as base-d digits.
class FreeSpan {
public:
    FreeSpan(GenSpace gen, int n);

    const GenSpace& gen() const { return gen_; }
    Kind kind() const { return gen_.kind(); }
    int arity() const { return n_; }
    std::size_t dim() const { return shapes_.size() * labelings_; }
    std::size_t num_shapes() const { return shapes_.size(); }

    TreeCode basis_tree(std::size_t i) const;
    // Index of a tree already in basis form.
    std::optional<std::size_t> index_of(const TreeCode& t) const;
    // Expansion of an arbitrary decorated tree in the basis. In the symmetric case
    // children are reordered and each swap applies action12 to the vertex label.
    // In the regular case the leaves must read 0..n-1 from left to right.
    SparseVector expand(const TreeCode& t) const;
    SparseVector expand(const std::vector<std::pair<Rational, TreeCode>>& terms) const;
    // Leaf relabelling x_i -> x_sigma(i) (symmetric kind only).
    SparseVector act(const SparseVector& v, const Perm& sigma) const;

    std::string basis_str(std::size_t i) const { return tree_str(basis_tree(i), gen_.names()); }
    std::string vector_str(const SparseVector& v) const;

private:
    void canonical_terms(const TreeCode& t, std::size_t& pos, std::vector<std::pair<Rational, TreeCode>>& out,
                         int& minleaf) const;

    GenSpace gen_;
    int n_;
    std::size_t labelings_;
    std::vector<TreeCode> shapes_;
    std::map<TreeCode, std::size_t> shape_index_;
};

// Planar free-operad partial composition x o_i y (i is 0-based): the leaves of y
// occupy positions i..i+q-1 and later leaves of x shift by q-1. For the symmetric
// kind the leaf labels follow the same shift convention.
SparseVector partial_compose(const FreeSpan& target, const FreeSpan& xs, const SparseVector& x, int i,
                             const FreeSpan& ys, const SparseVector& y);

std::size_t double_factorial(int n);
std::size_t catalan(int n);
// Closed-form dimension of F(V)(n).
std::size_t free_dim(Kind kind, std::size_t d, int n);

}  // namespace operad
