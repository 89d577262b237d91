#pragma once

#include "operad/exact/echelon.hpp"
#include "operad/exact/matrix.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace operad {

// Linear subspace of Q^n held in reduced row-echelon form. The RREF basis is
// unique, so equality of subspaces is equality of their stored rows.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : n_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<SparseVector>& vs);
    static Subspace span(const Matrix& rows);
    static Subspace from_echelon(const Echelon& e);
    static Subspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    bool is_full() const { return rows_.size() == n_; }

    // RREF rows, sorted by pivot column; each monic at its pivot.
    const std::vector<SparseVector>& basis() const { return rows_; }
    const std::vector<std::uint32_t>& pivots() const { return piv_; }
    Matrix matrix() const;

    bool contains(const SparseVector& v) const;
    // Unique representative of v modulo the subspace, supported off the pivot columns.
    SparseVector reduce(const SparseVector& v) const;
    bool is_subspace_of(const Subspace& o) const;

    bool operator==(const Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    // Vectors orthogonal to the subspace under the standard dot product.
    Subspace annihilator() const;

    std::string str() const;

private:
    std::size_t n_ = 0;
    std::vector<SparseVector> rows_;
    std::vector<std::uint32_t> piv_;
    std::vector<int> row_of_col_;  // pivot column -> row index, -1 elsewhere
};

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);

// Reduced row-echelon form of m with its pivot columns.
std::pair<Matrix, std::vector<std::uint32_t>> rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// {x : m x = 0}
Subspace kernel(const Matrix& m);
// Column space of m.
Subspace image(const Matrix& m);
// {x : u^T G x = 0 for all u in U}. Throws std::domain_error if G is degenerate.
Subspace orth_complement(const Subspace& u, const Matrix& form);
// {x : m x in U}
Subspace preimage(const Matrix& m, const Subspace& u);
// Inverse of a square matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& m);
// Image of U under x -> m x.
Subspace push_forward(const Matrix& m, const Subspace& u);

}  // namespace operad
