#pragma once

#include "operad/freeop/freespan.hpp"
#include "operad/freeop/ideal.hpp"
#include "operad/presentations/presentation.hpp"

#include <map>
#include <memory>
#include <tuple>
#include <vector>

namespace operad {

// Truncation of the Koszul dual cooperad P^c, built from P! = F(V^vee)/(R^perp).
//
// P!(n) is realized on the free trees whose columns are not pivots of the RREF of
// the ideal (R^perp)(n), in increasing column order; every free element is reduced
// to this basis by Subspace::reduce. The partial coproduct of P^c is the transpose
// of the partial compositions of P! in this basis (P^c(n) = P!(n)^* with the
// suspension signs carried by the convolution product).
class DualCooperadTrunc {
public:
    DualCooperadTrunc(const QuadPresentation& p, int max_arity);

    const QuadPresentation& operad() const { return p_; }
    const QuadPresentation& dual() const { return dual_; }
    int max_arity() const { return nmax_; }

    std::size_t dim(int n) const { return basis_.at(static_cast<std::size_t>(n - 1)).size(); }
    // FreeSpan index of the k-th basis element of P!(n).
    std::uint32_t basis_index(int n, std::size_t k) const { return basis_.at(static_cast<std::size_t>(n - 1)).at(k); }
    TreeCode basis_tree(int n, std::size_t k) const;
    std::string basis_str(int n, std::size_t k) const;
    const FreeSpan& free_span(int n) const { return tower_->free_span(n); }

    // Coordinates in the P!(n) basis of an element of F(V^vee)(n).
    SparseVector normal_form(int n, const SparseVector& free) const;

    // b1 o_i b2 in P!(p+q-1) with a 0-based slot i; requires p + q - 1 <= max_arity.
    const SparseVector& compose(int p, int i, int q, std::size_t b1, std::size_t b2) const;

    struct CoproductTerm {
        int p, i, q;
        std::size_t left, right;
        Rational coeff;
    };
    // Delta'(b^*) for the k-th dual basis element of P^c(n).
    std::vector<CoproductTerm> coproduct(int n, std::size_t k) const;

    // Sequential and parallel associativity of the partial compositions on the
    // truncation (equivalently, coassociativity of Delta'); returns the number of
    // failing instances.
    std::size_t associativity_failures() const;

private:
    QuadPresentation p_, dual_;
    int nmax_;
    std::shared_ptr<IdealTower> tower_;
    std::vector<Subspace> ideal_;
    std::vector<std::vector<std::uint32_t>> basis_;
    std::vector<std::map<std::uint32_t, std::size_t>> coord_;
    std::map<std::tuple<int, int, int>, std::vector<std::vector<SparseVector>>> comp_;
};

}  // namespace operad
