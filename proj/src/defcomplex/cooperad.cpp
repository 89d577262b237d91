#include "operad/defcomplex/cooperad.hpp"

#include "operad/manin/products.hpp"

#include <stdexcept>

namespace operad {

DualCooperadTrunc::DualCooperadTrunc(const QuadPresentation& p, int max_arity)
    : p_(p), dual_(koszul_dual(p)), nmax_(max_arity) {
    if (max_arity < 1 || max_arity > free_max_arity())
        throw std::invalid_argument("truncation arity " + std::to_string(max_arity) + " outside 1.." +
                                    std::to_string(free_max_arity()));
    tower_ = std::make_shared<IdealTower>(dual_.gen(), dual_.relations(), nmax_);
    for (int n = 1; n <= nmax_; ++n) {
        ideal_.push_back(tower_->ideal(n));
        const Subspace& s = ideal_.back();
        std::vector<bool> pivot(s.ambient_dim(), false);
        for (auto c : s.pivots()) pivot[c] = true;
        std::vector<std::uint32_t> b;
        std::map<std::uint32_t, std::size_t> coord;
        for (std::uint32_t c = 0; c < s.ambient_dim(); ++c)
            if (!pivot[c]) {
                coord.emplace(c, b.size());
                b.push_back(c);
            }
        basis_.push_back(std::move(b));
        coord_.push_back(std::move(coord));
    }
    for (int p1 = 1; p1 <= nmax_; ++p1)
        for (int q = 1; p1 + q - 1 <= nmax_; ++q) {
            int n = p1 + q - 1;
            for (int i = 0; i < p1; ++i) {
                std::vector<std::vector<SparseVector>> table(dim(p1), std::vector<SparseVector>(dim(q)));
                for (std::size_t b1 = 0; b1 < dim(p1); ++b1)
                    for (std::size_t b2 = 0; b2 < dim(q); ++b2) {
                        SparseVector x{{basis_index(p1, b1), Rational(1)}}, y{{basis_index(q, b2), Rational(1)}};
                        SparseVector c = partial_compose(free_span(n), free_span(p1), x, i, free_span(q), y);
                        table[b1][b2] = normal_form(n, c);
                    }
                comp_.emplace(std::make_tuple(p1, i, q), std::move(table));
            }
        }
}

TreeCode DualCooperadTrunc::basis_tree(int n, std::size_t k) const { return free_span(n).basis_tree(basis_index(n, k)); }

std::string DualCooperadTrunc::basis_str(int n, std::size_t k) const { return free_span(n).basis_str(basis_index(n, k)); }

SparseVector DualCooperadTrunc::normal_form(int n, const SparseVector& free) const {
    SparseVector r = ideal_.at(static_cast<std::size_t>(n - 1)).reduce(free);
    const auto& coord = coord_[static_cast<std::size_t>(n - 1)];
    SparseVector out;
    out.reserve(r.size());
    for (const auto& [c, x] : r) out.emplace_back(static_cast<std::uint32_t>(coord.at(c)), x);
    return out;
}

const SparseVector& DualCooperadTrunc::compose(int p, int i, int q, std::size_t b1, std::size_t b2) const {
    auto it = comp_.find(std::make_tuple(p, i, q));
    if (it == comp_.end()) throw std::out_of_range("composition outside the truncation");
    return it->second.at(b1).at(b2);
}

std::vector<DualCooperadTrunc::CoproductTerm> DualCooperadTrunc::coproduct(int n, std::size_t k) const {
    std::vector<CoproductTerm> out;
    for (const auto& [key, table] : comp_) {
        auto [p, i, q] = key;
        if (p + q - 1 != n || p == 1 || q == 1) continue;
        for (std::size_t b1 = 0; b1 < table.size(); ++b1)
            for (std::size_t b2 = 0; b2 < table[b1].size(); ++b2)
                for (const auto& [j, c] : table[b1][b2])
                    if (j == k) out.push_back({p, i, q, b1, b2, c});
    }
    return out;
}

namespace {

SparseVector compose_vec(const DualCooperadTrunc& c, int p, const SparseVector& x, int i, int q, const SparseVector& y) {
    std::vector<SparseEntry> acc;
    for (const auto& [b1, a] : x)
        for (const auto& [b2, b] : y)
            for (const auto& [k, v] : c.compose(p, i, q, b1, b2)) acc.emplace_back(k, a * b * v);
    return make_sparse(std::move(acc));
}

}  // namespace

std::size_t DualCooperadTrunc::associativity_failures() const {
    std::size_t fails = 0;
    for (int p = 1; p <= nmax_; ++p)
        for (int q = 1; p + q - 1 <= nmax_; ++q)
            for (int r = 1; p + q + r - 2 <= nmax_; ++r)
                for (std::size_t a = 0; a < dim(p); ++a)
                    for (std::size_t b = 0; b < dim(q); ++b)
                        for (std::size_t c = 0; c < dim(r); ++c) {
                            SparseVector x{{static_cast<std::uint32_t>(a), 1}}, y{{static_cast<std::uint32_t>(b), 1}},
                                z{{static_cast<std::uint32_t>(c), 1}};
                            for (int i = 0; i < p; ++i) {
                                SparseVector xy = compose_vec(*this, p, x, i, q, y);
                                // (x o_i y) o_{i+j} z = x o_i (y o_j z)
                                for (int j = 0; j < q; ++j) {
                                    SparseVector lhs = compose_vec(*this, p + q - 1, xy, i + j, r, z);
                                    SparseVector rhs = compose_vec(*this, p, x, i, q + r - 1, compose_vec(*this, q, y, j, r, z));
                                    if (lhs != rhs) ++fails;
                                }
                                // (x o_i y) o_{k+q-1} z = (x o_k z) o_i y for i < k
                                for (int k = i + 1; k < p; ++k) {
                                    SparseVector lhs = compose_vec(*this, p + q - 1, xy, k + q - 1, r, z);
                                    SparseVector rhs = compose_vec(*this, p + r - 1, compose_vec(*this, p, x, k, r, z), i, q, y);
                                    if (lhs != rhs) ++fails;
                                }
                            }
                        }
    return fails;
}

}  // namespace operad
