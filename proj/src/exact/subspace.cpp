#include "operad/exact/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace operad {

namespace {

void check_ambient(std::size_t a, std::size_t b) {
    if (a != b)
        throw std::invalid_argument("subspace dimension mismatch: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
}

}  // namespace

Subspace Subspace::from_echelon(const Echelon& e) {
    Subspace s(e.ncols());
    s.rows_ = e.rref();
    s.row_of_col_.assign(s.n_, -1);
    for (std::size_t r = 0; r < s.rows_.size(); ++r) {
        s.piv_.push_back(s.rows_[r].front().first);
        s.row_of_col_[s.piv_.back()] = static_cast<int>(r);
    }
    return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<SparseVector>& vs) {
    Echelon e(ambient);
    for (const auto& v : vs) {
        if (e.rank() == ambient) break;
        e.insert(v);
    }
    return from_echelon(e);
}

Subspace Subspace::span(const Matrix& rows) {
    std::vector<SparseVector> vs;
    vs.reserve(rows.rows());
    for (std::size_t i = 0; i < rows.rows(); ++i) vs.push_back(rows.sparse_row(i));
    return span(rows.cols(), vs);
}

Subspace Subspace::full(std::size_t ambient) {
    std::vector<SparseVector> vs;
    for (std::size_t i = 0; i < ambient; ++i) vs.push_back({{static_cast<std::uint32_t>(i), Rational(1)}});
    return span(ambient, vs);
}

Matrix Subspace::matrix() const {
    Matrix m(rows_.size(), n_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [j, x] : rows_[r]) m(r, j) = x;
    return m;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
    SparseVector out = v;
    for (const auto& [j, x] : v) {
        if (j >= n_) throw std::invalid_argument("vector index exceeds ambient dimension");
        int r = row_of_col_.empty() ? -1 : row_of_col_[j];
        if (r >= 0) out = axpy(-x, rows_[static_cast<std::size_t>(r)], out);
    }
    return out;
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).empty(); }

bool Subspace::is_subspace_of(const Subspace& o) const {
    check_ambient(n_, o.n_);
    for (const auto& r : rows_)
        if (!o.contains(r)) return false;
    return true;
}

Subspace Subspace::annihilator() const {
    // Kernel of the RREF matrix: one vector per free column j.
    std::vector<std::vector<SparseEntry>> acc(n_);
    for (const auto& row : rows_) {
        std::uint32_t p = row.front().first;
        for (std::size_t k = 1; k < row.size(); ++k) acc[row[k].first].emplace_back(p, -row[k].second);
    }
    std::vector<SparseVector> vs;
    for (std::size_t j = 0; j < n_; ++j) {
        if (!row_of_col_.empty() && row_of_col_[j] >= 0) continue;
        acc[j].emplace_back(static_cast<std::uint32_t>(j), Rational(1));
        vs.push_back(make_sparse(std::move(acc[j])));
    }
    return span(n_, vs);
}

std::string Subspace::str() const {
    std::ostringstream os;
    os << "Subspace(ambient=" << n_ << ", dim=" << dim() << ")";
    for (const auto& r : rows_) {
        os << "\n ";
        for (const auto& [j, x] : r) os << " " << j << ":" << x;
    }
    return os.str();
}

Subspace sum(const Subspace& u, const Subspace& w) {
    check_ambient(u.ambient_dim(), w.ambient_dim());
    std::vector<SparseVector> vs = u.basis();
    vs.insert(vs.end(), w.basis().begin(), w.basis().end());
    return Subspace::span(u.ambient_dim(), vs);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    check_ambient(u.ambient_dim(), w.ambient_dim());
    return sum(u.annihilator(), w.annihilator()).annihilator();
}

std::pair<Matrix, std::vector<std::uint32_t>> rref(const Matrix& m) {
    Subspace s = Subspace::span(m);
    return {s.matrix(), s.pivots()};
}

std::size_t rank(const Matrix& m) { return Subspace::span(m).dim(); }

Subspace kernel(const Matrix& m) { return Subspace::span(m).annihilator(); }

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace orth_complement(const Subspace& u, const Matrix& form) {
    if (!form.is_square() || form.rows() != u.ambient_dim())
        throw std::invalid_argument("bilinear form has wrong shape");
    if (rank(form) != form.rows()) throw std::domain_error("bilinear form is degenerate");
    // Rows u^T G; the complement is their annihilator.
    Matrix g = form.transpose();
    std::vector<SparseVector> vs;
    vs.reserve(u.dim());
    for (const auto& r : u.basis()) vs.push_back(g.apply(r));
    return Subspace::span(u.ambient_dim(), vs).annihilator();
}

Subspace preimage(const Matrix& m, const Subspace& u) {
    check_ambient(m.rows(), u.ambient_dim());
    Matrix mt = m.transpose();
    std::vector<SparseVector> vs;
    Subspace ann = u.annihilator();
    for (const auto& a : ann.basis()) vs.push_back(mt.apply(a));
    return Subspace::span(m.cols(), vs).annihilator();
}

Subspace push_forward(const Matrix& m, const Subspace& u) {
    check_ambient(m.cols(), u.ambient_dim());
    std::vector<SparseVector> vs;
    for (const auto& r : u.basis()) vs.push_back(m.apply(r));
    return Subspace::span(m.rows(), vs);
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    std::size_t n = m.rows();
    // RREF of [m | I] is [I | m^-1].
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto [r, piv] = rref(aug);
    if (piv.size() != n || (n > 0 && piv.back() != n - 1)) throw std::domain_error("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

}  // namespace operad
