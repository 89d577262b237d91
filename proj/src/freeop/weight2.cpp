#include "operad/freeop/weight2.hpp"

#include "operad/exact/subspace.hpp"
#include "operad/freeop/freespan.hpp"

#include <sstream>
#include <stdexcept>

namespace operad {

std::size_t weight2_dim(const GenSpace& g) { return (g.is_symmetric() ? 3 : 2) * g.dim() * g.dim(); }

std::uint32_t weight2_index(const GenSpace& g, int comp, std::size_t upper, std::size_t lower) {
    int ncomp = g.is_symmetric() ? 3 : 2;
    if (comp < 0 || comp >= ncomp || upper >= g.dim() || lower >= g.dim())
        throw std::out_of_range("weight-two index out of range");
    return static_cast<std::uint32_t>(static_cast<std::size_t>(comp) * g.dim() * g.dim() + upper * g.dim() + lower);
}

Weight2Index weight2_decode(const GenSpace& g, std::uint32_t i) {
    if (i >= weight2_dim(g)) throw std::out_of_range("weight-two index out of range");
    std::size_t d = g.dim();
    return {static_cast<int>(i / (d * d)), (i / d) % d, i % d};
}

TreeCode weight2_tree(const GenSpace& g, std::uint32_t i) {
    auto [c, mu, nu] = weight2_decode(g, i);
    int m = static_cast<int>(mu), n = static_cast<int>(nu);
    if (!g.is_symmetric()) {
        if (c == kComp1) return make_vertex(m, make_vertex(n, {0}, {1}), {2});
        return make_vertex(m, {0}, make_vertex(n, {1}, {2}));
    }
    // alpha = I, II, III: inner vertex on leaves (1,2), (2,3), (3,1) resp.
    int a = c, b = (c + 1) % 3, rest = (c + 2) % 3;
    return make_vertex(m, make_vertex(n, {a}, {b}), {rest});
}

const char* comp_name(Kind k, int comp) {
    static const char* sym[] = {"I", "II", "III"};
    static const char* reg[] = {"1", "2"};
    return k == Kind::symmetric ? sym[comp] : reg[comp];
}

std::string weight2_basis_str(const GenSpace& g, std::uint32_t i) {
    auto [c, mu, nu] = weight2_decode(g, i);
    return g.names()[mu] + " o_" + comp_name(g.kind(), c) + " " + g.names()[nu];
}

std::string weight2_str(const GenSpace& g, const SparseVector& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, a] : v) {
        if (!first) os << (a.sign() < 0 ? " - " : " + ");
        else if (a.sign() < 0) os << "-";
        first = false;
        Rational m = a.sign() < 0 ? -a : a;
        if (!m.is_one()) os << m << "*";
        os << "(" << weight2_basis_str(g, i) << ")";
    }
    return os.str();
}

Matrix weight2_to_tree3(const GenSpace& g) {
    std::size_t n = weight2_dim(g);
    if (!g.is_symmetric()) return Matrix::identity(n);
    FreeSpan f3(g, 3);
    Matrix m(f3.dim(), n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (const auto& [j, x] : f3.expand(weight2_tree(g, i))) m(j, i) = x;
    return m;
}

Matrix tree3_to_weight2(const GenSpace& g) { return inverse(weight2_to_tree3(g)); }

SparseVector s3_transposition(const GenSpace& g, const SparseVector& v) {
    if (!g.is_symmetric()) throw std::invalid_argument("no S3 action on regular weight-two vectors");
    static const int swap_type[] = {kCompI, kCompIII, kCompII};
    const Matrix& A = g.action12();
    std::vector<SparseEntry> acc;
    for (const auto& [i, a] : v) {
        auto [c, mu, nu] = weight2_decode(g, i);
        for (std::size_t k = 0; k < g.dim(); ++k)
            if (!A(k, nu).is_zero()) acc.emplace_back(weight2_index(g, swap_type[c], mu, k), a * A(k, nu));
    }
    return make_sparse(std::move(acc));
}

SparseVector s3_cycle(const GenSpace& g, const SparseVector& v) {
    if (!g.is_symmetric()) throw std::invalid_argument("no S3 action on regular weight-two vectors");
    std::vector<SparseEntry> acc;
    for (const auto& [i, a] : v) {
        auto [c, mu, nu] = weight2_decode(g, i);
        acc.emplace_back(weight2_index(g, (c + 1) % 3, mu, nu), a);
    }
    return make_sparse(std::move(acc));
}

SparseVector s3_action(const GenSpace& g, const SparseVector& v, const Perm& sigma) {
    if (!g.is_symmetric()) throw std::invalid_argument("no S3 action on regular weight-two vectors");
    if (sigma.size() != 3) throw std::invalid_argument("s3_action needs a permutation of degree 3");
    // Write sigma = c^k s^b with s = (12), c = (1 2 3); relabel by s^b first.
    const Perm s = Perm::transposition(3, 0, 1), c({1, 2, 0});
    for (int b = 0; b < 2; ++b) {
        Perm p = b ? s : Perm::identity(3);
        for (int k = 0; k < 3; ++k) {
            if (p == sigma) {
                SparseVector w = b ? s3_transposition(g, v) : v;
                for (int t = 0; t < k; ++t) w = s3_cycle(g, w);
                return w;
            }
            p = c * p;
        }
    }
    throw std::logic_error("unreachable: S3 is generated by (12) and (123)");
}

Matrix weight2_form(const GenSpace& g) {
    std::size_t n = weight2_dim(g);
    Matrix m = Matrix::identity(n);
    if (!g.is_symmetric())
        for (std::size_t i = n / 2; i < n; ++i) m(i, i) = -1;
    return m;
}

Rational weight2_pairing(const GenSpace& v, const SparseVector& x, const GenSpace& dual, const SparseVector& y) {
    if (v.kind() != dual.kind() || v.dim() != dual.dim())
        throw std::invalid_argument("pairing between incompatible weight-two spaces");
    std::size_t half = weight2_dim(v) / 2;
    Rational s;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first < y[j].first) ++i;
        else if (y[j].first < x[i].first) ++j;
        else {
            Rational t = x[i].second * y[j].second;
            if (!v.is_symmetric() && x[i].first >= half) t = -t;
            s += t;
            ++i;
            ++j;
        }
    }
    return s;
}

}  // namespace operad
