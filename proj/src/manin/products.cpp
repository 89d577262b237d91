#include "operad/manin/products.hpp"

#include "operad/freeop/weight2.hpp"

#include <stdexcept>

namespace operad {

namespace {

int num_comps(const GenSpace& g) { return g.is_symmetric() ? 3 : 2; }

void require_same_kind(const GenSpace& v, const GenSpace& w, Kind k, const char* op) {
    if (v.kind() != k || w.kind() != k)
        throw std::invalid_argument(std::string(op) + " needs two " + kind_name(k) + " presentations");
}

std::string product_name(const char* op, const QuadPresentation& p, const QuadPresentation& q) {
    return std::string(op) + "(" + p.name() + "," + q.name() + ")";
}

QuadPresentation make_product(const char* op, const QuadPresentation& p, const QuadPresentation& q, GenSpace g,
                              const Subspace& rel) {
    QuadPresentation out(product_name(op, p, q), std::move(g), rel);
    out.set_provenance(std::string(op) + " product of " + p.name() + " and " + q.name());
    return out;
}

}  // namespace

Matrix phi(const GenSpace& v, const GenSpace& w) {
    if (v.kind() != w.kind()) throw std::invalid_argument("phi needs generating spaces of the same kind");
    GenSpace vw = tensor_genspace(v, w, 1);
    std::size_t dv = v.dim(), dw = w.dim();
    std::size_t w2w = weight2_dim(w);
    Matrix m(weight2_dim(v) * w2w, weight2_dim(vw));
    for (int c = 0; c < num_comps(v); ++c)
        for (std::size_t mu1 = 0; mu1 < dv; ++mu1)
            for (std::size_t mu2 = 0; mu2 < dw; ++mu2)
                for (std::size_t nu1 = 0; nu1 < dv; ++nu1)
                    for (std::size_t nu2 = 0; nu2 < dw; ++nu2) {
                        std::size_t row = weight2_index(v, c, mu1, nu1) * w2w + weight2_index(w, c, mu2, nu2);
                        m(row, weight2_index(vw, c, mu1 * dw + mu2, nu1 * dw + nu2)) = 1;
                    }
    return m;
}

QuadPresentation koszul_dual(const QuadPresentation& p) {
    QuadPresentation out(p.name() + "!", dual_genspace(p.gen()),
                         orth_complement(p.relations(), weight2_form(p.gen())));
    out.set_provenance("Koszul dual of " + p.name());
    return out;
}

Subspace white_relations(const GenSpace& v, const Subspace& r, const GenSpace& w, const Subspace& s) {
    if (v.kind() != w.kind()) throw std::invalid_argument("white relations need generating spaces of the same kind");
    GenSpace vw = tensor_genspace(v, w, 1);
    std::size_t dv = v.dim(), dw = w.dim();
    Subspace ann_r = r.annihilator();
    Subspace ann_s = s.annihilator();
    std::vector<std::vector<Rational>> dense_r, dense_s;
    for (const auto& a : ann_r.basis()) dense_r.push_back(to_dense(a, weight2_dim(v)));
    for (const auto& b : ann_s.basis()) dense_s.push_back(to_dense(b, weight2_dim(w)));
    // x lies in the preimage iff (a (x) b) . Phi(x) = 0 for all a in Ann(R), b in Ann(S).
    Matrix rows(dense_r.size() * dense_s.size(), weight2_dim(vw));
    std::size_t k = 0;
    for (const auto& a : dense_r)
        for (const auto& b : dense_s) {
            for (int c = 0; c < num_comps(v); ++c)
                for (std::size_t mu1 = 0; mu1 < dv; ++mu1)
                    for (std::size_t mu2 = 0; mu2 < dw; ++mu2)
                        for (std::size_t nu1 = 0; nu1 < dv; ++nu1)
                            for (std::size_t nu2 = 0; nu2 < dw; ++nu2) {
                                const Rational& x = a[weight2_index(v, c, mu1, nu1)];
                                if (x.is_zero()) continue;
                                const Rational& y = b[weight2_index(w, c, mu2, nu2)];
                                if (y.is_zero()) continue;
                                rows(k, weight2_index(vw, c, mu1 * dw + mu2, nu1 * dw + nu2)) = x * y;
                            }
            ++k;
        }
    return kernel(rows);
}

QuadPresentation white_product(const QuadPresentation& p, const QuadPresentation& q) {
    require_same_kind(p.gen(), q.gen(), Kind::symmetric, "white product");
    return make_product("white", p, q, tensor_genspace(p.gen(), q.gen(), 1),
                        white_relations(p.gen(), p.relations(), q.gen(), q.relations()));
}

QuadPresentation black_product(const QuadPresentation& p, const QuadPresentation& q) {
    require_same_kind(p.gen(), q.gen(), Kind::symmetric, "black product");
    QuadPresentation pd = koszul_dual(p), qd = koszul_dual(q);
    Subspace dual_rel = white_relations(pd.gen(), pd.relations(), qd.gen(), qd.relations());
    GenSpace g = tensor_genspace(p.gen(), q.gen(), -1);
    return make_product("black", p, q, g, orth_complement(dual_rel, weight2_form(g)));
}

QuadPresentation wsquare(const QuadPresentation& p, const QuadPresentation& q) {
    require_same_kind(p.gen(), q.gen(), Kind::regular, "white square product");
    return make_product("wsquare", p, q, tensor_genspace(p.gen(), q.gen(), 1),
                        white_relations(p.gen(), p.relations(), q.gen(), q.relations()));
}

QuadPresentation bsquare(const QuadPresentation& p, const QuadPresentation& q) {
    require_same_kind(p.gen(), q.gen(), Kind::regular, "black square product");
    QuadPresentation pd = koszul_dual(p), qd = koszul_dual(q);
    Subspace dual_rel = white_relations(pd.gen(), pd.relations(), qd.gen(), qd.relations());
    GenSpace g = tensor_genspace(p.gen(), q.gen(), 1);
    return make_product("bsquare", p, q, g, orth_complement(dual_rel, weight2_form(g)));
}

SparseVector psi(const GenSpace& v, const SparseVector& r, const GenSpace& w, const SparseVector& s) {
    require_same_kind(v, w, Kind::regular, "psi");
    GenSpace vw = tensor_genspace(v, w, 1);
    std::size_t dw = w.dim();
    std::vector<SparseEntry> acc;
    for (const auto& [i, a] : r) {
        Weight2Index x = weight2_decode(v, i);
        for (const auto& [j, b] : s) {
            Weight2Index y = weight2_decode(w, j);
            if (x.comp != y.comp) continue;
            Rational c = a * b;
            if (x.comp == kComp2) c = -c;
            acc.emplace_back(weight2_index(vw, x.comp, x.upper * dw + y.upper, x.lower * dw + y.lower), c);
        }
    }
    return make_sparse(std::move(acc));
}

QuadPresentation bsquare_explicit(const QuadPresentation& p, const QuadPresentation& q) {
    require_same_kind(p.gen(), q.gen(), Kind::regular, "black square product");
    std::vector<SparseVector> vs;
    for (const auto& r : p.relations().basis())
        for (const auto& s : q.relations().basis()) vs.push_back(psi(p.gen(), r, q.gen(), s));
    GenSpace g = tensor_genspace(p.gen(), q.gen(), 1);
    return make_product("bsquare", p, q, g, Subspace::span(weight2_dim(g), vs));
}

}  // namespace operad
