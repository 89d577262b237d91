#include "operad/manin/checks.hpp"

#include "operad/freeop/weight2.hpp"
#include "operad/manin/products.hpp"

#include <sstream>
#include <stdexcept>

namespace operad {

namespace {

std::string dims_str(std::size_t a, std::size_t b) {
    std::ostringstream os;
    os << a << " vs " << b;
    return os.str();
}

// sum over c, g, h of c_g c_h (comp, g, h) for each listed composition type and sign.
SparseVector square_of(const GenSpace& g, const SparseVector& c, const std::vector<std::pair<int, int>>& comps) {
    std::vector<SparseEntry> acc;
    for (const auto& [comp, sign] : comps)
        for (const auto& [u, a] : c)
            for (const auto& [l, b] : c) acc.emplace_back(weight2_index(g, comp, u, l), Rational(sign) * a * b);
    return make_sparse(std::move(acc));
}

}  // namespace

SparseVector canonical_element(const GenSpace& g) {
    SparseVector c;
    for (std::size_t i = 0; i < g.dim(); ++i) c.emplace_back(static_cast<std::uint32_t>(i * g.dim() + i), Rational(1));
    return c;
}

Verdict duality_check(const QuadPresentation& p, const QuadPresentation& q) {
    if (p.kind() != q.kind()) throw std::invalid_argument("duality check needs presentations of the same kind");
    QuadPresentation pd = koszul_dual(p), qd = koszul_dual(q);
    QuadPresentation lhs, rhs;
    if (p.is_symmetric()) {
        lhs = koszul_dual(black_product(p, q));
        rhs = white_product(pd, qd);
    } else {
        lhs = koszul_dual(bsquare_explicit(p, q));
        rhs = wsquare(pd, qd);
    }
    Verdict v = presentation_equal(lhs, rhs, Matrix::identity(lhs.gen().dim()));
    v.detail = (p.is_symmetric() ? "(P black Q)! vs P! white Q!: " : "(P bsquare Q)! vs P! wsquare Q!: ") + v.detail;
    return v;
}

Verdict epi_check(const QuadPresentation& p, const QuadPresentation& q) {
    if (p.is_symmetric() || q.is_symmetric()) throw std::invalid_argument("epi check needs regular presentations");
    QuadPresentation b = bsquare(p, q), w = wsquare(p, q);
    bool ok = b.relations().is_subspace_of(w.relations());
    std::string rel = b.relation_dim() < w.relation_dim() ? "strict" : "equal dimension";
    return {ok, "black-square relations (" + dims_str(b.relation_dim(), w.relation_dim()) + ") " +
                    (ok ? "inside white-square relations, " + rel : "not inside white-square relations")};
}

Verdict canonical_mult_check(const QuadPresentation& p) {
    if (p.is_symmetric()) throw std::invalid_argument("canonical multiplication needs a regular presentation");
    QuadPresentation w = wsquare(koszul_dual(p), p);
    SparseVector m = canonical_element(p.gen());
    SparseVector assoc = square_of(w.gen(), m, {{kComp1, 1}, {kComp2, -1}});
    bool ok = w.relations().contains(assoc);
    return {ok, std::string("m o1 m - m o2 m ") + (ok ? "lies" : "does not lie") + " in the relations of " + w.name()};
}

Verdict canonical_bracket_check(const QuadPresentation& p) {
    if (!p.is_symmetric()) throw std::invalid_argument("canonical bracket needs a symmetric presentation");
    QuadPresentation w = white_product(koszul_dual(p), p);
    SparseVector beta = canonical_element(p.gen());
    SparseVector flipped = w.gen().action12().apply(beta);
    if (flipped != scale(Rational(-1), beta)) return {false, "beta^(12) != -beta"};
    SparseVector jac = square_of(w.gen(), beta, {{kCompI, 1}, {kCompII, 1}, {kCompIII, 1}});
    bool ok = w.relations().contains(jac);
    return {ok, "beta^(12) = -beta; Jacobi(beta) " + std::string(ok ? "lies" : "does not lie") + " in the relations of " +
                    w.name()};
}

}  // namespace operad
