#include "operad/presentations/presentation.hpp"

#include "operad/freeop/ideal.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace operad {

Subspace s3_closure(const GenSpace& g, const std::vector<SparseVector>& spanning) {
    std::size_t n = operad::weight2_dim(g);
    Echelon e(n);
    std::deque<SparseVector> queue;
    for (const auto& v : spanning)
        if (e.insert(v)) queue.push_back(v);
    if (!g.is_symmetric()) return Subspace::from_echelon(e);
    while (!queue.empty() && e.rank() < n) {
        SparseVector v = std::move(queue.front());
        queue.pop_front();
        for (SparseVector w : {s3_transposition(g, v), s3_cycle(g, v)})
            if (e.insert(w)) queue.push_back(std::move(w));
    }
    return Subspace::from_echelon(e);
}

bool is_s3_stable(const GenSpace& g, const Subspace& s) {
    if (!g.is_symmetric()) return true;
    for (const auto& r : s.basis())
        if (!s.contains(s3_transposition(g, r)) || !s.contains(s3_cycle(g, r))) return false;
    return true;
}

QuadPresentation::QuadPresentation(std::string name, GenSpace gen, const std::vector<SparseVector>& spanning)
    : name_(std::move(name)), gen_(std::move(gen)) {
    std::size_t n = operad::weight2_dim(gen_);
    for (const auto& v : spanning)
        for (const auto& [i, x] : v)
            if (i >= n) throw std::invalid_argument("relation outside the weight-two space of " + name_);
    rel_ = s3_closure(gen_, spanning);
    if (!is_s3_stable(gen_, rel_)) throw std::logic_error("S3 closure of " + name_ + " is not stable");
}

QuadPresentation::QuadPresentation(std::string name, GenSpace gen, const Subspace& relations)
    : QuadPresentation(std::move(name), std::move(gen), relations.basis()) {
    if (relations.ambient_dim() != rel_.ambient_dim())
        throw std::invalid_argument("relation subspace has the wrong ambient dimension");
}

bool QuadPresentation::same_as(const QuadPresentation& o) const {
    return kind() == o.kind() && gen_.dim() == o.gen_.dim() && gen_.action12() == o.gen_.action12() &&
           rel_ == o.rel_;
}

Matrix symmetrize_weight2_map(const GenSpace& regular) {
    if (regular.is_symmetric()) throw std::invalid_argument("symmetrize expects a regular generating space");
    GenSpace sym = symmetrize_genspace(regular);
    std::size_t d = regular.dim();
    Matrix m(operad::weight2_dim(sym), operad::weight2_dim(regular));
    for (std::size_t mu = 0; mu < d; ++mu)
        for (std::size_t nu = 0; nu < d; ++nu) {
            m(weight2_index(sym, kCompI, 2 * mu, 2 * nu), weight2_index(regular, kComp1, mu, nu)) = 1;
            // mu(x1, nu(x2,x3)) = mu'(nu(x2,x3), x1)
            m(weight2_index(sym, kCompII, 2 * mu + 1, 2 * nu), weight2_index(regular, kComp2, mu, nu)) = 1;
        }
    return m;
}

QuadPresentation symmetrize(const QuadPresentation& p) {
    Matrix m = symmetrize_weight2_map(p.gen());
    std::vector<SparseVector> vs;
    for (const auto& r : p.relations().basis()) vs.push_back(m.apply(r));
    QuadPresentation s(p.name(), symmetrize_genspace(p.gen()), vs);
    s.set_provenance(p.provenance().empty() ? "symmetrization of " + p.name() : p.provenance());
    return s;
}

Matrix induced_weight2_map(const GenSpace& from, const GenSpace& to, const Matrix& gen_map) {
    if (from.kind() != to.kind()) throw std::invalid_argument("generator map between different kinds");
    if (gen_map.rows() != to.dim() || gen_map.cols() != from.dim())
        throw std::invalid_argument("generator map has the wrong shape");
    int ncomp = from.is_symmetric() ? 3 : 2;
    Matrix m(operad::weight2_dim(to), operad::weight2_dim(from));
    for (int c = 0; c < ncomp; ++c)
        for (std::size_t mu = 0; mu < from.dim(); ++mu)
            for (std::size_t nu = 0; nu < from.dim(); ++nu)
                for (std::size_t a = 0; a < to.dim(); ++a) {
                    if (gen_map(a, mu).is_zero()) continue;
                    for (std::size_t b = 0; b < to.dim(); ++b)
                        if (!gen_map(b, nu).is_zero())
                            m(weight2_index(to, c, a, b), weight2_index(from, c, mu, nu)) =
                                gen_map(a, mu) * gen_map(b, nu);
                }
    return m;
}

std::vector<DimRecord> quotient_dims(const QuadPresentation& p, int n_max) {
    IdealTower t(p.gen(), p.relations(), n_max);
    std::vector<DimRecord> out;
    for (int n = 1; n <= n_max; ++n) out.push_back({n, t.free_dim(n), t.ideal_dim(n), t.quotient_dim(n)});
    return out;
}

std::vector<std::size_t> quotient_dim_list(const QuadPresentation& p, int n_max) {
    std::vector<std::size_t> out;
    for (const auto& r : quotient_dims(p, n_max)) out.push_back(r.quotient_dim);
    return out;
}

Verdict presentation_equal(const QuadPresentation& p, const QuadPresentation& q, const Matrix& gen_map) {
    if (p.kind() != q.kind()) return {false, "kinds differ"};
    if (gen_map.rows() != q.gen().dim() || gen_map.cols() != p.gen().dim())
        throw std::invalid_argument("generator map has the wrong shape");
    if (rank(gen_map) != gen_map.rows() || gen_map.rows() != gen_map.cols())
        throw std::invalid_argument("generator map is not invertible");
    if (p.is_symmetric() && gen_map * p.gen().action12() != q.gen().action12() * gen_map)
        throw std::invalid_argument("generator map is not S2-equivariant");
    if (p.relation_dim() != q.relation_dim()) {
        std::ostringstream os;
        os << "relation dimensions differ (" << p.relation_dim() << " vs " << q.relation_dim() << ")";
        return {false, os.str()};
    }
    Subspace image = push_forward(induced_weight2_map(p.gen(), q.gen(), gen_map), p.relations());
    if (image == q.relations()) return {true, "relation subspaces coincide under the generator map"};
    return {false, "relation subspaces differ under the generator map"};
}

Verdict presentation_invariants_equal(const QuadPresentation& p, const QuadPresentation& q, int max_arity) {
    if (p.kind() != q.kind()) return {false, "kinds differ"};
    if (p.gen().dim() != q.gen().dim()) return {false, "generator dimensions differ"};
    if (p.relation_dim() != q.relation_dim()) return {false, "relation dimensions differ"};
    auto a = quotient_dim_list(p, max_arity), b = quotient_dim_list(q, max_arity);
    if (a != b) return {false, "quotient dimensions differ"};
    return {true, "invariants agree (relation dim and quotient dims up to arity " + std::to_string(max_arity) +
                      "); no generator map supplied"};
}

}  // namespace operad
