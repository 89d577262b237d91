#include "operad/defcomplex/convolution.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace operad {

namespace {

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

int sign(int e) { return e % 2 == 0 ? 1 : -1; }

void require_same_context(const ConvolutionContext& ctx, const ConvolutionElement& f) {
    if (f.data().size() != ctx.element_dim(f.arity()))
        throw std::invalid_argument("convolution element does not belong to this context");
}

// res += c * (phi o_i psi) in End(A), phi of arity p, psi of arity q, slot i 0-based.
void end_compose_add(std::size_t m, const Rational* phi, int p, int i, const Rational* psi, int q, const Rational& c,
                     Rational* res) {
    int n = p + q - 1, s = p - 1 - i;
    std::size_t mp = ipow(m, p), mq = ipow(m, q), mn = ipow(m, n), ms = ipow(m, s), mpre = ipow(m, i);
    for (std::size_t out = 0; out < m; ++out)
        for (std::size_t pre = 0; pre < mpre; ++pre)
            for (std::size_t x = 0; x < m; ++x)
                for (std::size_t suf = 0; suf < ms; ++suf) {
                    const Rational& a = phi[out * mp + (pre * m + x) * ms + suf];
                    if (a.is_zero()) continue;
                    Rational ca = c * a;
                    for (std::size_t mid = 0; mid < mq; ++mid) {
                        const Rational& b = psi[x * mq + mid];
                        if (!b.is_zero()) res[out * mn + (pre * mq + mid) * ms + suf] += ca * b;
                    }
                }
}

}  // namespace

ConvolutionContext::ConvolutionContext(const QuadPresentation& p, AlgebraStructure a, int max_arity)
    : alg_(std::move(a)) {
    if (p.gen().is_symmetric())
        throw std::invalid_argument("multiplicative structure requires a regular operad; " + p.name() +
                                    " is symmetric");
    if (alg_.num_generators() != p.gen().dim())
        throw std::invalid_argument("algebra does not match the generators of " + p.name());
    coop_ = std::make_shared<const DualCooperadTrunc>(p, max_arity);
}

std::size_t ConvolutionContext::end_dim(int n) const { return ipow(alg_.dim(), n + 1); }

ConvolutionElement::ConvolutionElement(const ConvolutionContext& ctx, int arity)
    : arity_(arity), data_(ctx.element_dim(arity)) {
    if (arity < 1 || arity > ctx.max_arity())
        throw std::out_of_range("arity " + std::to_string(arity) + " outside the truncation 1.." +
                                std::to_string(ctx.max_arity()));
}

bool ConvolutionElement::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

ConvolutionElement& ConvolutionElement::operator+=(const ConvolutionElement& o) {
    if (o.arity_ != arity_ || o.data_.size() != data_.size())
        throw std::invalid_argument("adding convolution elements of different arity");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

ConvolutionElement& ConvolutionElement::operator-=(const ConvolutionElement& o) {
    if (o.arity_ != arity_ || o.data_.size() != data_.size())
        throw std::invalid_argument("subtracting convolution elements of different arity");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

ConvolutionElement operator*(const Rational& s, ConvolutionElement a) {
    for (auto& x : a.data_) x *= s;
    return a;
}

ConvolutionElement partial(const ConvolutionContext& ctx, const ConvolutionElement& f, int i,
                           const ConvolutionElement& g) {
    require_same_context(ctx, f);
    require_same_context(ctx, g);
    int p = f.arity(), q = g.arity(), n = p + q - 1;
    if (i < 0 || i >= p) throw std::out_of_range("partial composition slot out of range");
    ConvolutionElement out(ctx, n);
    const auto& c = ctx.cooperad();
    std::size_t m = ctx.algebra_dim(), ep = ctx.end_dim(p), eq = ctx.end_dim(q), en = ctx.end_dim(n);
    for (std::size_t b1 = 0; b1 < c.dim(p); ++b1)
        for (std::size_t b2 = 0; b2 < c.dim(q); ++b2) {
            const SparseVector& comp = c.compose(p, i, q, b1, b2);
            for (const auto& [b, coeff] : comp)
                end_compose_add(m, f.data().data() + b1 * ep, p, i, g.data().data() + b2 * eq, q, coeff,
                                out.data().data() + b * en);
        }
    return out;
}

ConvolutionElement star(const ConvolutionContext& ctx, const ConvolutionElement& f, const ConvolutionElement& g) {
    int q = g.arity();
    ConvolutionElement out(ctx, f.arity() + q - 1);
    for (int i = 0; i < f.arity(); ++i) {
        // slot i + 1 in 1-based numbering
        ConvolutionElement t = partial(ctx, f, i, g);
        if (sign(i * (q - 1)) > 0)
            out += t;
        else
            out -= t;
    }
    return out;
}

ConvolutionElement bracket(const ConvolutionContext& ctx, const ConvolutionElement& f, const ConvolutionElement& g) {
    ConvolutionElement fg = star(ctx, f, g), gf = star(ctx, g, f);
    return sign(f.degree() * g.degree()) > 0 ? fg - gf : fg + gf;
}

ConvolutionElement twisting_cochain(const ConvolutionContext& ctx) {
    const auto& c = ctx.cooperad();
    const auto& a = ctx.algebra();
    ConvolutionElement out(ctx, 2);
    std::size_t e2 = ctx.end_dim(2);
    for (std::size_t b = 0; b < c.dim(2); ++b) {
        TreeCode t = c.basis_tree(2, b);
        const Matrix& tab = a.table(static_cast<std::size_t>(vertex_gen(t.at(0))));
        std::size_t m = a.dim();
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t col = 0; col < m * m; ++col) out.data()[b * e2 + k * m * m + col] = tab(k, col);
    }
    return out;
}

ConvolutionElement differential(const ConvolutionContext& ctx, const ConvolutionElement& f) {
    return bracket(ctx, twisting_cochain(ctx), f);
}

ConvolutionElement face(const ConvolutionContext& ctx, const ConvolutionElement& f, int i) {
    int n = f.arity();
    if (i < 0 || i > n + 1) throw std::out_of_range("face index out of range");
    ConvolutionElement m = twisting_cochain(ctx);
    if (i == 0) return partial(ctx, m, 1, f);
    if (i == n + 1) return partial(ctx, m, 0, f);
    return partial(ctx, f, i - 1, m);
}

ConvolutionElement cosimplicial_d(const ConvolutionContext& ctx, const ConvolutionElement& f) {
    ConvolutionElement out(ctx, f.arity() + 1);
    for (int i = 0; i <= f.arity() + 1; ++i) {
        if (i % 2 == 0)
            out += face(ctx, f, i);
        else
            out -= face(ctx, f, i);
    }
    return out;
}

ConvolutionElement alpha_composite(const ConvolutionContext& ctx, const ConvolutionElement& f,
                                   const ConvolutionElement& g) {
    return partial(ctx, partial(ctx, twisting_cochain(ctx), 0, f), f.arity(), g);
}

ConvolutionElement cup(const ConvolutionContext& ctx, const ConvolutionElement& f, const ConvolutionElement& g) {
    return alpha_composite(ctx, f, g);
}

ConvolutionElement degree_minus_one_bracket(const ConvolutionContext& ctx, const ConvolutionElement& f,
                                            const ConvolutionElement& g) {
    ConvolutionElement fg = alpha_composite(ctx, f, g), gf = alpha_composite(ctx, g, f);
    return Rational(sign((f.degree() + 1) * g.degree())) * fg + Rational(sign(f.degree())) * gf;
}

ConvolutionElement random_element(const ConvolutionContext& ctx, int arity, std::mt19937& rng) {
    ConvolutionElement out(ctx, arity);
    std::uniform_int_distribution<int> dist(-2, 2);
    for (auto& x : out.data()) x = Rational(dist(rng));
    return out;
}

std::vector<InvariantCheck> check_invariants(const ConvolutionContext& ctx, int samples, unsigned seed) {
    std::mt19937 rng(seed);
    int nmax = ctx.max_arity();
    if (nmax < 3) throw std::invalid_argument("invariant checks need a truncation of arity at least 3");
    auto sgn = [](int e) { return Rational(sign(e)); };
    std::vector<InvariantCheck> out;
    auto add = [&](const std::string& name, const std::function<bool()>& one) {
        InvariantCheck c{name, true, 0};
        for (int t = 0; t < samples; ++t) {
            c.ok = one() && c.ok;
            ++c.instances;
        }
        out.push_back(c);
    };
    auto arity = [&](int max) { return std::uniform_int_distribution<int>(1, std::max(1, max))(rng); };
    ConvolutionElement alpha = twisting_cochain(ctx);
    out.push_back({"alpha * alpha = 0", star(ctx, alpha, alpha).is_zero(), 1});
    add("del^2 = 0", [&] {
        auto f = random_element(ctx, arity(nmax - 2), rng);
        return differential(ctx, differential(ctx, f)).is_zero();
    });
    add("del = (-1)^|f| d", [&] {
        auto f = random_element(ctx, arity(nmax - 1), rng);
        return differential(ctx, f) == sgn(f.degree()) * cosimplicial_d(ctx, f);
    });
    add("d^j d^i = d^i d^(j-1), i < j", [&] {
        auto f = random_element(ctx, arity(nmax - 2), rng);
        int n = f.arity();
        for (int j = 1; j <= n + 2; ++j)
            for (int i = 0; i < j; ++i)
                if (!(face(ctx, face(ctx, f, i), j) == face(ctx, face(ctx, f, j - 1), i))) return false;
        return true;
    });
    add("right pre-Lie symmetry of *", [&] {
        int p = arity(nmax - 2), q = arity(nmax - p - 1), r = arity(nmax - p - q + 2);
        auto f = random_element(ctx, p, rng), g = random_element(ctx, q, rng), h = random_element(ctx, r, rng);
        auto lhs = star(ctx, star(ctx, f, g), h) - star(ctx, f, star(ctx, g, h));
        auto rhs = star(ctx, star(ctx, f, h), g) - star(ctx, f, star(ctx, h, g));
        return lhs == sgn(g.degree() * h.degree()) * rhs;
    });
    add("graded Jacobi for [,]", [&] {
        int p = arity(nmax - 2), q = arity(nmax - p - 1), r = arity(nmax - p - q + 2);
        auto f = random_element(ctx, p, rng), g = random_element(ctx, q, rng), h = random_element(ctx, r, rng);
        int a = f.degree(), b = g.degree(), c = h.degree();
        auto j = sgn(a * c) * bracket(ctx, f, bracket(ctx, g, h)) + sgn(b * a) * bracket(ctx, g, bracket(ctx, h, f)) +
                 sgn(c * b) * bracket(ctx, h, bracket(ctx, f, g));
        return j.is_zero();
    });
    add("{f,g} = del f * g + (-1)^|f| f * del g - del(f * g)", [&] {
        int p = arity(nmax - 1), q = arity(nmax - p);
        auto f = random_element(ctx, p, rng), g = random_element(ctx, q, rng);
        auto rhs = star(ctx, differential(ctx, f), g) + sgn(f.degree()) * star(ctx, f, differential(ctx, g)) -
                   differential(ctx, star(ctx, f, g));
        return degree_minus_one_bracket(ctx, f, g) == rhs;
    });
    add("d(f cup g) = d f cup g + (-1)^(arity f) f cup d g", [&] {
        int p = arity(nmax - 2), q = arity(nmax - p - 1);
        auto f = random_element(ctx, p, rng), g = random_element(ctx, q, rng);
        return cosimplicial_d(ctx, cup(ctx, f, g)) ==
               cup(ctx, cosimplicial_d(ctx, f), g) + sgn(p) * cup(ctx, f, cosimplicial_d(ctx, g));
    });
    return out;
}

}  // namespace operad
