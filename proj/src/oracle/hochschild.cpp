#include "operad/oracle/hochschild.hpp"

#include <stdexcept>

namespace operad::oracle {

namespace {

std::size_t power(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Digits of a multi-index, first input most significant.
std::vector<std::size_t> digits(std::size_t idx, std::size_t m, int n) {
    std::vector<std::size_t> d(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        d[static_cast<std::size_t>(k)] = idx % m;
        idx /= m;
    }
    return d;
}

std::vector<Rational> unit(std::size_t m, std::size_t a) {
    std::vector<Rational> e(m);
    e[a] = 1;
    return e;
}

void apply_rec(const Cochain& f, std::size_t m, const std::vector<std::vector<Rational>>& args, std::size_t k,
               std::size_t idx, const Rational& coeff, std::vector<Rational>& out) {
    if (k == args.size()) {
        std::size_t mn = power(m, f.arity);
        for (std::size_t o = 0; o < m; ++o) out[o] += coeff * f.data[o * mn + idx];
        return;
    }
    for (std::size_t a = 0; a < m; ++a)
        if (!args[k][a].is_zero()) apply_rec(f, m, args, k + 1, idx * m + a, coeff * args[k][a], out);
}

}  // namespace

Hochschild::Hochschild(Matrix mult) : mult_(std::move(mult)), m_(mult_.rows()) {
    if (mult_.cols() != m_ * m_) throw std::invalid_argument("multiplication table must be dim x dim^2");
}

Cochain Hochschild::zero(int arity) const { return {arity, std::vector<Rational>(m_ * power(m_, arity))}; }

std::vector<Rational> Hochschild::apply(const Cochain& f, const std::vector<std::vector<Rational>>& args) const {
    if (args.size() != static_cast<std::size_t>(f.arity)) throw std::invalid_argument("wrong number of arguments");
    std::vector<Rational> out(m_);
    apply_rec(f, m_, args, 0, 0, Rational(1), out);
    return out;
}

std::vector<Rational> Hochschild::multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    std::vector<Rational> out(m_);
    for (std::size_t a = 0; a < m_; ++a)
        for (std::size_t b = 0; b < m_; ++b)
            if (!x[a].is_zero() && !y[b].is_zero())
                for (std::size_t k = 0; k < m_; ++k) out[k] += x[a] * y[b] * mult_(k, a * m_ + b);
    return out;
}

Cochain Hochschild::mult_cochain() const {
    Cochain c = zero(2);
    for (std::size_t k = 0; k < m_; ++k)
        for (std::size_t col = 0; col < m_ * m_; ++col) c.data[k * m_ * m_ + col] = mult_(k, col);
    return c;
}

Cochain Hochschild::face(const Cochain& f, int i) const {
    int n = f.arity;
    if (i < 0 || i > n + 1) throw std::out_of_range("face index");
    Cochain out = zero(n + 1);
    std::size_t mn1 = power(m_, n + 1);
    for (std::size_t idx = 0; idx < mn1; ++idx) {
        auto a = digits(idx, m_, n + 1);
        std::vector<Rational> v;
        if (i == 0) {
            std::vector<std::vector<Rational>> args;
            for (int k = 1; k <= n; ++k) args.push_back(unit(m_, a[static_cast<std::size_t>(k)]));
            v = multiply(unit(m_, a[0]), apply(f, args));
        } else if (i == n + 1) {
            std::vector<std::vector<Rational>> args;
            for (int k = 0; k < n; ++k) args.push_back(unit(m_, a[static_cast<std::size_t>(k)]));
            v = multiply(apply(f, args), unit(m_, a[static_cast<std::size_t>(n)]));
        } else {
            std::vector<std::vector<Rational>> args;
            for (int k = 0; k <= n; ++k) {
                if (k == i - 1) {
                    args.push_back(multiply(unit(m_, a[static_cast<std::size_t>(k)]), unit(m_, a[static_cast<std::size_t>(k + 1)])));
                    ++k;
                } else {
                    args.push_back(unit(m_, a[static_cast<std::size_t>(k)]));
                }
            }
            v = apply(f, args);
        }
        for (std::size_t o = 0; o < m_; ++o) out.data[o * mn1 + idx] = v[o];
    }
    return out;
}

Cochain Hochschild::delta(const Cochain& f) const {
    Cochain out = zero(f.arity + 1);
    for (int i = 0; i <= f.arity + 1; ++i) out = i % 2 == 0 ? out + face(f, i) : out - face(f, i);
    return out;
}

Cochain Hochschild::insert(const Cochain& f, int i, const Cochain& g) const {
    int p = f.arity, q = g.arity, n = p + q - 1;
    if (i < 1 || i > p) throw std::out_of_range("insertion slot");
    Cochain out = zero(n);
    std::size_t mn = power(m_, n);
    for (std::size_t idx = 0; idx < mn; ++idx) {
        auto a = digits(idx, m_, n);
        std::vector<std::vector<Rational>> inner, outer;
        for (int k = 0; k < q; ++k) inner.push_back(unit(m_, a[static_cast<std::size_t>(i - 1 + k)]));
        for (int k = 0; k < i - 1; ++k) outer.push_back(unit(m_, a[static_cast<std::size_t>(k)]));
        outer.push_back(apply(g, inner));
        for (int k = i - 1 + q; k < n; ++k) outer.push_back(unit(m_, a[static_cast<std::size_t>(k)]));
        auto v = apply(f, outer);
        for (std::size_t o = 0; o < m_; ++o) out.data[o * mn + idx] = v[o];
    }
    return out;
}

Cochain Hochschild::circle(const Cochain& f, const Cochain& g) const {
    Cochain out = zero(f.arity + g.arity - 1);
    for (int i = 1; i <= f.arity; ++i)
        out = ((i - 1) * (g.arity - 1)) % 2 == 0 ? out + insert(f, i, g) : out - insert(f, i, g);
    return out;
}

Cochain Hochschild::gerstenhaber_bracket(const Cochain& f, const Cochain& g) const {
    bool odd = ((f.arity - 1) * (g.arity - 1)) % 2 != 0;
    return odd ? circle(f, g) + circle(g, f) : circle(f, g) - circle(g, f);
}

Cochain Hochschild::cup(const Cochain& f, const Cochain& g) const {
    int p = f.arity, q = g.arity, n = p + q;
    Cochain out = zero(n);
    std::size_t mn = power(m_, n);
    for (std::size_t idx = 0; idx < mn; ++idx) {
        auto a = digits(idx, m_, n);
        std::vector<std::vector<Rational>> l, r;
        for (int k = 0; k < p; ++k) l.push_back(unit(m_, a[static_cast<std::size_t>(k)]));
        for (int k = p; k < n; ++k) r.push_back(unit(m_, a[static_cast<std::size_t>(k)]));
        auto v = multiply(apply(f, l), apply(g, r));
        for (std::size_t o = 0; o < m_; ++o) out.data[o * mn + idx] = v[o];
    }
    return out;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
    if (a.arity != b.arity) throw std::invalid_argument("cochain arity mismatch");
    Cochain c = a;
    for (std::size_t k = 0; k < c.data.size(); ++k) c.data[k] += b.data[k];
    return c;
}

Cochain operator-(const Cochain& a, const Cochain& b) { return a + scale(Rational(-1), b); }

Cochain scale(const Rational& s, const Cochain& a) {
    Cochain c = a;
    for (auto& x : c.data) x *= s;
    return c;
}

bool operator==(const Cochain& a, const Cochain& b) { return a.arity == b.arity && a.data == b.data; }

}  // namespace operad::oracle
