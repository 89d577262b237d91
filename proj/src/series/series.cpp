#include "operad/series/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace operad {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 1) throw std::invalid_argument("series order must be at least 1");
    a_.assign(static_cast<std::size_t>(order), Rational(0));
}

TruncatedSeries TruncatedSeries::from_coeffs(const std::vector<Rational>& coeffs) {
    TruncatedSeries s(static_cast<int>(coeffs.size()));
    s.a_ = coeffs;
    return s;
}

TruncatedSeries TruncatedSeries::from_dims(const std::vector<std::size_t>& dims) {
    if (dims.empty()) throw std::invalid_argument("empty dimension table");
    TruncatedSeries s(static_cast<int>(dims.size()));
    for (std::size_t n = 1; n <= dims.size(); ++n)
        s.a_[n - 1] = Rational(static_cast<long>(dims[n - 1])) / factorial(static_cast<unsigned>(n));
    return s;
}

TruncatedSeries TruncatedSeries::x(int order) {
    TruncatedSeries s(order);
    s.a_[0] = 1;
    return s;
}

Rational TruncatedSeries::coeff(int n) const {
    if (n < 1) throw std::out_of_range("series coefficients start at x^1");
    return n <= order() ? a_[static_cast<std::size_t>(n - 1)] : Rational(0);
}

void TruncatedSeries::set_coeff(int n, const Rational& c) {
    if (n < 1 || n > order()) throw std::out_of_range("coefficient index outside the truncation");
    a_[static_cast<std::size_t>(n - 1)] = c;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    TruncatedSeries s(order);
    for (int n = 1; n <= order; ++n) s.a_[static_cast<std::size_t>(n - 1)] = coeff(n);
    return s;
}

TruncatedSeries TruncatedSeries::reflected() const {
    TruncatedSeries s = *this;
    for (int n = 2; n <= order(); n += 2) s.a_[static_cast<std::size_t>(n - 1)] = -s.a_[static_cast<std::size_t>(n - 1)];
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries s(std::min(f.order(), g.order()));
    for (int n = 1; n <= s.order(); ++n) s.set_coeff(n, f.coeff(n) + g.coeff(n));
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries s(std::min(f.order(), g.order()));
    for (int n = 1; n <= s.order(); ++n) s.set_coeff(n, f.coeff(n) - g.coeff(n));
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries s(std::min(f.order(), g.order()));
    for (int n = 2; n <= s.order(); ++n) {
        Rational c(0);
        for (int i = 1; i < n; ++i) c += f.coeff(i) * g.coeff(n - i);
        s.set_coeff(n, c);
    }
    return s;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    int k = std::min(f.order(), g.order());
    TruncatedSeries gk = g.truncated(k);
    TruncatedSeries out(k);
    TruncatedSeries power = gk;  // g^n
    for (int n = 1; n <= k; ++n) {
        Rational a = f.coeff(n);
        if (!a.is_zero())
            for (int m = 1; m <= k; ++m) out.set_coeff(m, out.coeff(m) + a * power.coeff(m));
        if (n < k) power = power * gk;
    }
    return out;
}

TruncatedSeries comp_inverse(const TruncatedSeries& f) {
    if (f.coeff(1).is_zero()) throw std::domain_error("series with vanishing linear term has no compositional inverse");
    int k = f.order();
    // Undetermined coefficients: fix g_n so that [x^n] f(g(x)) vanishes for n >= 2.
    TruncatedSeries g(k);
    g.set_coeff(1, Rational(1) / f.coeff(1));
    for (int n = 2; n <= k; ++n) {
        TruncatedSeries c = compose(f.truncated(n), g.truncated(n));
        g.set_coeff(n, -c.coeff(n) / f.coeff(1));
    }
    return g;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 1; n <= order(); ++n) {
        Rational c = coeff(n);
        if (c.is_zero()) continue;
        Rational m = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (!m.is_one()) os << m.str() << "*";
        os << "x";
        if (n > 1) os << "^" << n;
    }
    if (first) os << "0";
    os << " + O(x^" << order() + 1 << ")";
    return os.str();
}

}  // namespace operad
