#include "operad/exact/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace operad {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

static bool valid_integer(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rational Rational::parse(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    auto slash = s.find('/');
    std::string_view n = s.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_integer(n) || !valid_integer(d) || d.front() == '-' || d.front() == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    std::string ns(n);
    if (ns.front() == '+') ns.erase(0, 1);
    mpz_class num(ns, 10), den(std::string(d), 10);
    if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(s) + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

SparseVector to_sparse(const std::vector<Rational>& dense) {
    SparseVector out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
    return out;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t n) {
    std::vector<Rational> out(n);
    for (const auto& [i, x] : v) {
        if (i >= n) throw std::out_of_range("sparse index outside ambient dimension");
        out[i] = x;
    }
    return out;
}

SparseVector make_sparse(std::vector<SparseEntry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
    SparseVector out;
    for (auto& e : entries) {
        if (!out.empty() && out.back().first == e.first)
            out.back().second += e.second;
        else
            out.push_back(std::move(e));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const SparseEntry& e) { return e.second.is_zero(); }),
              out.end());
    return out;
}

SparseVector axpy(const Rational& a, const SparseVector& x, const SparseVector& y) {
    if (a.is_zero()) return y;
    SparseVector out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.push_back(y[j]);
            ++j;
        } else {
            Rational s = a * x[i].second + y[j].second;
            if (!s.is_zero()) out.emplace_back(x[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVector scale(const Rational& a, const SparseVector& x) {
    if (a.is_zero()) return {};
    SparseVector out = x;
    for (auto& e : out) e.second *= a;
    return out;
}

}  // namespace operad
