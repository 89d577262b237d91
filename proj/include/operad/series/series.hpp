#pragma once

#include "operad/exact/rational.hpp"

#include <string>
#include <vector>

namespace operad {

// a_1 x + ... + a_K x^K, no constant term; arithmetic truncates at x^K.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int order);
    // coeffs[0] is a_1.
    static TruncatedSeries from_coeffs(const std::vector<Rational>& coeffs);
    // a_n = dims[n-1] / n!; the order is dims.size().
    static TruncatedSeries from_dims(const std::vector<std::size_t>& dims);
    static TruncatedSeries x(int order);

    int order() const { return static_cast<int>(a_.size()); }
    // a_n for 1 <= n <= order; 0 beyond.
    Rational coeff(int n) const;
    void set_coeff(int n, const Rational& c);

    TruncatedSeries truncated(int order) const;
    // -f(-x)
    TruncatedSeries reflected() const;

    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
    // Product has no constant term either; the result starts at x^2.
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
    bool operator==(const TruncatedSeries& o) const { return a_ == o.a_; }

    std::string str() const;

private:
    std::vector<Rational> a_;
};

// f(g(x)) truncated at min(order f, order g).
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);
// g with f(g(x)) = x mod x^(K+1). Throws std::domain_error if a_1 = 0.
TruncatedSeries comp_inverse(const TruncatedSeries& f);

}  // namespace operad
