#pragma once

#include "operad/exact/matrix.hpp"

#include <vector>

namespace operad::oracle {

// Textbook Hochschild complex C^n(A, A) = Hom(A^(x)n, A) of an associative algebra
// given by its dim x dim^2 multiplication table (column a*dim + b = e_a e_b).
// A cochain of arity n stores f(e_{a_1}, ..., e_{a_n}) at out * dim^n + (a_1 ... a_n in base dim).
struct Cochain {
    int arity = 0;
    std::vector<Rational> data;
};

class Hochschild {
public:
    explicit Hochschild(Matrix mult);

    std::size_t dim() const { return m_; }
    Cochain zero(int arity) const;
    // Value of f on arbitrary vectors, by multilinear expansion.
    std::vector<Rational> apply(const Cochain& f, const std::vector<std::vector<Rational>>& args) const;
    std::vector<Rational> multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const;

    // delta^i f, 0 <= i <= n + 1: a_0 f(a_1..), f(.., a_{i-1} a_i, ..), f(.., a_{n-1}) a_n
    Cochain face(const Cochain& f, int i) const;
    // (delta f)(a_0..a_n) = a_0 f(a_1..a_n) + sum (-1)^i f(.., a_{i-1} a_i, ..) + (-1)^(n+1) f(a_0..a_{n-1}) a_n
    Cochain delta(const Cochain& f) const;
    // (f o_i g)(a_1..) = f(a_1, .., g(a_i, .., a_{i+q-1}), ..), i 1-based
    Cochain insert(const Cochain& f, int i, const Cochain& g) const;
    // Gerstenhaber pre-Lie product f o g = sum_i (-1)^((i-1)(q-1)) f o_i g
    Cochain circle(const Cochain& f, const Cochain& g) const;
    // [f, g] = f o g - (-1)^((p-1)(q-1)) g o f
    Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g) const;
    // (f cup g)(a_1..a_{p+q}) = f(a_1..a_p) g(a_{p+1}..a_{p+q})
    Cochain cup(const Cochain& f, const Cochain& g) const;

    // The multiplication as a 2-cochain.
    Cochain mult_cochain() const;

private:
    Matrix mult_;
    std::size_t m_;
};

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain scale(const Rational& s, const Cochain& a);
bool operator==(const Cochain& a, const Cochain& b);

}  // namespace operad::oracle
