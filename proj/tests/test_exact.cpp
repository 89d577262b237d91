#include "doctest.h"

#include "operad/exact/echelon.hpp"
#include "operad/exact/matrix.hpp"
#include "operad/exact/perm.hpp"
#include "operad/exact/rational.hpp"
#include "operad/exact/subspace.hpp"

#include <random>

using namespace operad;

namespace {

Matrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return Matrix::from_rows(r);
}

SparseVector vec(const std::vector<long>& v) {
    std::vector<Rational> d(v.begin(), v.end());
    return to_sparse(d);
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(dist(rng));
    return m;
}

// Textbook dense Gauss-Jordan over Q, used as an oracle for the fraction-free engine.
std::pair<Matrix, std::vector<std::uint32_t>> naive_rref(Matrix m) {
    std::vector<std::uint32_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(static_cast<std::uint32_t>(c));
        ++r;
    }
    Matrix out(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return {out, piv};
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK(a.den() == 2);
    CHECK((a + Rational(3, 2)).is_zero());
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("1.5"));
    CHECK_THROWS(Rational::parse("1/-2"));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK(factorial(10) == Rational(3628800));
    CHECK(binomial(9, 4) == Rational(126));
}

TEST_CASE("rref examples") {
    auto [r1, p1] = rref(mat({{2, 4}, {1, 2}}));
    CHECK(r1 == mat({{1, 2}}));
    CHECK(p1 == std::vector<std::uint32_t>{0});
    auto [r2, p2] = rref(Matrix::identity(3));
    CHECK(r2 == Matrix::identity(3));
    auto [r3, p3] = rref(mat({{0, 1}, {1, 0}}));
    CHECK(r3 == Matrix::identity(2));
    CHECK(p3 == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("rref agrees with a naive Gauss-Jordan oracle and is idempotent") {
    std::mt19937 rng(7);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + rng() % 7, c = 1 + rng() % 9;
        Matrix m = random_matrix(rng, r, c, -3, 3);
        if (t % 3 == 0)  // force rank deficiency
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(2);
        auto [a, pa] = rref(m);
        auto [b, pb] = naive_rref(m);
        CHECK(a == b);
        CHECK(pa == pb);
        CHECK(rref(a).first == a);
    }
}

TEST_CASE("echelon switches to big integers without changing results") {
    std::mt19937 rng(11);
    Matrix m = random_matrix(rng, 14, 16, -1000000, 1000000);
    Echelon e(16);
    for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.sparse_row(i));
    CHECK(e.uses_bigint());
    CHECK(e.rank() == 14);
    auto [b, pb] = naive_rref(m);
    CHECK(Subspace::from_echelon(e).matrix() == b);
    CHECK(e.contains(m.sparse_row(3)));
    for (int t = 0; t < 5; ++t) {
        Matrix probe = random_matrix(rng, 1, 16, -5, 5);
        Matrix both(15, 16);
        for (std::size_t i = 0; i < 14; ++i)
            for (std::size_t j = 0; j < 16; ++j) both(i, j) = m(i, j);
        for (std::size_t j = 0; j < 16; ++j) both(14, j) = probe(0, j);
        CHECK(e.contains(probe.sparse_row(0)) == (naive_rref(both).second.size() == 14));
    }
}

TEST_CASE("echelon with rational input rows") {
    Echelon e(3);
    CHECK(e.insert({{0, Rational(1, 2)}, {2, Rational(1, 3)}}));
    CHECK_FALSE(e.insert({{0, Rational(3)}, {2, Rational(2)}}));
    CHECK(e.contains({{0, Rational(-3, 7)}, {2, Rational(-2, 7)}}));
    auto rows = e.rref();
    REQUIRE(rows.size() == 1);
    CHECK(rows[0][1].second == Rational(2, 3));
}

TEST_CASE("subspace operations") {
    Subspace x = Subspace::span(2, {vec({1, 0})});
    Subspace y = Subspace::span(2, {vec({0, 1})});
    CHECK(intersect(x, y).is_zero());
    CHECK(sum(x, Subspace::span(2, {vec({1, 1})})).is_full());
    Subspace u = Subspace::span(3, {vec({1, 1, 0}), vec({0, 0, 1})});
    CHECK(u.contains(vec({2, 2, 3})));
    CHECK_FALSE(u.contains(vec({1, 2, 3})));
    CHECK_THROWS(sum(x, u));
    CHECK(u.reduce(vec({3, 1, 5})) == vec({0, -2, 0}));
}

TEST_CASE("dimension formula for sum and intersection on random subspaces") {
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + rng() % 7;
        Subspace u = Subspace::span(random_matrix(rng, rng() % (n + 1), n, -2, 2));
        Subspace w = Subspace::span(random_matrix(rng, rng() % (n + 1), n, -2, 2));
        Subspace s = sum(u, w), i = intersect(u, w);
        CHECK(s.dim() + i.dim() == u.dim() + w.dim());
        CHECK(i.is_subspace_of(u));
        CHECK(i.is_subspace_of(w));
        CHECK(u.is_subspace_of(s));
    }
}

TEST_CASE("canonical form is independent of the chosen basis") {
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 3 + rng() % 6, k = 1 + rng() % n;
        Matrix b = random_matrix(rng, k, n, -4, 4);
        Matrix g = random_matrix(rng, k, k, -3, 3);
        Matrix c = g * b;
        Subspace sb = Subspace::span(b), sc = Subspace::span(c);
        if (rank(g) == k) CHECK(sb == sc);
        CHECK(sc.is_subspace_of(sb));
    }
}

TEST_CASE("kernel, image and preimage") {
    Matrix m = mat({{1, 2, 3}, {2, 4, 6}});
    Subspace k = kernel(m);
    CHECK(k.dim() == 2);
    for (const auto& v : k.basis()) CHECK(m.apply(v).empty());
    CHECK(image(m) == Subspace::span(2, {vec({1, 2})}));
    Subspace target = Subspace::span(2, {vec({1, 2})});
    CHECK(preimage(m, target).is_full());
    CHECK(preimage(m, Subspace(2)) == k);
    CHECK(push_forward(m, Subspace::full(3)) == target);
}

TEST_CASE("orthogonal complement") {
    Matrix id3 = Matrix::identity(3);
    CHECK(orth_complement(Subspace(3), id3).is_full());
    CHECK(orth_complement(Subspace::full(3), id3).is_zero());
    // Relations t1-t2, t2-t3 of the commutative operad: complement is t1+t2+t3.
    Subspace com = Subspace::span(3, {vec({1, -1, 0}), vec({0, 1, -1})});
    CHECK(orth_complement(com, id3) == Subspace::span(3, {vec({1, 1, 1})}));
    CHECK_THROWS_AS(orth_complement(com, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}})), std::domain_error);

    std::mt19937 rng(9);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 2 + rng() % 6;
        Matrix g = random_matrix(rng, n, n, -2, 2);
        if (rank(g) != n) continue;
        Subspace u = Subspace::span(random_matrix(rng, rng() % (n + 1), n, -3, 3));
        Subspace perp = orth_complement(u, g);
        CHECK(perp.dim() + u.dim() == n);
        // (U^perp)^perp under the transposed form recovers U.
        CHECK(orth_complement(perp, g.transpose()) == u);
    }
}

TEST_CASE("permutations") {
    auto s4 = Perm::all(4);
    CHECK(s4.size() == 24);
    for (const auto& a : s4)
        for (const auto& b : s4) {
            CHECK((a * b).sign() == a.sign() * b.sign());
            CHECK((a * b).inverse() == b.inverse() * a.inverse());
        }
    for (const auto& a : s4)
        for (const auto& b : s4)
            for (const auto& c : s4) REQUIRE((a * b) * c == a * (b * c));
    Perm c = Perm::from_one_based({2, 3, 1});
    CHECK(c.sign() == 1);
    CHECK((c * c * c).is_identity());
    CHECK(Perm::transposition(3, 0, 1).sign() == -1);
    CHECK(c.str() == "[2 3 1]");
    CHECK_THROWS(Perm({0, 0, 1}));
}
