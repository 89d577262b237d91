#include "doctest.h"

#include "operad/presentations/zoo.hpp"
#include "operad/series/gk.hpp"
#include "operad/series/series.hpp"

#include <random>

using namespace operad;

namespace {

TruncatedSeries series(const std::vector<Rational>& c) { return TruncatedSeries::from_coeffs(c); }

}  // namespace

TEST_CASE("series from dimension tables") {
    CHECK(TruncatedSeries::from_dims({1, 2, 3, 0, 0}) == series({1, 1, Rational(1, 2), 0, 0}));
    auto perm = TruncatedSeries::from_dims({1, 2, 3, 4});
    // x e^x
    CHECK(perm == series({1, 1, Rational(1, 2), Rational(1, 6)}));
    CHECK_THROWS_AS(TruncatedSeries::from_dims({}), std::invalid_argument);
    CHECK(TruncatedSeries::from_dims({1, 2, 3}).reflected() == series({1, -1, Rational(1, 2)}));
}

TEST_CASE("composition and products truncate") {
    auto x = TruncatedSeries::x(5);
    auto f = series({1, 1, 0, 0, 0});
    CHECK(compose(f, x) == f);
    CHECK(compose(x, f) == f);
    // (x + x^2)^2 = x^2 + 2x^3 + x^4
    CHECK(f * f == series({0, 1, 2, 1, 0}));
    CHECK(f.str() == "x + x^2 + O(x^6)");
}

TEST_CASE("compositional inverse") {
    CHECK(comp_inverse(TruncatedSeries::x(6)) == TruncatedSeries::x(6));
    // x/(1-x) and x/(1+x)
    std::vector<Rational> a, b;
    for (int n = 1; n <= 8; ++n) {
        a.push_back(1);
        b.push_back(n % 2 ? 1 : -1);
    }
    CHECK(comp_inverse(series(a)) == series(b));
    auto inv = comp_inverse(series({1, -1, Rational(1, 2), 0, 0, 0, 0, 0, 0, 0}));
    CHECK(inv == series({1, 1, Rational(3, 2), Rational(5, 2), Rational(17, 4), 7, Rational(21, 2), Rational(99, 8),
                         Rational(55, 16), Rational(-715, 16)}));
    CHECK_THROWS_AS(comp_inverse(series({0, 1})), std::domain_error);
}

TEST_CASE("inverse is two-sided and an involution on random series") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> c{1};
        for (int n = 2; n <= 8; ++n) c.push_back(Rational(d(rng), 1 + (t % 3)));
        auto f = series(c);
        auto g = comp_inverse(f);
        CHECK(compose(f, g) == TruncatedSeries::x(8));
        CHECK(compose(g, f) == TruncatedSeries::x(8));
        CHECK(comp_inverse(g) == f);
    }
}

TEST_CASE("total dimensions") {
    CHECK(total_dims(zoo_get("As"), 4, 4) == std::vector<std::size_t>{1, 2, 6, 24});
    // the quotient vanishes at arity 4, so higher arities are 0
    CHECK(total_dims(zoo_get("PreLieNilBlack"), 8, 5) == std::vector<std::size_t>{1, 2, 3, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(total_dims(zoo_get("Lie"), 7, 5), std::invalid_argument);
}

TEST_CASE("gk test") {
    auto com_lie = gk_test(zoo_get("Com"), 5, 5);
    CHECK(com_lie.identity_holds);
    CHECK(com_lie.identity_order == 5);
    CHECK_FALSE(com_lie.not_koszul);
    CHECK(com_lie.verdict.find("consistent with Koszulity") != std::string::npos);
    auto pn = gk_test(zoo_get("PreLieNilBlack"), 10, 5);
    CHECK(pn.not_koszul);
    CHECK(pn.verdict == "not Koszul");
    REQUIRE(pn.rows.size() == 10);
    for (int n = 1; n <= 9; ++n) CHECK_FALSE(pn.rows[static_cast<std::size_t>(n - 1)].flagged);
    CHECK(pn.rows[9].flagged);
    CHECK(pn.rows[9].coeff == Rational(-715, 16));
    CHECK(pn.rows[9].reason == "negative");
    // Com dims alone predict the Lie dims (n-1)!
    auto r = gk_test(std::vector<std::size_t>{1, 1, 1}, std::nullopt, 3);
    CHECK_FALSE(r.not_koszul);
    CHECK(r.rows[2].dim == Rational(2));
    CHECK_THROWS_AS(gk_test(std::vector<std::size_t>{1, 1}, std::nullopt, 3), std::invalid_argument);
}

TEST_CASE("closed formula for the quadri-algebra operad") {
    CHECK(quad_dim_formula(1) == 1);
    CHECK(quad_dim_formula(2) == 8);
    CHECK(quad_dim_formula(3) == 138);
    CHECK(quad_dim_formula(4) == 3744);
    std::vector<std::size_t> q, d;
    std::size_t f = 1;
    for (int n = 1; n <= 6; ++n) {
        f *= static_cast<std::size_t>(n);
        q.push_back(quad_dim_formula(n).get_ui());
        d.push_back(static_cast<std::size_t>(n * n) * f);
    }
    auto g = gk_test(q, d, 6);
    CHECK(g.identity_holds);
    // a perturbed dual table breaks the identity
    d[4] += 1;
    CHECK_FALSE(gk_test(q, d, 6).identity_holds);
}
