#include "doctest.h"

#include "operad/defcomplex/convolution.hpp"
#include "operad/oracle/hochschild.hpp"
#include "operad/presentations/io.hpp"
#include "operad/presentations/zoo.hpp"

using namespace operad;

namespace {

oracle::Cochain cochain(const ConvolutionElement& f) { return {f.arity(), f.data()}; }

Matrix dual_numbers_table() {
    Matrix m(2, 4);
    m(0, 0) = 1;  // 1 * 1 = 1
    m(1, 1) = 1;  // 1 * e = e
    m(1, 2) = 1;  // e * 1 = e
    return m;
}

}  // namespace

TEST_CASE("dual cooperad dimensions and coassociativity") {
    DualCooperadTrunc as(zoo_get("As"), 5);
    DualCooperadTrunc dend(zoo_get("Dend"), 5);
    DualCooperadTrunc com(zoo_get("Com"), 5);
    std::size_t fact = 1;
    for (int n = 1; n <= 5; ++n) {
        CHECK(as.dim(n) == 1);
        CHECK(dend.dim(n) == static_cast<std::size_t>(n));
        CHECK(com.dim(n) == fact);
        fact *= static_cast<std::size_t>(n);
    }
    CHECK(as.associativity_failures() == 0);
    CHECK(dend.associativity_failures() == 0);
    CHECK(DualCooperadTrunc(zoo_get("Perm"), 4).associativity_failures() == 0);
    // every basis element of P^c(3) has a nonzero coproduct
    for (std::size_t k = 0; k < dend.dim(3); ++k) CHECK_FALSE(dend.coproduct(3, k).empty());
    CHECK_THROWS(DualCooperadTrunc(zoo_get("As"), 9));
}

TEST_CASE("algebra validation") {
    const auto& as = zoo_get("As");
    CHECK_NOTHROW(AlgebraStructure(as, 2, {dual_numbers_table()}));
    // e * e = 1 with 1 * e = e * 1 = e and 1 * 1 = 1 is associative (k[Z/2]);
    // replacing 1 * 1 by e breaks associativity
    Matrix bad = dual_numbers_table();
    bad(0, 0) = 0;
    bad(1, 0) = 1;
    bad(0, 3) = 1;
    CHECK_THROWS_AS(AlgebraStructure(as, 2, {bad}), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraStructure(as, 2, {Matrix(2, 3)}), std::invalid_argument);
    // Com needs a commutative table
    Matrix nc(2, 4);
    nc(1, 1) = 1;
    CHECK_THROWS_AS(AlgebraStructure(zoo_get("Com"), 2, {nc}), std::invalid_argument);
    CHECK(as_test_algebras().size() >= 8);
    for (const auto& a : dend_test_algebras()) CHECK(a.num_generators() == 2);
}

TEST_CASE("algebra documents round-trip") {
    for (const auto& a : dend_test_algebras()) {
        auto j = algebra_to_json(zoo_get("Dend"), a);
        auto b = algebra_from_json(zoo_get("Dend"), j);
        CHECK(b.dim() == a.dim());
        for (std::size_t g = 0; g < 2; ++g) CHECK(b.table(g) == a.table(g));
    }
    nlohmann::json broken = {{"dim", 2}, {"generators", nlohmann::json::array()}};
    CHECK_THROWS_AS(algebra_from_json(zoo_get("As"), broken), std::invalid_argument);
}

TEST_CASE("twisting cochain") {
    AlgebraStructure a(zoo_get("As"), 2, {dual_numbers_table()}, "k[e]/e^2");
    ConvolutionContext ctx(zoo_get("As"), a, 4);
    auto alpha = twisting_cochain(ctx);
    CHECK(alpha.arity() == 2);
    CHECK(alpha.degree() == 1);
    oracle::Hochschild h(dual_numbers_table());
    CHECK(cochain(alpha) == h.mult_cochain());
    CHECK(star(ctx, alpha, alpha).is_zero());
    ConvolutionContext zctx(zoo_get("Dend"), AlgebraStructure::zero(zoo_get("Dend"), 2), 4);
    CHECK(twisting_cochain(zctx).is_zero());
    // the arity-3 component of del(alpha) is the associator
    CHECK(differential(ctx, alpha).is_zero());
}

TEST_CASE("trivial products and errors") {
    AlgebraStructure a(zoo_get("As"), 2, {dual_numbers_table()});
    ConvolutionContext ctx(zoo_get("As"), a, 4);
    std::mt19937 rng(1);
    auto f = random_element(ctx, 2, rng);
    ConvolutionElement zero(ctx, 2);
    CHECK(star(ctx, zero, f).is_zero());
    CHECK(star(ctx, f, zero).is_zero());
    CHECK_THROWS(star(ctx, random_element(ctx, 3, rng), random_element(ctx, 3, rng)));
    CHECK_THROWS(ConvolutionElement(ctx, 5));
    CHECK_THROWS_AS(ConvolutionContext(zoo_get("Com"), AlgebraStructure::zero(zoo_get("Com"), 1)),
                    std::invalid_argument);
    AlgebraStructure b(zoo_get("As"), 1, {Matrix(1, 1)});
    ConvolutionContext other(zoo_get("As"), b, 4);
    CHECK_THROWS(star(other, f, f));
}

TEST_CASE("the complex of an associative algebra is the Hochschild complex") {
    std::mt19937 rng(9);
    for (const auto& a : as_test_algebras()) {
        CAPTURE(a.name());
        ConvolutionContext ctx(zoo_get("As"), a, 4);
        oracle::Hochschild h(a.table(0));
        for (int p = 1; p <= 3; ++p) {
            auto f = random_element(ctx, p, rng);
            for (int i = 0; i <= p + 1; ++i) CHECK(cochain(face(ctx, f, i)) == h.face(cochain(f), i));
            CHECK(cochain(cosimplicial_d(ctx, f)) == h.delta(cochain(f)));
            CHECK(cochain(differential(ctx, f)) ==
                  oracle::scale(Rational(f.degree() % 2 ? -1 : 1), h.delta(cochain(f))));
            for (int q = 1; p + q <= 5; ++q) {
                auto g = random_element(ctx, q, rng);
                CHECK(cochain(star(ctx, f, g)) == h.circle(cochain(f), cochain(g)));
                CHECK(cochain(bracket(ctx, f, g)) == h.gerstenhaber_bracket(cochain(f), cochain(g)));
                if (p + q <= 4) CHECK(cochain(cup(ctx, f, g)) == h.cup(cochain(f), cochain(g)));
            }
        }
    }
}

TEST_CASE("textbook Hochschild oracle is self-consistent") {
    oracle::Hochschild h(dual_numbers_table());
    oracle::Cochain f = h.zero(2);
    for (std::size_t k = 0; k < f.data.size(); ++k) f.data[k] = Rational(static_cast<long>(k % 5) - 2);
    CHECK(h.delta(h.delta(f)) == h.zero(4));
    // delta = [m, -] up to the degree sign
    auto m = h.mult_cochain();
    CHECK(h.gerstenhaber_bracket(m, f) == oracle::scale(Rational(-1), h.delta(f)));
    CHECK(h.circle(m, m) == h.zero(3));
}

TEST_CASE("invariants on the test algebras") {
    for (const char* n : {"As", "Dend"}) {
        auto algs = std::string(n) == "As" ? as_test_algebras() : dend_test_algebras();
        for (const auto& a : algs) {
            if (a.dim() > 2) continue;
            ConvolutionContext ctx(zoo_get(n), a, 4);
            for (const auto& c : check_invariants(ctx, 6, 17)) {
                CAPTURE(n);
                CAPTURE(a.name());
                CAPTURE(c.name);
                CHECK(c.ok);
            }
        }
    }
}

TEST_CASE("del squares to zero one arity higher") {
    std::mt19937 rng(4);
    for (const auto& a : dend_test_algebras()) {
        if (a.dim() != 2) continue;
        ConvolutionContext ctx(zoo_get("Dend"), a, 5);
        auto f = random_element(ctx, 3, rng);
        CHECK(differential(ctx, differential(ctx, f)).is_zero());
    }
}

TEST_CASE("a perturbed twisting cochain is detected") {
    // tables failing the relations are rejected before a complex is built
    Matrix prec(2, 4), succ(2, 4);
    prec(0, 0) = 1;
    succ(0, 0) = 1;
    CHECK_THROWS_AS(AlgebraStructure(zoo_get("Dend"), 2, {prec, succ}), std::invalid_argument);
}
