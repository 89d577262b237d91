#include "doctest.h"

#include "operad/freeop/freespan.hpp"
#include "operad/freeop/ideal.hpp"
#include "operad/freeop/weight2.hpp"
#include "operad/oracle/trees.hpp"
#include "operad/presentations/expr.hpp"

#include <random>

using namespace operad;

namespace {

SparseVector random_sparse(std::mt19937& rng, std::size_t dim, int density = 3) {
    std::uniform_int_distribution<int> coin(0, density), val(-3, 3);
    std::vector<SparseEntry> e;
    for (std::size_t i = 0; i < dim; ++i)
        if (coin(rng) == 0) e.emplace_back(static_cast<std::uint32_t>(i), Rational(val(rng)));
    return make_sparse(std::move(e));
}

}  // namespace

TEST_CASE("free dimensions agree with brute-force tree enumeration") {
    for (int d = 1; d <= 2; ++d)
        for (int n = 1; n <= 5; ++n) {
            std::vector<std::string> names;
            for (int k = 0; k < d; ++k) names.push_back("g" + std::to_string(k));
            FreeSpan reg(GenSpace::regular(names), n);
            CHECK(reg.dim() == oracle::decorated_planar_trees(n, d).size());
            FreeSpan sym(GenSpace::symmetric(names, Matrix::identity(static_cast<std::size_t>(d))), n);
            CHECK(sym.dim() == oracle::decorated_abstract_trees(n, d).size());
            CHECK(sym.dim() == free_dim(Kind::symmetric, static_cast<std::size_t>(d), n));
        }
    CHECK(oracle::planar_binary_trees(4).size() == catalan(3));
    CHECK(double_factorial(7) == 105);
}

TEST_CASE("basis trees round-trip through index_of") {
    for (const auto& g : {GenSpace::regular({"a", "b"}), GenSpace::regular_action({"mu"})}) {
        FreeSpan s(g, 4);
        for (std::size_t i = 0; i < s.dim(); ++i) {
            auto idx = s.index_of(s.basis_tree(i));
            REQUIRE(idx.has_value());
            CHECK(*idx == i);
        }
    }
}

TEST_CASE("expanding a tree with swapped children applies the S2 action") {
    GenSpace lie = GenSpace::sign("b");
    FreeSpan s(lie, 2);
    TreeCode xy = make_vertex(0, {0}, {1}), yx = make_vertex(0, {1}, {0});
    CHECK(s.expand(yx) == scale(Rational(-1), s.expand(xy)));
    GenSpace com = GenSpace::trivial("mu");
    FreeSpan c(com, 2);
    CHECK(c.expand(yx) == c.expand(xy));
}

TEST_CASE("partial composition satisfies the sequential and parallel axioms") {
    std::mt19937 rng(11);
    for (const auto& g : {GenSpace::regular({"a", "b"}), GenSpace::regular_action({"mu"})}) {
        FreeSpan f2(g, 2), f3(g, 3), f4(g, 4);
        for (int t = 0; t < 5; ++t) {
            auto x = random_sparse(rng, f2.dim(), 1), y = random_sparse(rng, f2.dim(), 1),
                 z = random_sparse(rng, f2.dim(), 1);
            for (int i = 0; i < 2; ++i) {
                auto xy = partial_compose(f3, f2, x, i, f2, y);
                for (int j = 0; j < 2; ++j) {
                    auto lhs = partial_compose(f4, f3, xy, i + j, f2, z);
                    auto rhs = partial_compose(f4, f2, x, i, f3, partial_compose(f3, f2, y, j, f2, z));
                    CHECK(lhs == rhs);
                }
            }
            // (x o_0 y) o_2 z = (x o_1 z) o_0 y
            auto lhs = partial_compose(f4, f3, partial_compose(f3, f2, x, 0, f2, y), 2, f2, z);
            auto rhs = partial_compose(f4, f3, partial_compose(f3, f2, x, 1, f2, z), 0, f2, y);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("weight-two indices decode and the S3 action is a group action") {
    for (const auto& g : {GenSpace::regular_action({"mu"}), GenSpace::sign("b"), GenSpace::trivial("m"),
                          GenSpace::regular({"a", "b"})}) {
        for (std::uint32_t i = 0; i < weight2_dim(g); ++i) {
            auto d = weight2_decode(g, i);
            CHECK(weight2_index(g, d.comp, d.upper, d.lower) == i);
        }
        if (!g.is_symmetric()) continue;
        std::mt19937 rng(3);
        auto v = random_sparse(rng, weight2_dim(g), 1);
        CHECK(s3_transposition(g, s3_transposition(g, v)) == v);
        CHECK(s3_cycle(g, s3_cycle(g, s3_cycle(g, v))) == v);
        auto all = Perm::all(3);
        for (const auto& a : all)
            for (const auto& b : all)
                CHECK(s3_action(g, s3_action(g, v, b), a) == s3_action(g, v, a * b));
    }
}

TEST_CASE("weight-two coordinates agree with the arity-3 free basis") {
    GenSpace g = GenSpace::regular_action({"mu"});
    Matrix a = weight2_to_tree3(g), b = tree3_to_weight2(g);
    CHECK(a * b == Matrix::identity(a.rows()));
    CHECK(b * a == Matrix::identity(a.rows()));
}

TEST_CASE("ideal dimensions") {
    GenSpace m = GenSpace::regular({"mu"});
    Subspace as = Subspace::span(weight2_dim(m), {parse_relation(m, "mu(mu(x,y),z) - mu(x,mu(y,z))")});
    IdealTower t(m, as, 5);
    for (int n = 1; n <= 5; ++n) CHECK(t.quotient_dim(n) == 1);
    // no relations: the ideal is zero
    IdealTower z(m, Subspace::span(weight2_dim(m), {}), 4);
    for (int n = 1; n <= 4; ++n) CHECK(z.ideal_dim(n) == 0);
    // all relations: nothing survives from arity 3 on
    GenSpace c = GenSpace::trivial("mu");
    IdealTower full(c, Subspace::full(weight2_dim(c)), 5);
    CHECK(full.quotient_dim(2) == 1);
    for (int n = 3; n <= 5; ++n) CHECK(full.quotient_dim(n) == 0);
    // same subspace without orbit saturation for an S3-stable input
    Subspace lie =
        Subspace::span(weight2_dim(GenSpace::sign("b")),
                       {parse_relation(GenSpace::sign("b"), "b(b(x,y),z) + b(b(y,z),x) + b(b(z,x),y)")});
    IdealTower l1(GenSpace::sign("b"), lie, 5, true), l2(GenSpace::sign("b"), lie, 5, false);
    for (int n = 1; n <= 5; ++n) CHECK(l1.ideal_dim(n) == l2.ideal_dim(n));
    CHECK(l1.quotient_dim(5) == 24);
    CHECK(ideal_span(GenSpace::sign("b"), lie, 4).dim() == l1.ideal_dim(4));
}

TEST_CASE("free spans outside the supported range are rejected") {
    CHECK_THROWS(FreeSpan(GenSpace::regular({"mu"}), kHardMaxArity + 1));
    CHECK_THROWS(FreeSpan(GenSpace::regular({"mu"}), 0));
}
