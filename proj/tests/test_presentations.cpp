#include "doctest.h"

#include "operad/manin/products.hpp"
#include "operad/presentations/expr.hpp"
#include "operad/presentations/io.hpp"
#include "operad/presentations/presentation.hpp"
#include "operad/presentations/zoo.hpp"

using namespace operad;

TEST_CASE("zoo dimensions match the recorded tables") {
    for (const auto& n : zoo_names()) {
        const auto& e = zoo_entry(n);
        CAPTURE(n);
        CHECK(quotient_dim_list(e.pres, static_cast<int>(e.expected_dims.size())) == e.expected_dims);
    }
}

TEST_CASE("symmetric zoo relations are S3-stable") {
    for (const auto& n : zoo_names()) {
        const auto& p = zoo_get(n);
        if (p.is_symmetric()) CHECK(is_s3_stable(p.gen(), p.relations()));
    }
}

TEST_CASE("symmetrization multiplies dimensions by n!") {
    for (const char* n : {"As", "Dend", "Dias"}) {
        auto ns = quotient_dim_list(zoo_get(n), 4);
        auto s = quotient_dim_list(symmetrize(zoo_get(n)), 4);
        std::size_t f = 1;
        for (std::size_t k = 0; k < 4; ++k) {
            f *= k + 1;
            CHECK(s[k] == f * ns[k]);
        }
    }
}

TEST_CASE("parsing relations") {
    GenSpace g = GenSpace::regular({"prec", "succ"});
    auto r = parse_relation(g, "prec(succ(x,y),z) - succ(x,prec(y,z))");
    CHECK(r.size() == 2);
    CHECK(parse_relation(g, "2*prec(x,prec(y,z))") == scale(Rational(2), parse_relation(g, "prec(x,prec(y,z))")));
    CHECK(parse_relation(g, "1/2*prec(x,prec(y,z))") ==
          scale(Rational(1, 2), parse_relation(g, "prec(x,prec(y,z))")));
    CHECK_THROWS_AS(parse_relation(g, "foo(foo(x,y),z)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_relation(g, "prec(prec(x,x),z)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_relation(g, "prec(prec(x,y),z"), std::invalid_argument);
    // regular monomials must keep the variables in order
    CHECK_THROWS_AS(parse_relation(g, "prec(prec(y,x),z)"), std::invalid_argument);
    // symmetric: swapping the children of a sign generator flips the sign
    GenSpace lie = GenSpace::sign("b");
    CHECK(parse_relation(lie, "b(b(y,x),z)") == scale(Rational(-1), parse_relation(lie, "b(b(x,y),z)")));
}

TEST_CASE("v-coordinates reproduce the zoo presentations") {
    GenSpace k2 = GenSpace::regular_action({"mu"});
    auto build = [&](const std::vector<std::string>& rel) {
        std::vector<SparseVector> v;
        for (const auto& r : rel) v.push_back(parse_v_relation(k2, r));
        return QuadPresentation("v", k2, v);
    };
    CHECK(build(v_relations_perm()).relations() == zoo_get("Perm").relations());
    CHECK(build(v_relations_prelie()).relations() == zoo_get("PreLie").relations());
    CHECK(build(v_relations_as()).relations() == symmetrize(zoo_get("As")).relations());
    CHECK_THROWS_AS(parse_v_relation(GenSpace::sign("b"), "v1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_v_relation(k2, "v13"), std::invalid_argument);
}

TEST_CASE("presentation documents round-trip") {
    for (const auto& n : zoo_names()) {
        const auto& p = zoo_get(n);
        auto q = presentation_from_json(nlohmann::json::parse(presentation_to_json(p).dump()));
        CHECK(q.same_as(p));
        CHECK(q.name() == p.name());
        CHECK(q.gen().names() == p.gen().names());
    }
}

TEST_CASE("malformed presentation documents are rejected") {
    auto doc = presentation_to_json(zoo_get("As"));
    auto bad = doc;
    bad["kind"] = "planar";
    CHECK_THROWS_AS(presentation_from_json(bad), std::invalid_argument);
    bad = doc;
    bad["relations"][0][0]["upper"] = 7;
    CHECK_THROWS_AS(presentation_from_json(bad), std::invalid_argument);
    bad = doc;
    bad.erase("generators");
    CHECK_THROWS_AS(presentation_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(load_presentation("zoo:NoSuchOperad"), std::invalid_argument);
    CHECK_THROWS_AS(load_presentation("/nonexistent/file.json"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(nlohmann::json("1/0")), std::invalid_argument);
}

TEST_CASE("presentation equality depends on the generator map") {
    auto dual = koszul_dual(zoo_get("Perm"));
    Matrix good(2, 2), id = Matrix::identity(2);
    good(0, 0) = 1;
    good(1, 1) = -1;
    CHECK(presentation_equal(dual, zoo_get("PreLie"), good).ok);
    // a map that does not commute with the S2 action is refused
    Matrix noneq(2, 2);
    noneq(0, 0) = 1;
    noneq(1, 0) = 1;
    noneq(1, 1) = 1;
    CHECK_THROWS_AS(presentation_equal(dual, zoo_get("PreLie"), noneq), std::invalid_argument);
    CHECK_THROWS_AS(presentation_equal(dual, zoo_get("PreLie"), Matrix(2, 2)), std::invalid_argument);
    // Perm and PreLie differ even though both live on k[S2]
    CHECK_FALSE(presentation_equal(zoo_get("Perm"), zoo_get("PreLie"), id).ok);
    CHECK_FALSE(presentation_invariants_equal(zoo_get("Perm"), zoo_get("PreLie"), 4).ok);
    CHECK(presentation_invariants_equal(zoo_get("Leib"), koszul_dual(zoo_get("Zinb")), 4).ok);
}

TEST_CASE("induced weight-two maps are multiplicative") {
    GenSpace g = GenSpace::regular({"a", "b"});
    Matrix s(2, 2);
    s(1, 0) = 1;
    s(0, 1) = 2;
    Matrix w = induced_weight2_map(g, g, s);
    Matrix w2 = induced_weight2_map(g, g, s * s);
    CHECK(w * w == w2);
}

TEST_CASE("zoo lookups") {
    CHECK(zoo_has("Dend"));
    CHECK_FALSE(zoo_has("dend"));
    CHECK_THROWS_AS(zoo_entry("Nope"), std::invalid_argument);
    CHECK(zoo_entry("Trias").external);
    CHECK_FALSE(zoo_entry("Dend").external);
}
