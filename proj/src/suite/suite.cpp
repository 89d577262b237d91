#include "operad/suite/suite.hpp"

#include "operad/defcomplex/convolution.hpp"
#include "operad/manin/checks.hpp"
#include "operad/manin/products.hpp"
#include "operad/oracle/hochschild.hpp"
#include "operad/oracle/trees.hpp"
#include "operad/presentations/zoo.hpp"
#include "operad/series/gk.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace operad {

namespace {

// Signed permutation matrix: column j is sign[j] * e_{target[j]}.
Matrix signed_perm(const std::vector<std::size_t>& target, const std::vector<int>& sign) {
    Matrix m(target.size(), target.size());
    for (std::size_t j = 0; j < target.size(); ++j) m(target[j], j) = sign[j];
    return m;
}

struct Recorder {
    CriterionResult& r;
    void check(bool ok, const std::string& text) { r.checks.push_back({ok, text}); }
    void verdict(const Verdict& v, const std::string& text) {
        check(v.ok, text + (v.detail.empty() ? "" : ": " + v.detail));
    }
};

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

const Matrix& documented(const std::string& computed, const std::string& target) {
    for (const auto& m : documented_maps())
        if (m.computed == computed && m.target == target) return m.map;
    throw std::logic_error("no documented map " + computed + " -> " + target);
}

void criterion1(Recorder& rec) {
    struct Pair {
        const char* p;
        const char* target;
    };
    for (auto [p, t] : {Pair{"Com", "Lie"}, Pair{"Lie", "Com"}, Pair{"Perm", "PreLie"}, Pair{"PreLie", "Perm"},
                        Pair{"Dend", "Dias"}}) {
        std::string computed = std::string(p) + "!";
        rec.verdict(presentation_equal(koszul_dual(zoo_get(p)), zoo_get(t), documented(computed, t)),
                    computed + " = " + t);
    }
    for (const auto& n : zoo_names()) {
        const auto& p = zoo_get(n);
        rec.check(koszul_dual(koszul_dual(p)).same_as(p), n + "!! = " + n);
    }
}

void criterion2(Recorder& rec) {
    const auto& perm = zoo_get("Perm");
    const auto& prelie = zoo_get("PreLie");
    const auto& com = zoo_get("Com");
    const auto& lie = zoo_get("Lie");
    QuadPresentation as = symmetrize(zoo_get("As"));
    auto eq = [&](const QuadPresentation& computed, const std::string& key, const QuadPresentation& target,
                  const std::string& tname) {
        rec.verdict(presentation_equal(computed, target, documented(key, tname)), key + " = " + tname);
    };
    eq(white_product(perm, as), "white(Perm,As)", symmetrize(zoo_get("Dias")), "Dias");
    eq(white_product(perm, lie), "white(Perm,Lie)", zoo_get("Leib"), "Leib");
    eq(black_product(prelie, com), "black(PreLie,Com)", zoo_get("Zinb"), "Zinb");
    eq(black_product(prelie, as), "black(PreLie,As)", symmetrize(zoo_get("Dend")), "Dend");
    for (const auto& q : {as, com, lie, perm}) {
        Matrix id = Matrix::identity(q.gen().dim());
        rec.verdict(presentation_equal(white_product(com, q), q, id), "white(Com," + q.name() + ") = " + q.name());
        rec.verdict(presentation_equal(black_product(lie, q), q, id), "black(Lie," + q.name() + ") = " + q.name());
    }
    eq(black_product(prelie, perm), "black(PreLie,Perm)", zoo_get("PreLiePerm"), "PreLiePerm");
    eq(black_product(prelie, zoo_get("Nil")), "black(PreLie,Nil)", zoo_get("PreLieNilBlack"), "PreLieNilBlack");
}

void criterion3(Recorder& rec) {
    QuadPresentation pn = black_product(zoo_get("PreLie"), zoo_get("Nil"));
    auto dims = quotient_dim_list(pn, 5);
    rec.check(dims == std::vector<std::size_t>{1, 2, 3, 0, 0}, "dims PreLie*Nil(1..5) = " + join(dims));
    GkReport g = gk_test(pn, 10, 5);
    TruncatedSeries expect_reflected =
        TruncatedSeries::from_coeffs({Rational(1), Rational(-1), Rational(1, 2)}).truncated(10);
    rec.check(g.reflected == expect_reflected, "-f(-x) = " + g.reflected.truncated(3).str());
    std::vector<Rational> listed{Rational(1),     Rational(1),     Rational(3, 2),  Rational(5, 2),  Rational(17, 4),
                                 Rational(7),     Rational(21, 2), Rational(99, 8), Rational(55, 16)};
    bool coeffs_ok = true;
    for (int n = 1; n <= 9; ++n) coeffs_ok = coeffs_ok && g.inverse.coeff(n) == listed[static_cast<std::size_t>(n - 1)];
    rec.check(coeffs_ok, "inverse coefficients x..x^9 = " + g.inverse.truncated(9).str());
    bool flag10 = false, earlier = false;
    for (const auto& row : g.rows) {
        if (row.n == 10) flag10 = row.flagged && row.coeff == Rational(-715, 16);
        if (row.n < 10 && row.flagged) earlier = true;
    }
    rec.check(flag10 && !earlier, "first flagged coefficient is -715/16 at x^10");
    rec.check(g.not_koszul && g.verdict == "not Koszul", "gk verdict: " + g.verdict);
}

void criterion4(Recorder& rec) {
    const auto& dend = zoo_get("Dend");
    const auto& dias = zoo_get("Dias");
    QuadPresentation quad = bsquare(dend, dend);
    rec.check(quad.relation_dim() == 9, "relation dim of bsquare(Dend,Dend) = " + std::to_string(quad.relation_dim()));
    auto qd = quotient_dim_list(quad, 4);
    rec.check(qd[2] == 23, "dim Quad'(3) = " + std::to_string(qd[2]));
    QuadPresentation dd = wsquare(dias, dias);
    rec.verdict(presentation_equal(koszul_dual(quad), dd, Matrix::identity(dd.gen().dim())),
                "bsquare(Dend,Dend)! = wsquare(Dias,Dias)");
    auto ddd = quotient_dim_list(dd, 4);
    rec.check(ddd == std::vector<std::size_t>{1, 4, 9, 16}, "dims wsquare(Dias,Dias)'(1..4) = " + join(ddd));
    rec.check(quad_dim_formula(2) == 8 && quad_dim_formula(3) == 138, "closed formula gives 8, 138 at n = 2, 3");
    bool match = true;
    mpz_class fact = 1;
    for (int n = 1; n <= 4; ++n) {
        fact *= n;
        match = match && quad_dim_formula(n) == fact * qd[static_cast<std::size_t>(n - 1)];
    }
    rec.check(match, "closed formula = n! dim Quad'(n) for n <= 4 (Quad' dims " + join(qd) + ")");
    std::vector<std::size_t> dq, dqd;
    std::size_t f = 1;
    for (int n = 1; n <= 6; ++n) {
        f *= static_cast<std::size_t>(n);
        dq.push_back(quad_dim_formula(n).get_ui());
        dqd.push_back(static_cast<std::size_t>(n * n) * f);
    }
    GkReport g = gk_test(dq, dqd, 6);
    rec.check(g.identity_holds && g.identity_order == 6, "f_{Quad!}(-f_Quad(-x)) = x to order 6");
}

void criterion5(Recorder& rec) {
    const auto& dend = zoo_get("Dend");
    const auto& dias = zoo_get("Dias");
    auto b = bsquare(dend, dias), w = wsquare(dend, dias);
    rec.check(b.relation_dim() == 15, "bsquare(Dend,Dias) relation dim = " + std::to_string(b.relation_dim()));
    rec.check(w.relation_dim() == 17, "wsquare(Dend,Dias) relation dim = " + std::to_string(w.relation_dim()));
    rec.verdict(epi_check(dend, dias), "bsquare relations inside wsquare relations");
}

void criterion6(Recorder& rec) {
    auto perm = quotient_dim_list(zoo_get("Perm"), 5);
    auto prelie = quotient_dim_list(zoo_get("PreLie"), 5);
    auto dias = quotient_dim_list(zoo_get("Dias"), 5);
    auto dend = quotient_dim_list(zoo_get("Dend"), 5);
    std::vector<std::size_t> n, nn, cat, tree_count;
    for (std::size_t k = 1; k <= 5; ++k) {
        n.push_back(k);
        std::size_t p = 1;
        for (std::size_t i = 1; i < k; ++i) p *= k;
        nn.push_back(p);
        cat.push_back(catalan(static_cast<int>(k)));
        tree_count.push_back(oracle::planar_binary_trees(static_cast<int>(k) + 1).size());
    }
    rec.check(perm == n, "Perm(1..5) = " + join(perm));
    rec.check(prelie == nn, "PreLie(1..5) = " + join(prelie));
    rec.check(dias == n, "Dias'(1..5) = " + join(dias));
    rec.check(dend == cat, "Dend'(1..5) = " + join(dend) + ", Catalan " + join(cat));
    rec.check(dend == tree_count, "Dend'(n) = number of planar binary trees with n+1 leaves (" + join(tree_count) + ")");
}

SparseVector random_vector(std::size_t dim, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<SparseEntry> e;
    for (std::size_t i = 0; i < dim; ++i) {
        int x = d(rng);
        if (x != 0) e.emplace_back(static_cast<std::uint32_t>(i), Rational(x));
    }
    return make_sparse(std::move(e));
}

void criterion7(Recorder& rec) {
    std::mt19937 rng(20240501);
    std::vector<GenSpace> spaces{GenSpace::trivial("mu"), GenSpace::sign("b"), GenSpace::regular_action({"mu"}),
                                 GenSpace::symmetric({"a", "b"}, Matrix::identity(2))};
    auto all = Perm::all(3);
    for (const auto& g : spaces) {
        GenSpace dual = dual_genspace(g);
        std::size_t n = weight2_dim(g);
        bool ok = true;
        for (int t = 0; t < 100; ++t) {
            SparseVector x = random_vector(n, rng), y = random_vector(n, rng);
            Rational base = weight2_pairing(g, x, dual, y);
            for (const auto& s : all)
                if (weight2_pairing(g, s3_action(g, x, s), dual, s3_action(dual, y, s)) != Rational(s.sign()) * base)
                    ok = false;
        }
        rec.check(ok, "<w^s, W^s> = sgn(s) <w, W> on 100 random pairs, generators " + g.names().front() + " (d = " +
                          std::to_string(g.dim()) + ")");
    }
    std::size_t pairs = 0;
    std::string bad;
    for (const auto& a : zoo_names())
        for (const auto& b : zoo_names()) {
            const auto& p = zoo_get(a);
            const auto& q = zoo_get(b);
            if (p.kind() != q.kind() || p.gen().dim() * q.gen().dim() > 9) continue;
            Matrix m = phi(p.gen(), q.gen());
            ++pairs;
            if (rank(m) != m.cols()) bad += " " + a + "," + b;
        }
    rec.check(bad.empty(), "rank Phi = dim F(V (x) W)(3) on " + std::to_string(pairs) +
                               " zoo generator pairs with dim V dim W <= 9" + (bad.empty() ? "" : "; fails:" + bad));
    for (const auto& a : zoo_names())
        for (const auto& b : zoo_names()) {
            const auto& p = zoo_get(a);
            const auto& q = zoo_get(b);
            if (p.is_symmetric() || q.is_symmetric()) continue;
            auto x = bsquare(p, q), y = bsquare_explicit(p, q);
            rec.check(x.relations() == y.relations(),
                      "bsquare(" + a + "," + b + ") via duality = via Psi (relation dim " +
                          std::to_string(x.relation_dim()) + ")");
        }
}

void criterion8(Recorder& rec) {
    for (const char* n : {"As", "Dend", "Dias"}) rec.verdict(canonical_mult_check(zoo_get(n)), std::string("mult ") + n);
    rec.verdict(canonical_bracket_check(symmetrize(zoo_get("As"))), "bracket As");
    for (const char* n : {"Com", "Leib"}) rec.verdict(canonical_bracket_check(zoo_get(n)), std::string("bracket ") + n);
}

oracle::Cochain as_cochain(const ConvolutionElement& f) { return {f.arity(), f.data()}; }

void criterion9(Recorder& rec) {
    std::mt19937 rng(577);
    const auto& as = zoo_get("As");
    // Hochschild comparison on every associative test algebra.
    for (const auto& a : as_test_algebras()) {
        ConvolutionContext ctx(as, a, 4);
        oracle::Hochschild h(a.table(0));
        bool faces = true, diff = true, dd = true, st = true, br = true, cu = true, alpha = true;
        alpha = as_cochain(twisting_cochain(ctx)) == h.mult_cochain();
        for (int p = 1; p <= 3; ++p) {
            auto f = random_element(ctx, p, rng);
            auto hf = as_cochain(f);
            for (int i = 0; i <= p + 1; ++i) faces = faces && as_cochain(face(ctx, f, i)) == h.face(hf, i);
            dd = dd && as_cochain(cosimplicial_d(ctx, f)) == h.delta(hf);
            diff = diff && as_cochain(differential(ctx, f)) == oracle::scale(Rational(p % 2 ? 1 : -1), h.delta(hf));
            for (int q = 1; p + q - 1 <= 4; ++q) {
                auto g = random_element(ctx, q, rng);
                auto hg = as_cochain(g);
                st = st && as_cochain(star(ctx, f, g)) == h.circle(hf, hg);
                br = br && as_cochain(bracket(ctx, f, g)) == h.gerstenhaber_bracket(hf, hg);
                if (p + q <= 4) cu = cu && as_cochain(cup(ctx, f, g)) == h.cup(hf, hg);
            }
        }
        rec.check(alpha && faces && dd && diff && st && br && cu,
                  "As, " + a.name() + ": alpha, faces, d, del = (-1)^|f| delta, *, [,], cup match the Hochschild oracle" +
                      std::string(alpha ? "" : " [alpha]") + (faces ? "" : " [faces]") + (dd ? "" : " [d]") +
                      (diff ? "" : " [del]") + (st ? "" : " [*]") + (br ? "" : " [,]") + (cu ? "" : " [cup]"));
    }
    // Identities on 50 random pairs for As and Dend.
    struct Arities {
        int p, q, r;
    };
    const std::vector<Arities> shapes{{1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {2, 2, 1}, {1, 3, 1},
                                      {3, 1, 1}, {1, 1, 2}, {2, 1, 2}, {1, 2, 2}, {1, 1, 3}};
    for (const char* pname : {"As", "Dend"}) {
        const auto& p = zoo_get(pname);
        std::vector<AlgebraStructure> algs = std::string(pname) == "As" ? as_test_algebras() : dend_test_algebras();
        std::vector<ConvolutionContext> ctxs;
        bool mc = true, d2 = true, rs = true, lemma = true, dsign = true;
        for (const auto& a : algs) {
            ctxs.emplace_back(p, a, 4);
            mc = mc && star(ctxs.back(), twisting_cochain(ctxs.back()), twisting_cochain(ctxs.back())).is_zero();
        }
        int pairs = 0;
        for (std::size_t t = 0; t < 50; ++t, ++pairs) {
            const ConvolutionContext& ctx = ctxs[t % ctxs.size()];
            const Arities& s = shapes[(t + t / ctxs.size()) % shapes.size()];
            auto f = random_element(ctx, s.p, rng), g = random_element(ctx, s.q, rng);
            auto h = random_element(ctx, s.r, rng);
            if (s.p <= 2) d2 = d2 && differential(ctx, differential(ctx, f)).is_zero();
            if (s.p <= 3) {
                auto df = differential(ctx, f), d = cosimplicial_d(ctx, f);
                dsign = dsign && (f.degree() % 2 == 0 ? df == d : df == Rational(-1) * d);
            }
            if (s.p + s.q + s.r - 2 <= 4) {
                auto lhs = star(ctx, star(ctx, f, g), h) - star(ctx, f, star(ctx, g, h));
                auto rhs = star(ctx, star(ctx, f, h), g) - star(ctx, f, star(ctx, h, g));
                rs = rs && lhs == Rational((g.degree() * h.degree()) % 2 ? -1 : 1) * rhs;
            }
            if (s.p + s.q <= 4) {
                auto rhs = star(ctx, differential(ctx, f), g) +
                           Rational(f.degree() % 2 ? -1 : 1) * star(ctx, f, differential(ctx, g)) -
                           differential(ctx, star(ctx, f, g));
                lemma = lemma && degree_minus_one_bracket(ctx, f, g) == rhs;
            }
        }
        std::string n(pname);
        rec.check(mc, n + ": alpha * alpha = 0 on all " + std::to_string(ctxs.size()) + " test algebras");
        rec.check(d2, n + ": del^2 = 0 on " + std::to_string(pairs) + " random elements");
        rec.check(rs, n + ": right pre-Lie symmetry on " + std::to_string(pairs) + " random triples");
        rec.check(lemma, n + ": {f,g} = del f * g + (-1)^|f| f * del g - del(f * g) on " + std::to_string(pairs) +
                             " random pairs");
        rec.check(dsign, n + ": del = (-1)^|f| d on " + std::to_string(pairs) + " random elements");
    }
}

struct Spec {
    const char* title;
    double limit;
    std::function<void(Recorder&)> run;
};

const std::vector<Spec>& specs() {
    static const std::vector<Spec> s{
        {"Koszul duals", 1, criterion1},
        {"worked Manin products", 5, criterion2},
        {"PreLie*Nil is not Koszul", 10, criterion3},
        {"quadri-algebra suite", 60, criterion4},
        {"relation dimensions 15 < 17 for (Dend, Dias)", 0, criterion5},
        {"dimension tables", 120, criterion6},
        {"bilinear form, Phi and Psi", 0, criterion7},
        {"canonical structure checks", 0, criterion8},
        {"deformation complex", 120, criterion9},
    };
    return s;
}

}  // namespace

const std::vector<NamedMap>& documented_maps() {
    static const std::vector<NamedMap> maps{
        {"Com!", "Lie", Matrix::identity(1)},
        {"Lie!", "Com", Matrix::identity(1)},
        {"Perm!", "PreLie", signed_perm({0, 1}, {1, -1})},
        {"PreLie!", "Perm", signed_perm({0, 1}, {1, -1})},
        {"Dend!", "Dias", Matrix::identity(2)},
        // omega@mu, omega@mu', omega'@mu, omega'@mu' -> dashv, vdash', vdash, dashv'
        {"white(Perm,As)", "Dias", signed_perm({0, 3, 2, 1}, {1, 1, 1, 1})},
        {"white(Perm,Lie)", "Leib", Matrix::identity(2)},
        {"black(PreLie,Com)", "Zinb", signed_perm({0, 1}, {1, -1})},
        // -> prec, succ', -succ, -prec'
        {"black(PreLie,As)", "Dend", signed_perm({0, 3, 2, 1}, {1, 1, -1, -1})},
        {"black(PreLie,Perm)", "PreLiePerm", signed_perm({0, 3, 2, 1}, {1, 1, -1, -1})},
        {"black(PreLie,Nil)", "PreLieNilBlack", Matrix::identity(2)},
    };
    return maps;
}

CriterionResult run_criterion(int k) {
    CriterionResult r;
    r.number = k;
    if (k < 1 || k > kSuiteCriteria) {
        r.title = "unknown criterion";
        r.checks.push_back({false, "criterion number out of range"});
        return r;
    }
    const Spec& s = specs()[static_cast<std::size_t>(k - 1)];
    r.title = s.title;
    r.limit_seconds = s.limit;
    Recorder rec{r};
    auto t0 = std::chrono::steady_clock::now();
    try {
        s.run(rec);
    } catch (const std::exception& e) {
        rec.check(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.pass = !r.checks.empty();
    for (const auto& c : r.checks) r.pass = r.pass && c.ok;
    if (r.limit_seconds > 0 && r.seconds >= r.limit_seconds) {
        r.checks.push_back({false, "runtime limit exceeded"});
        r.pass = false;
    }
    return r;
}

std::vector<CriterionResult> run_suite() {
    std::vector<CriterionResult> out;
    for (int k = 1; k <= kSuiteCriteria; ++k) out.push_back(run_criterion(k));
    return out;
}

std::string criterion_line(const CriterionResult& r) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.number << ": " << r.title << " (" << r.seconds << " s";
    if (r.limit_seconds > 0) os << ", limit " << r.limit_seconds << " s";
    os << ")";
    return os.str();
}

std::string criterion_report(const CriterionResult& r) {
    std::string s = criterion_line(r) + "\n";
    for (const auto& c : r.checks) s += std::string("      [") + (c.ok ? "ok" : "FAIL") + "] " + c.text + "\n";
    return s;
}

}  // namespace operad
