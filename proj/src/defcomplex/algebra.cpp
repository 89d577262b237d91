#include "operad/defcomplex/algebra.hpp"

#include "operad/freeop/weight2.hpp"
#include "operad/presentations/io.hpp"
#include "operad/presentations/zoo.hpp"

#include <stdexcept>

namespace operad {

namespace {

std::vector<Rational> eval_at(const std::vector<Matrix>& tables, std::size_t m, const TreeCode& t, std::size_t& pos,
                              const std::vector<std::size_t>& inputs) {
    int c = t[pos++];
    if (is_leaf(c)) {
        std::vector<Rational> e(m);
        e[inputs.at(static_cast<std::size_t>(c))] = 1;
        return e;
    }
    std::vector<Rational> x = eval_at(tables, m, t, pos, inputs);
    std::vector<Rational> y = eval_at(tables, m, t, pos, inputs);
    const Matrix& tab = tables.at(static_cast<std::size_t>(vertex_gen(c)));
    std::vector<Rational> out(m);
    for (std::size_t a = 0; a < m; ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < m; ++b) {
            if (y[b].is_zero()) continue;
            Rational xy = x[a] * y[b];
            for (std::size_t k = 0; k < m; ++k)
                if (!tab(k, a * m + b).is_zero()) out[k] += tab(k, a * m + b) * xy;
        }
    }
    return out;
}

std::vector<Rational> eval(const std::vector<Matrix>& tables, std::size_t m, const TreeCode& t,
                           const std::vector<std::size_t>& inputs) {
    std::size_t pos = 0;
    return eval_at(tables, m, t, pos, inputs);
}

}  // namespace

std::string algebra_violation(const QuadPresentation& p, std::size_t dim, const std::vector<Matrix>& tables) {
    const GenSpace& g = p.gen();
    if (dim == 0) return "algebra dimension must be positive";
    if (tables.size() != g.dim()) return "expected one structure table per generator";
    for (const auto& t : tables)
        if (t.rows() != dim || t.cols() != dim * dim) return "structure tables must be dim x dim^2";
    if (g.is_symmetric()) {
        // g(b, a) = (g^(12))(a, b)
        const Matrix& act = g.action12();
        for (std::size_t j = 0; j < g.dim(); ++j)
            for (std::size_t a = 0; a < dim; ++a)
                for (std::size_t b = 0; b < dim; ++b)
                    for (std::size_t k = 0; k < dim; ++k) {
                        Rational rhs(0);
                        for (std::size_t i = 0; i < g.dim(); ++i) rhs += act(i, j) * tables[i](k, a * dim + b);
                        if (tables[j](k, b * dim + a) != rhs)
                            return "table of " + g.names()[j] + " is not compatible with the S2 action";
                    }
    }
    for (const auto& r : p.relations().basis())
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b)
                for (std::size_t c = 0; c < dim; ++c) {
                    std::vector<Rational> acc(dim);
                    for (const auto& [i, coeff] : r) {
                        std::vector<Rational> v = eval(tables, dim, weight2_tree(g, i), {a, b, c});
                        for (std::size_t k = 0; k < dim; ++k) acc[k] += coeff * v[k];
                    }
                    for (const auto& x : acc)
                        if (!x.is_zero()) return "relation " + weight2_str(g, r) + " fails on a basis triple";
                }
    return "";
}

AlgebraStructure::AlgebraStructure(const QuadPresentation& p, std::size_t dim, std::vector<Matrix> tables,
                                   std::string name)
    : name_(std::move(name)), dim_(dim), tables_(std::move(tables)) {
    std::string why = algebra_violation(p, dim_, tables_);
    if (!why.empty()) throw std::invalid_argument("not a " + p.name() + "-algebra: " + why);
}

AlgebraStructure AlgebraStructure::zero(const QuadPresentation& p, std::size_t dim) {
    return AlgebraStructure(p, dim, std::vector<Matrix>(p.gen().dim(), Matrix(dim, dim * dim)),
                            "zero" + std::to_string(dim));
}

std::vector<Rational> AlgebraStructure::evaluate(const TreeCode& t, const std::vector<std::size_t>& inputs) const {
    return eval(tables_, dim_, t, inputs);
}

Matrix table_from_products(std::size_t dim, const std::vector<std::vector<std::vector<Rational>>>& products) {
    Matrix m(dim, dim * dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t k = 0; k < dim; ++k) m(k, a * dim + b) = products.at(a).at(b).at(k);
    return m;
}

namespace {

// Multiplication with e_a e_b = e_{f(a,b)}, or 0 when f(a,b) >= dim.
template <class F>
Matrix basis_products(std::size_t dim, F f) {
    Matrix m(dim, dim * dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            std::size_t k = f(a, b);
            if (k < dim) m(k, a * dim + b) = 1;
        }
    return m;
}

constexpr std::size_t kNone = 1000;

Matrix field_k() {
    return basis_products(1, [](std::size_t, std::size_t) { return std::size_t{0}; });
}
Matrix dual_numbers() {
    return basis_products(2, [](std::size_t a, std::size_t b) { return a + b < 2 ? a + b : kNone; });
}
Matrix truncated_poly3() {
    return basis_products(3, [](std::size_t a, std::size_t b) { return a + b < 3 ? a + b : kNone; });
}
Matrix product_of_fields(std::size_t n) {
    return basis_products(n, [](std::size_t a, std::size_t b) { return a == b ? a : kNone; });
}
// Basis E11, E12, E22.
Matrix upper_triangular() {
    return basis_products(3, [](std::size_t a, std::size_t b) -> std::size_t {
        if (a == 0 && b == 0) return 0;
        if (a == 0 && b == 1) return 1;
        if (a == 1 && b == 2) return 1;
        if (a == 2 && b == 2) return 2;
        return kNone;
    });
}
// e1 e1 = e1, e1 e2 = e2: a left unit that is not a right unit.
Matrix left_unit2() {
    return basis_products(2, [](std::size_t a, std::size_t b) -> std::size_t { return a == 0 ? b : kNone; });
}
// x, x^2, x^3 in k[x]/(x^4) without unit.
Matrix nilpotent3() {
    return basis_products(3, [](std::size_t a, std::size_t b) { return a + b + 1 < 3 ? a + b + 1 : kNone; });
}

Matrix minus_projection(std::size_t dim, const std::vector<std::size_t>& onto) {
    Matrix r(dim, dim);
    for (auto i : onto) r(i, i) = -1;
    return r;
}

}  // namespace

std::vector<AlgebraStructure> as_test_algebras() {
    const QuadPresentation& as = zoo_get("As");
    std::vector<AlgebraStructure> out;
    out.emplace_back(as, 1, std::vector<Matrix>{field_k()}, "k");
    out.emplace_back(as, 2, std::vector<Matrix>{dual_numbers()}, "k[e]/e^2");
    out.emplace_back(as, 2, std::vector<Matrix>{product_of_fields(2)}, "k x k");
    out.emplace_back(as, 2, std::vector<Matrix>{left_unit2()}, "left-unital 2-dim");
    out.emplace_back(as, 3, std::vector<Matrix>{upper_triangular()}, "upper triangular 2x2");
    out.emplace_back(as, 3, std::vector<Matrix>{truncated_poly3()}, "k[x]/x^3");
    out.emplace_back(as, 3, std::vector<Matrix>{product_of_fields(3)}, "k x k x k");
    out.emplace_back(as, 3, std::vector<Matrix>{nilpotent3()}, "xk[x]/x^4");
    for (std::size_t d = 1; d <= 3; ++d) out.push_back(AlgebraStructure::zero(as, d));
    return out;
}

AlgebraStructure rota_baxter_dendriform(const Matrix& assoc, const Matrix& r, std::string name) {
    std::size_t m = r.rows();
    Matrix prec(m, m * m), succ(m, m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t k = 0; k < m; ++k) {
                Rational lhs(0), rhs = assoc(k, a * m + b);
                for (std::size_t j = 0; j < m; ++j) {
                    lhs += r(j, b) * assoc(k, a * m + j);  // e_a R(e_b)
                    rhs += r(j, a) * assoc(k, j * m + b);  // R(e_a) e_b
                }
                prec(k, a * m + b) = lhs;
                succ(k, a * m + b) = rhs;
            }
    return AlgebraStructure(zoo_get("Dend"), m, {prec, succ}, std::move(name));
}

std::vector<AlgebraStructure> dend_test_algebras() {
    std::vector<AlgebraStructure> out;
    out.push_back(rota_baxter_dendriform(product_of_fields(2), minus_projection(2, {0}), "k x k, R = -pr_1"));
    out.push_back(rota_baxter_dendriform(dual_numbers(), minus_projection(2, {0}), "k[e]/e^2, R = -pr_1"));
    out.push_back(rota_baxter_dendriform(upper_triangular(), minus_projection(3, {0}), "upper triangular, R = -pr_E11"));
    out.push_back(rota_baxter_dendriform(product_of_fields(3), minus_projection(3, {0}), "k x k x k, R = -pr_1"));
    out.push_back(rota_baxter_dendriform(truncated_poly3(), Matrix(3, 3), "k[x]/x^3, R = 0"));
    for (std::size_t d = 1; d <= 3; ++d) out.push_back(AlgebraStructure::zero(zoo_get("Dend"), d));
    return out;
}

nlohmann::json algebra_to_json(const QuadPresentation& p, const AlgebraStructure& a) {
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t g = 0; g < a.num_generators(); ++g)
        gens.push_back({{"name", p.gen().names()[g]}, {"table", matrix_to_json(a.table(g))}});
    return {{"dim", a.dim()}, {"generators", gens}};
}

AlgebraStructure algebra_from_json(const QuadPresentation& p, const nlohmann::json& j) {
    try {
        auto dim = j.at("dim").get<std::size_t>();
        std::vector<Matrix> tables(p.gen().dim());
        std::vector<bool> seen(p.gen().dim(), false);
        for (const auto& g : j.at("generators")) {
            std::size_t i = p.gen().index(g.at("name").get<std::string>());
            tables[i] = matrix_from_json(g.at("table"));
            seen[i] = true;
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) throw std::invalid_argument("no table for generator " + p.gen().names()[i]);
        return AlgebraStructure(p, dim, std::move(tables), j.value("name", std::string("algebra")));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed algebra document: ") + e.what());
    }
}

}  // namespace operad
