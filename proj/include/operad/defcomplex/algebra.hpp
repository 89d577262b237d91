#pragma once

#include "operad/exact/matrix.hpp"
#include "operad/freeop/tree.hpp"
#include "operad/presentations/presentation.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace operad {

// A finite-dimensional P-algebra: one dim x dim^2 structure matrix per generator,
// column a*dim + b holding the coordinates of g(e_a, e_b).
class AlgebraStructure {
public:
    AlgebraStructure() = default;
    // Throws std::invalid_argument when the tables do not define a P-algebra
    // (relations not killed, or, for symmetric P, tables not compatible with action12).
    AlgebraStructure(const QuadPresentation& p, std::size_t dim, std::vector<Matrix> tables, std::string name = "");
    static AlgebraStructure zero(const QuadPresentation& p, std::size_t dim);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    std::size_t num_generators() const { return tables_.size(); }
    const Matrix& table(std::size_t g) const { return tables_.at(g); }

    // Value of a decorated tree on basis inputs e_{inputs[0]}, ..., one per leaf label.
    std::vector<Rational> evaluate(const TreeCode& t, const std::vector<std::size_t>& inputs) const;

private:
    std::string name_;
    std::size_t dim_ = 0;
    std::vector<Matrix> tables_;
};

// First reason the tables fail to define a P-algebra; empty when they do.
std::string algebra_violation(const QuadPresentation& p, std::size_t dim, const std::vector<Matrix>& tables);

// Structure matrix of an associative multiplication given by c(a, b) -> vector.
Matrix table_from_products(std::size_t dim,
                           const std::vector<std::vector<std::vector<Rational>>>& products);  // [a][b] -> coords

// Associative test algebras of dimension at most 3 for the zoo entry As.
std::vector<AlgebraStructure> as_test_algebras();
// Dendriform test algebras from Rota-Baxter operators of weight 1, x < y = x R(y),
// x > y = R(x) y + x y, and zero algebras.
std::vector<AlgebraStructure> dend_test_algebras();
// Dendriform structure from an associative multiplication table and a weight-1
// Rota-Baxter operator R.
AlgebraStructure rota_baxter_dendriform(const Matrix& assoc, const Matrix& r, std::string name);

// { "dim": int, "generators": [ { "name": str, "table": dim x dim^2 matrix } ] }
nlohmann::json algebra_to_json(const QuadPresentation& p, const AlgebraStructure& a);
AlgebraStructure algebra_from_json(const QuadPresentation& p, const nlohmann::json& j);

}  // namespace operad
