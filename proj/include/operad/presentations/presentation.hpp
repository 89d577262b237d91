#pragma once

#include "operad/exact/matrix.hpp"
#include "operad/exact/subspace.hpp"
#include "operad/freeop/genspace.hpp"
#include "operad/freeop/weight2.hpp"

#include <string>
#include <vector>

namespace operad {

// Binary quadratic operad F(V)/(R), with R a subspace of the weight-two space.
// Symmetric relations are closed under the S3 action on construction.
class QuadPresentation {
public:
    QuadPresentation() = default;
    QuadPresentation(std::string name, GenSpace gen, const std::vector<SparseVector>& spanning);
    QuadPresentation(std::string name, GenSpace gen, const Subspace& relations);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const std::string& provenance() const { return provenance_; }
    void set_provenance(std::string p) { provenance_ = std::move(p); }

    Kind kind() const { return gen_.kind(); }
    bool is_symmetric() const { return gen_.is_symmetric(); }
    const GenSpace& gen() const { return gen_; }
    const Subspace& relations() const { return rel_; }
    std::size_t relation_dim() const { return rel_.dim(); }
    std::size_t weight2_dim() const { return rel_.ambient_dim(); }

    // Same generating space (up to names) and identical canonical relations.
    bool same_as(const QuadPresentation& o) const;

private:
    std::string name_;
    std::string provenance_;
    GenSpace gen_;
    Subspace rel_;
};

// Smallest S3-stable subspace containing the given vectors.
Subspace s3_closure(const GenSpace& g, const std::vector<SparseVector>& spanning);
bool is_s3_stable(const GenSpace& g, const Subspace& s);

// Symmetric presentation Sigma(P') of a regular presentation, on generators
// [g0, g0', g1, g1', ...]: mu o1 nu -> mu o_I nu and mu o2 nu -> mu' o_II nu.
QuadPresentation symmetrize(const QuadPresentation& p);
Matrix symmetrize_weight2_map(const GenSpace& regular);

// Weight-two map induced by a generator map G (columns = images of p's generators).
Matrix induced_weight2_map(const GenSpace& from, const GenSpace& to, const Matrix& gen_map);

struct DimRecord {
    int arity;
    std::size_t free_dim;
    std::size_t ideal_dim;
    std::size_t quotient_dim;
};

// dim P(n) = dim F(V)(n) - dim (R)(n) for n = 1..n_max. For a regular presentation
// these are the non-symmetric dimensions dim P'(n) (so dim P(n) = n! dim P'(n)).
std::vector<DimRecord> quotient_dims(const QuadPresentation& p, int n_max);
std::vector<std::size_t> quotient_dim_list(const QuadPresentation& p, int n_max);

struct Verdict {
    bool ok = false;
    std::string detail;
};

// True iff gen_map carries p's relations exactly onto q's. Throws
// std::invalid_argument if gen_map is not invertible or not equivariant.
Verdict presentation_equal(const QuadPresentation& p, const QuadPresentation& q, const Matrix& gen_map);
// Without a map: compares relation dimension and (when available) quotient dims.
Verdict presentation_invariants_equal(const QuadPresentation& p, const QuadPresentation& q, int max_arity);

}  // namespace operad
