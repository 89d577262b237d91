#pragma once

#include "operad/exact/matrix.hpp"
#include "operad/presentations/presentation.hpp"

namespace operad {

// Phi : F(V (x) W)(3) -> F(V)(3) (x) F(W)(3), the componentwise projection
// (mu1 mu2) o_c (nu1 nu2) -> (mu1 o_c nu1) (x) (mu2 o_c nu2). The codomain index of
// a (x) b is a * dim F(W)(3) + b. Both spaces must have the same kind.
Matrix phi(const GenSpace& v, const GenSpace& w);

// P! = F(V^vee)/(R^perp) under the weight-two pairing.
QuadPresentation koszul_dual(const QuadPresentation& p);

// Phi^{-1}(R (x) F(W)(3) + F(V)(3) (x) S) inside F(V (x) W)(3).
Subspace white_relations(const GenSpace& v, const Subspace& r, const GenSpace& w, const Subspace& s);

// Symmetric products. The black product lives on V (x) W (x) sgn and is computed
// as the orthogonal of the white relations of the duals, with the basis
// identification (e_i (x) f_j (x) 1)^vee = e_i^vee (x) f_j^vee.
QuadPresentation white_product(const QuadPresentation& p, const QuadPresentation& q);
QuadPresentation black_product(const QuadPresentation& p, const QuadPresentation& q);

// Regular products on V' (x) W'. bsquare goes through duality; bsquare_explicit
// spans Psi(r (x) s) = Phi^{-1}(r1 (x) s1) - Phi^{-1}(r2 (x) s2), r = r1 + r2 split
// by composition type.
QuadPresentation wsquare(const QuadPresentation& p, const QuadPresentation& q);
QuadPresentation bsquare(const QuadPresentation& p, const QuadPresentation& q);
QuadPresentation bsquare_explicit(const QuadPresentation& p, const QuadPresentation& q);
SparseVector psi(const GenSpace& v, const SparseVector& r, const GenSpace& w, const SparseVector& s);

}  // namespace operad
