#pragma once

#include "operad/presentations/presentation.hpp"

namespace operad {

// (P*Q)! = P! o Q! (symmetric) or (P black-square Q)! = P! white-square Q! (regular), compared
// under the basis identification (e_i (x) f_j)^vee = e_i^vee (x) f_j^vee. The
// regular black square is taken from the explicit Psi formula, so the check is a
// genuine cross-validation there.
Verdict duality_check(const QuadPresentation& p, const QuadPresentation& q);

// Black-square relations contained in white-square relations (regular only).
Verdict epi_check(const QuadPresentation& p, const QuadPresentation& q);

// m = sum_i e_i^vee (x) e_i in the generators of P! white-square P; checks that
// m o1 m - m o2 m lies in the relations (regular P).
Verdict canonical_mult_check(const QuadPresentation& p);
SparseVector canonical_element(const GenSpace& g);

// beta = sum_i e_i^vee (x) e_i in the generators of P! o P; checks beta^(12) = -beta
// and that beta o_I beta + beta o_II beta + beta o_III beta lies in the relations
// (symmetric P).
Verdict canonical_bracket_check(const QuadPresentation& p);

}  // namespace operad
