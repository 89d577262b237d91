#pragma once

#include "operad/presentations/presentation.hpp"
#include "operad/series/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace operad {

struct GkRow {
    int n;
    Rational coeff;      // [x^n] of the inverse of -f_P(-x)
    Rational dim;        // n! * coeff, the would-be dim P!(n)
    bool flagged;        // negative or non-integer
    std::string reason;  // "negative", "non-integer", "negative, non-integer" or ""
};

struct GkReport {
    int order = 0;
    TruncatedSeries f;          // f_P
    TruncatedSeries reflected;  // -f_P(-x)
    TruncatedSeries inverse;    // its compositional inverse
    std::vector<GkRow> rows;
    // Order to which f_{P!}(-f_P(-x)) = x was compared (0 when no dual dims were given).
    int identity_order = 0;
    bool identity_holds = true;
    int first_identity_failure = 0;
    bool not_koszul = false;
    std::string verdict;
};

// Symmetric (total) dimensions dim P(n) for n = 1..order. Regular presentations
// contribute n! dim P'(n). Arities beyond the computable range are filled with 0 when
// the quotient already vanishes at a computed arity (a full ideal stays full);
// otherwise throws std::invalid_argument naming the first missing arity.
std::vector<std::size_t> total_dims(const QuadPresentation& p, int order, int max_arity);

// The necessary Koszulity test. dims_p must have at least `order` entries; dims_dual
// (when given) is compared up to min(order, its size).
GkReport gk_test(const std::vector<std::size_t>& dims_p, const std::optional<std::vector<std::size_t>>& dims_dual,
                 int order);
// Dimensions computed from the presentation and its Koszul dual.
GkReport gk_test(const QuadPresentation& p, int order, int max_arity);

// (n-1)! * sum_{j=n}^{2n-1} C(3n, n+1+j) C(j-1, j-n), the closed formula for the
// quadri-algebra operad.
mpz_class quad_dim_formula(int n);

std::string gk_report_str(const GkReport& r);

}  // namespace operad
