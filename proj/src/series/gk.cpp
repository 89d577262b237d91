#include "operad/series/gk.hpp"

#include "operad/manin/products.hpp"

#include <sstream>
#include <stdexcept>

namespace operad {

std::vector<std::size_t> total_dims(const QuadPresentation& p, int order, int max_arity) {
    int top = std::min(order, max_arity);
    std::vector<std::size_t> ns = quotient_dim_list(p, top);
    std::vector<std::size_t> out;
    bool vanished = false;
    for (int n = 1; n <= order; ++n) {
        if (n <= top) {
            std::size_t d = ns[static_cast<std::size_t>(n - 1)];
            if (!p.is_symmetric()) d *= static_cast<std::size_t>(factorial(static_cast<unsigned>(n)).num().get_ui());
            vanished = vanished || (n >= 3 && d == 0);
            out.push_back(d);
        } else if (vanished) {
            out.push_back(0);
        } else {
            throw std::invalid_argument("dimension of " + p.name() + " at arity " + std::to_string(n) +
                                        " is not available (computed up to " + std::to_string(top) + ")");
        }
    }
    return out;
}

GkReport gk_test(const std::vector<std::size_t>& dims_p, const std::optional<std::vector<std::size_t>>& dims_dual,
                 int order) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    if (static_cast<int>(dims_p.size()) < order)
        throw std::invalid_argument("insufficient dims: arity " + std::to_string(dims_p.size() + 1) + " is missing");
    if (dims_p.front() == 0) throw std::invalid_argument("dim P(1) must be at least 1");
    GkReport r;
    r.order = order;
    r.f = TruncatedSeries::from_dims(std::vector<std::size_t>(dims_p.begin(), dims_p.begin() + order));
    r.reflected = r.f.reflected();
    r.inverse = comp_inverse(r.reflected);
    for (int n = 1; n <= order; ++n) {
        GkRow row{n, r.inverse.coeff(n), r.inverse.coeff(n) * factorial(static_cast<unsigned>(n)), false, ""};
        if (row.dim.sign() < 0) row.reason = "negative";
        if (!row.dim.is_integer()) row.reason += std::string(row.reason.empty() ? "" : ", ") + "non-integer";
        row.flagged = !row.reason.empty();
        r.not_koszul = r.not_koszul || row.flagged;
        r.rows.push_back(std::move(row));
    }
    if (dims_dual && !dims_dual->empty()) {
        r.identity_order = std::min(order, static_cast<int>(dims_dual->size()));
        TruncatedSeries fd = TruncatedSeries::from_dims(
            std::vector<std::size_t>(dims_dual->begin(), dims_dual->begin() + r.identity_order));
        TruncatedSeries lhs = compose(fd, r.reflected.truncated(r.identity_order));
        TruncatedSeries x = TruncatedSeries::x(r.identity_order);
        for (int n = 1; n <= r.identity_order; ++n)
            if (lhs.coeff(n) != x.coeff(n)) {
                r.identity_holds = false;
                r.first_identity_failure = n;
                break;
            }
        r.not_koszul = r.not_koszul || !r.identity_holds;
    }
    if (r.not_koszul)
        r.verdict = "not Koszul";
    else
        r.verdict = "consistent with Koszulity up to order " + std::to_string(order);
    return r;
}

GkReport gk_test(const QuadPresentation& p, int order, int max_arity) {
    std::vector<std::size_t> dp = total_dims(p, order, max_arity);
    QuadPresentation dual = koszul_dual(p);
    std::vector<std::size_t> dd;
    try {
        dd = total_dims(dual, order, max_arity);
    } catch (const std::invalid_argument&) {
        dd = total_dims(dual, max_arity, max_arity);
    }
    return gk_test(dp, dd, order);
}

mpz_class quad_dim_formula(int n) {
    if (n < 1) throw std::invalid_argument("arity must be positive");
    mpz_class sum = 0;
    for (int j = n; j <= 2 * n - 1; ++j) sum += binomial(3 * n, n + 1 + j).num() * binomial(j - 1, j - n).num();
    return factorial(static_cast<unsigned>(n - 1)).num() * sum;
}

std::string gk_report_str(const GkReport& r) {
    std::ostringstream os;
    os << "f_P(x)       = " << r.f.str() << "\n";
    os << "-f_P(-x)     = " << r.reflected.str() << "\n";
    os << "inverse      = " << r.inverse.str() << "\n";
    os << "n  coefficient  n!*coefficient  flag\n";
    for (const auto& row : r.rows)
        os << row.n << "  " << row.coeff.str() << "  " << row.dim.str() << "  " << (row.flagged ? row.reason : "-")
           << "\n";
    if (r.identity_order > 0) {
        os << "f_P!(-f_P(-x)) = x up to order " << r.identity_order << ": "
           << (r.identity_holds ? "holds" : "fails at x^" + std::to_string(r.first_identity_failure)) << "\n";
    }
    os << "verdict: " << r.verdict << "\n";
    return os.str();
}

}  // namespace operad
