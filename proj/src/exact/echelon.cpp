#include "operad/exact/echelon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace operad {
namespace detail {

struct Overflow {};

// Scalar policy for checked int64 and mpz integers.
inline bool is_zero(std::int64_t x) { return x == 0; }
inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
inline int sign_of(std::int64_t x) { return (x > 0) - (x < 0); }
inline int sign_of(const mpz_class& x) { return sgn(x); }

inline std::int64_t mul_sub(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) {
    std::int64_t p, q, r;
    if (__builtin_mul_overflow(a, x, &p) || __builtin_mul_overflow(b, y, &q) || __builtin_sub_overflow(p, q, &r) ||
        r == INT64_MIN)
        throw Overflow{};
    return r;
}
inline mpz_class mul_sub(const mpz_class& a, const mpz_class& x, const mpz_class& b, const mpz_class& y) {
    return a * x - b * y;
}
inline std::int64_t mul(std::int64_t a, std::int64_t x) {
    std::int64_t p;
    if (__builtin_mul_overflow(a, x, &p) || p == INT64_MIN) throw Overflow{};
    return p;
}
inline mpz_class mul(const mpz_class& a, const mpz_class& x) { return a * x; }
inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline mpz_class gcd_of(const mpz_class& a, const mpz_class& b) { return gcd(a, b); }
inline std::int64_t neg(std::int64_t x) { return -x; }
inline mpz_class neg(const mpz_class& x) { return -x; }
inline mpz_class to_mpz(std::int64_t x) { return mpz_class(static_cast<long>(x)); }
inline mpz_class to_mpz(const mpz_class& x) { return x; }

template <class Z>
struct IntRow {
    std::vector<std::uint32_t> col;
    std::vector<Z> val;
    bool empty() const { return col.empty(); }
    std::size_t size() const { return col.size(); }
};

template <class Z>
void make_primitive(IntRow<Z>& r) {
    if (r.empty()) return;
    Z g = 0;
    for (const auto& x : r.val) {
        g = gcd_of(g, x);
        if (g == 1) break;
    }
    if (g != 1 && !is_zero(g))
        for (auto& x : r.val) x /= g;
}

// out = a*v - b*w, where v and w share the leading column being cancelled
template <class Z>
void combine(const Z& a, const IntRow<Z>& v, const Z& b, const IntRow<Z>& w, IntRow<Z>& out) {
    out.col.clear();
    out.val.clear();
    out.col.reserve(v.size() + w.size());
    out.val.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    const Z zero = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v.col[i] < w.col[j])) {
            out.col.push_back(v.col[i]);
            out.val.push_back(mul(a, v.val[i]));
            ++i;
        } else if (i == v.size() || w.col[j] < v.col[i]) {
            out.col.push_back(w.col[j]);
            out.val.push_back(mul_sub(zero, zero, b, w.val[j]));
            ++j;
        } else {
            Z s = mul_sub(a, v.val[i], b, w.val[j]);
            if (!is_zero(s)) {
                out.col.push_back(v.col[i]);
                out.val.push_back(std::move(s));
            }
            ++i;
            ++j;
        }
    }
}

template <class Z>
class EchelonEngine {
public:
    explicit EchelonEngine(std::size_t n) : n_(n), pivot_row_(n, -1) {}

    template <class W>
    static EchelonEngine from(const EchelonEngine<W>& o) {
        EchelonEngine e(o.n_);
        e.pivot_row_ = o.pivot_row_;
        e.rows_.reserve(o.rows_.size());
        for (const auto& r : o.rows_) {
            IntRow<Z> c;
            c.col = r.col;
            for (const auto& x : r.val) c.val.push_back(Z(to_mpz(x)));
            e.rows_.push_back(std::move(c));
        }
        return e;
    }

    std::size_t rank() const { return rows_.size(); }

    // Eliminates pivot columns from v; stops at the first non-pivot column when
    // `full` is false.
    void reduce(IntRow<Z>& v, bool full) const {
        IntRow<Z> tmp;
        std::size_t k = 0;
        while (k < v.size()) {
            int r = pivot_row_[v.col[k]];
            if (r < 0) {
                if (!full) return;
                ++k;
                continue;
            }
            const IntRow<Z>& row = rows_[static_cast<std::size_t>(r)];
            Z p = row.val[0];
            Z a = v.val[k];
            Z g = gcd_of(p, a);
            if (sign_of(g) < 0) g = neg(g);
            Z pa = p / g, aa = a / g;
            combine(pa, v, aa, row, tmp);
            std::swap(v, tmp);
            make_primitive(v);
        }
    }

    bool insert(IntRow<Z> v) {
        reduce(v, false);
        if (v.empty()) return false;
        if (sign_of(v.val[0]) < 0)
            for (auto& x : v.val) x = neg(x);
        pivot_row_[v.col[0]] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    bool contains(IntRow<Z> v) const {
        reduce(v, true);
        return v.empty();
    }

    std::vector<std::uint32_t> pivots() const {
        std::vector<std::uint32_t> p;
        p.reserve(rows_.size());
        for (const auto& r : rows_) p.push_back(r.col[0]);
        std::sort(p.begin(), p.end());
        return p;
    }

    // Back-substitution from the last pivot upwards. Returns integer rows whose
    // pivot entries are the only nonzero entries in pivot columns.
    std::vector<IntRow<Z>> reduced_rows() const {
        std::vector<std::uint32_t> piv = pivots();
        std::vector<IntRow<Z>> out(rows_.size());
        std::vector<int> done_row(n_, -1);
        IntRow<Z> tmp;
        for (std::size_t t = piv.size(); t-- > 0;) {
            IntRow<Z> v = rows_[static_cast<std::size_t>(pivot_row_[piv[t]])];
            std::size_t k = 1;
            while (k < v.size()) {
                int r = done_row[v.col[k]];
                if (r < 0) {
                    ++k;
                    continue;
                }
                const IntRow<Z>& row = out[static_cast<std::size_t>(r)];
                Z p = row.val[0];
                Z a = v.val[k];
                Z g = gcd_of(p, a);
                if (sign_of(g) < 0) g = neg(g);
                Z pa = p / g, aa = a / g;
                // row's leading column lies strictly right of v's lead, so v's
                // lead survives with factor pa
                combine(pa, v, aa, row, tmp);
                std::swap(v, tmp);
                make_primitive(v);
            }
            if (sign_of(v.val[0]) < 0)
                for (auto& x : v.val) x = neg(x);
            done_row[piv[t]] = static_cast<int>(t);
            out[t] = std::move(v);
        }
        return out;
    }

    std::size_t n_;
    std::vector<int> pivot_row_;
    std::vector<IntRow<Z>> rows_;
};

}  // namespace detail

namespace {

// Clears denominators and content; returns an mpz row.
detail::IntRow<mpz_class> integerize(const SparseVector& v, std::size_t n) {
    detail::IntRow<mpz_class> r;
    if (v.empty()) return r;
    mpz_class l = 1;
    for (const auto& [i, x] : v) {
        if (i >= n) throw std::invalid_argument("vector index exceeds ambient dimension");
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.mpq().get_den_mpz_t());
    }
    std::uint32_t last = 0;
    bool first = true;
    for (const auto& [i, x] : v) {
        if (!first && i <= last) throw std::invalid_argument("sparse vector indices must increase");
        first = false;
        last = i;
        if (x.is_zero()) continue;
        r.col.push_back(i);
        r.val.push_back(x.mpq().get_num() * (l / x.mpq().get_den()));
    }
    detail::make_primitive(r);
    return r;
}

bool fits_small(const detail::IntRow<mpz_class>& r) {
    for (const auto& x : r.val)
        if (!x.fits_slong_p() || x == INT64_MIN) return false;
    return true;
}

detail::IntRow<std::int64_t> to_small(const detail::IntRow<mpz_class>& r) {
    detail::IntRow<std::int64_t> s;
    s.col = r.col;
    s.val.reserve(r.val.size());
    for (const auto& x : r.val) s.val.push_back(x.get_si());
    return s;
}

template <class Z>
std::vector<SparseVector> to_rational_rows(const std::vector<detail::IntRow<Z>>& rows) {
    std::vector<SparseVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        SparseVector v;
        v.reserve(r.size());
        for (std::size_t k = 0; k < r.size(); ++k) v.emplace_back(r.col[k], Rational(detail::to_mpz(r.val[k])));
        out.push_back(std::move(v));
    }
    return out;
}

template <class Z>
std::vector<SparseVector> to_rational_rref(const std::vector<detail::IntRow<Z>>& rows) {
    std::vector<SparseVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        SparseVector v;
        v.reserve(r.size());
        mpz_class p = detail::to_mpz(r.val[0]);
        for (std::size_t k = 0; k < r.size(); ++k) v.emplace_back(r.col[k], Rational(detail::to_mpz(r.val[k]), p));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

Echelon::Echelon(std::size_t ncols)
    : ncols_(ncols), small_(std::make_unique<detail::EchelonEngine<std::int64_t>>(ncols)) {}
Echelon::~Echelon() = default;
Echelon::Echelon(Echelon&&) noexcept = default;
Echelon& Echelon::operator=(Echelon&&) noexcept = default;

Echelon::Echelon(const Echelon& o) : ncols_(o.ncols_) {
    if (o.small_) small_ = std::make_unique<detail::EchelonEngine<std::int64_t>>(*o.small_);
    if (o.big_) big_ = std::make_unique<detail::EchelonEngine<mpz_class>>(*o.big_);
}

Echelon& Echelon::operator=(const Echelon& o) {
    if (this != &o) {
        Echelon tmp(o);
        *this = std::move(tmp);
    }
    return *this;
}

std::size_t Echelon::rank() const { return small_ ? small_->rank() : big_->rank(); }

void Echelon::to_big() {
    big_ = std::make_unique<detail::EchelonEngine<mpz_class>>(
        detail::EchelonEngine<mpz_class>::from(*small_));
    small_.reset();
}

bool Echelon::insert(const SparseVector& v) {
    auto r = integerize(v, ncols_);
    if (r.empty()) return false;
    if (small_ && fits_small(r)) {
        try {
            return small_->insert(to_small(r));
        } catch (const detail::Overflow&) {
        }
    }
    if (small_) to_big();
    return big_->insert(std::move(r));
}

bool Echelon::contains(const SparseVector& v) const {
    auto r = integerize(v, ncols_);
    if (r.empty()) return true;
    if (small_ && fits_small(r)) {
        try {
            return small_->contains(to_small(r));
        } catch (const detail::Overflow&) {
        }
    }
    if (big_) return big_->contains(std::move(r));
    return detail::EchelonEngine<mpz_class>::from(*small_).contains(std::move(r));
}

std::vector<std::uint32_t> Echelon::pivots() const { return small_ ? small_->pivots() : big_->pivots(); }

std::vector<SparseVector> Echelon::rows() const {
    return small_ ? to_rational_rows(small_->rows_) : to_rational_rows(big_->rows_);
}

std::vector<SparseVector> Echelon::rref() const {
    if (small_) {
        try {
            return to_rational_rref(small_->reduced_rows());
        } catch (const detail::Overflow&) {
        }
        return to_rational_rref(detail::EchelonEngine<mpz_class>::from(*small_).reduced_rows());
    }
    return to_rational_rref(big_->reduced_rows());
}

}  // namespace operad
