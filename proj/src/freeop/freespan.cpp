#include "operad/freeop/freespan.hpp"

#include <sstream>
#include <stdexcept>

namespace operad {

namespace {

int g_max_arity = 5;

void symmetric_shapes(unsigned set, std::vector<TreeCode>& out) {
    int lo = __builtin_ctz(set);
    if ((set & (set - 1)) == 0) {
        out.push_back({lo});
        return;
    }
    unsigned rest = set & ~(1u << lo);
    // Left child: any proper subset containing the minimum.
    for (unsigned sub = rest;; sub = (sub - 1) & rest) {
        unsigned left = sub | (1u << lo);
        if (left != set) {
            std::vector<TreeCode> ls, rs;
            symmetric_shapes(left, ls);
            symmetric_shapes(set & ~left, rs);
            for (const auto& l : ls)
                for (const auto& r : rs) out.push_back(make_vertex(0, l, r));
        }
        if (sub == 0) break;
    }
}

void planar_shapes(int lo, int hi, std::vector<TreeCode>& out) {
    if (hi - lo == 1) {
        out.push_back({lo});
        return;
    }
    for (int k = hi - lo - 1; k >= 1; --k) {
        std::vector<TreeCode> ls, rs;
        planar_shapes(lo, lo + k, ls);
        planar_shapes(lo + k, hi, rs);
        for (const auto& l : ls)
            for (const auto& r : rs) out.push_back(make_vertex(0, l, r));
    }
}

}  // namespace

int free_max_arity() { return g_max_arity; }

void set_free_max_arity(int n) {
    if (n < 3 || n > kHardMaxArity)
        throw std::invalid_argument("maximal arity must lie in 3.." + std::to_string(kHardMaxArity));
    g_max_arity = n;
}

std::size_t double_factorial(int n) {
    std::size_t r = 1;
    for (int k = n; k > 1; k -= 2) r *= static_cast<std::size_t>(k);
    return r;
}

std::size_t catalan(int n) {
    std::size_t c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * static_cast<std::size_t>(k) + 1) / (static_cast<std::size_t>(k) + 2);
    return c;
}

std::size_t free_dim(Kind kind, std::size_t d, int n) {
    std::size_t p = 1;
    for (int k = 1; k < n; ++k) p *= d;
    return (kind == Kind::symmetric ? (n == 1 ? 1 : double_factorial(2 * n - 3)) : catalan(n - 1)) * p;
}

FreeSpan::FreeSpan(GenSpace gen, int n) : gen_(std::move(gen)), n_(n), labelings_(1) {
    if (n < 1 || n > g_max_arity)
        throw std::invalid_argument("arity " + std::to_string(n) + " outside 1.." + std::to_string(g_max_arity));
    for (int k = 1; k < n; ++k) labelings_ *= gen_.dim();
    if (gen_.is_symmetric())
        symmetric_shapes((1u << n) - 1, shapes_);
    else
        planar_shapes(0, n, shapes_);
    for (std::size_t s = 0; s < shapes_.size(); ++s) shape_index_.emplace(shapes_[s], s);
}

TreeCode FreeSpan::basis_tree(std::size_t i) const {
    if (i >= dim()) throw std::out_of_range("basis index out of range");
    TreeCode t = shapes_[i / labelings_];
    std::size_t lab = i % labelings_;
    std::size_t d = gen_.dim();
    // Most significant digit belongs to the first vertex in preorder.
    std::vector<int> digits(static_cast<std::size_t>(n_ - 1));
    for (std::size_t k = digits.size(); k-- > 0;) {
        digits[k] = static_cast<int>(lab % d);
        lab /= d;
    }
    std::size_t v = 0;
    for (int& c : t)
        if (!is_leaf(c)) c = vertex_code(digits[v++]);
    return t;
}

std::optional<std::size_t> FreeSpan::index_of(const TreeCode& t) const {
    auto it = shape_index_.find(strip_labels(t));
    if (it == shape_index_.end()) return std::nullopt;
    std::size_t lab = 0;
    for (int c : t)
        if (!is_leaf(c)) {
            std::size_t g = static_cast<std::size_t>(vertex_gen(c));
            if (g >= gen_.dim()) return std::nullopt;
            lab = lab * gen_.dim() + g;
        }
    return it->second * labelings_ + lab;
}

void FreeSpan::canonical_terms(const TreeCode& t, std::size_t& pos, std::vector<std::pair<Rational, TreeCode>>& out,
                               int& minleaf) const {
    int c = t[pos++];
    if (is_leaf(c)) {
        out.push_back({Rational(1), TreeCode{c}});
        minleaf = c;
        return;
    }
    std::vector<std::pair<Rational, TreeCode>> ls, rs;
    int ml, mr;
    canonical_terms(t, pos, ls, ml);
    canonical_terms(t, pos, rs, mr);
    int mu = vertex_gen(c);
    minleaf = std::min(ml, mr);
    if (ml < mr) {
        for (const auto& [a, l] : ls)
            for (const auto& [b, r] : rs) out.push_back({a * b, make_vertex(mu, l, r)});
        return;
    }
    // mu(L,R) = (mu^(12))(R,L) = sum_k A[k][mu] k(R,L)
    const Matrix& A = gen_.action12();
    for (std::size_t k = 0; k < gen_.dim(); ++k) {
        const Rational& s = A(k, static_cast<std::size_t>(mu));
        if (s.is_zero()) continue;
        for (const auto& [a, l] : ls)
            for (const auto& [b, r] : rs) out.push_back({s * a * b, make_vertex(static_cast<int>(k), r, l)});
    }
}

SparseVector FreeSpan::expand(const TreeCode& t) const {
    if (tree_arity(t) != n_ || !is_well_formed(t)) throw std::invalid_argument("tree has wrong arity or labels");
    if (!gen_.is_symmetric()) {
        int next = 0;
        for (int c : t)
            if (is_leaf(c) && c != next++) throw std::invalid_argument("planar tree leaves must be in order");
        auto i = index_of(t);
        if (!i) throw std::invalid_argument("tree decorated by unknown generator");
        return {{static_cast<std::uint32_t>(*i), Rational(1)}};
    }
    std::vector<std::pair<Rational, TreeCode>> terms;
    std::size_t pos = 0;
    int m;
    canonical_terms(t, pos, terms, m);
    std::vector<SparseEntry> acc;
    acc.reserve(terms.size());
    for (auto& [a, c] : terms) {
        auto i = index_of(c);
        if (!i) throw std::invalid_argument("tree decorated by unknown generator");
        acc.emplace_back(static_cast<std::uint32_t>(*i), std::move(a));
    }
    return make_sparse(std::move(acc));
}

SparseVector FreeSpan::expand(const std::vector<std::pair<Rational, TreeCode>>& terms) const {
    std::vector<SparseEntry> acc;
    for (const auto& [a, t] : terms) {
        if (a.is_zero()) continue;
        for (auto& [i, x] : expand(t)) acc.emplace_back(i, a * x);
    }
    return make_sparse(std::move(acc));
}

SparseVector FreeSpan::act(const SparseVector& v, const Perm& sigma) const {
    if (!gen_.is_symmetric()) throw std::invalid_argument("no symmetric group action on a regular free span");
    if (sigma.size() != n_) throw std::invalid_argument("permutation degree does not match arity");
    std::vector<SparseEntry> acc;
    for (const auto& [i, a] : v)
        for (auto& [j, x] : expand(relabel_leaves(basis_tree(i), sigma.images()))) acc.emplace_back(j, a * x);
    return make_sparse(std::move(acc));
}

std::string FreeSpan::vector_str(const SparseVector& v) const {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, a] : v) {
        if (!first) os << (a.sign() < 0 ? " - " : " + ");
        else if (a.sign() < 0) os << "-";
        first = false;
        Rational m = a.sign() < 0 ? -a : a;
        if (!m.is_one()) os << m << "*";
        os << basis_str(i);
    }
    return os.str();
}

SparseVector partial_compose(const FreeSpan& target, const FreeSpan& xs, const SparseVector& x, int i,
                             const FreeSpan& ys, const SparseVector& y) {
    int p = xs.arity(), q = ys.arity();
    if (i < 0 || i >= p) throw std::out_of_range("composition slot out of range");
    if (target.arity() != p + q - 1) throw std::invalid_argument("target arity must be p+q-1");
    if (!(xs.gen() == ys.gen()) || !(xs.gen() == target.gen()))
        throw std::invalid_argument("composing elements over different generating spaces");
    std::vector<int> xmap(static_cast<std::size_t>(p)), ymap(static_cast<std::size_t>(q));
    const int hole = p + q;  // placeholder label for the slot being filled
    for (int l = 0; l < p; ++l) xmap[static_cast<std::size_t>(l)] = l < i ? l : (l == i ? hole : l + q - 1);
    for (int l = 0; l < q; ++l) ymap[static_cast<std::size_t>(l)] = l + i;
    std::vector<SparseEntry> acc;
    for (const auto& [bx, a] : x) {
        TreeCode tx = relabel_leaves(xs.basis_tree(bx), xmap);
        for (const auto& [by, b] : y) {
            TreeCode ty = relabel_leaves(ys.basis_tree(by), ymap);
            for (auto& [j, c] : target.expand(substitute_leaf(tx, hole, ty))) acc.emplace_back(j, a * b * c);
        }
    }
    return make_sparse(std::move(acc));
}

}  // namespace operad
