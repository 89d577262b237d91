#include "operad/freeop/ideal.hpp"

#include "operad/freeop/weight2.hpp"

#include <deque>
#include <functional>
#include <stdexcept>

namespace operad {

namespace {

using Graft = std::function<TreeCode(const TreeCode&)>;

SparseVector combine_rows(const SparseVector& x, const std::vector<SparseVector>& images) {
    std::vector<SparseEntry> acc;
    for (const auto& [t, a] : x)
        for (const auto& [j, b] : images[t]) acc.emplace_back(j, a * b);
    return make_sparse(std::move(acc));
}

// The grafts that carry a basis of I(n-1) to a spanning set of I(n).
std::vector<Graft> grafts(const GenSpace& gen, int n) {
    std::vector<Graft> out;
    const int hole = n + 1;
    const int d = static_cast<int>(gen.dim());
    if (gen.is_symmetric()) {
        for (int g = 0; g < d; ++g)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    std::vector<int> map;
                    for (int l = 0; l < n; ++l)
                        if (l != a && l != b) map.push_back(l);
                    map.push_back(hole);  // old leaf n-2
                    TreeCode cherry = make_vertex(g, {a}, {b});
                    out.push_back([map, cherry, hole](const TreeCode& t) {
                        return substitute_leaf(relabel_leaves(t, map), hole, cherry);
                    });
                }
        for (int g = 0; g < d; ++g)
            for (int k = 0; k < n; ++k) {
                std::vector<int> map;
                for (int l = 0; l < n; ++l)
                    if (l != k) map.push_back(l);
                out.push_back([map, g, k](const TreeCode& t) { return make_vertex(g, relabel_leaves(t, map), {k}); });
            }
        return out;
    }
    for (int g = 0; g < d; ++g)
        for (int i = 0; i < n - 1; ++i) {
            std::vector<int> map;
            for (int l = 0; l < n - 1; ++l) map.push_back(l < i ? l : (l == i ? hole : l + 1));
            TreeCode cherry = make_vertex(g, {i}, {i + 1});
            out.push_back([map, cherry, hole](const TreeCode& t) {
                return substitute_leaf(relabel_leaves(t, map), hole, cherry);
            });
        }
    for (int g = 0; g < d; ++g) {
        out.push_back([g, n](const TreeCode& t) { return make_vertex(g, t, {n - 1}); });
        std::vector<int> shift;
        for (int l = 0; l < n - 1; ++l) shift.push_back(l + 1);
        out.push_back([g, shift](const TreeCode& t) { return make_vertex(g, {0}, relabel_leaves(t, shift)); });
    }
    return out;
}

}  // namespace

IdealTower::IdealTower(GenSpace gen, const Subspace& relations_w2, int nmax, bool saturate)
    : gen_(std::move(gen)), nmax_(nmax) {
    if (nmax < 1 || nmax > free_max_arity())
        throw std::invalid_argument("arity " + std::to_string(nmax) + " outside 1.." +
                                    std::to_string(free_max_arity()));
    if (relations_w2.ambient_dim() != weight2_dim(gen_))
        throw std::invalid_argument("relations do not live in the weight-two space of the generators");
    for (int n = 1; n <= nmax; ++n) {
        spans_.emplace_back(gen_, n);
        ech_.emplace_back(spans_.back().dim());
        added_.push_back(0);
    }
    if (nmax >= 3) {
        Matrix t3 = weight2_to_tree3(gen_);
        for (const auto& r : relations_w2.basis()) ech_[2].insert(t3.apply(r));
    }
    for (int n = 4; n <= nmax; ++n) build(n, saturate);
}

const FreeSpan& IdealTower::free_span(int n) const {
    if (n < 1 || n > nmax_) throw std::out_of_range("arity outside the computed range");
    return spans_[static_cast<std::size_t>(n - 1)];
}

const Echelon& IdealTower::echelon(int n) const {
    if (n < 1 || n > nmax_) throw std::out_of_range("arity outside the computed range");
    return ech_[static_cast<std::size_t>(n - 1)];
}

void IdealTower::build(int n, bool saturate) {
    const FreeSpan& prev = spans_[static_cast<std::size_t>(n - 2)];
    const FreeSpan& cur = spans_[static_cast<std::size_t>(n - 1)];
    const Echelon& below = ech_[static_cast<std::size_t>(n - 2)];
    Echelon& e = ech_[static_cast<std::size_t>(n - 1)];
    if (below.rank() == 0) return;
    if (below.rank() == prev.dim()) {
        // A full ideal stays full: every tree contains a full subtree of arity n-1.
        for (std::size_t i = 0; i < cur.dim(); ++i) e.insert({{static_cast<std::uint32_t>(i), Rational(1)}});
        return;
    }
    std::vector<Graft> gs = grafts(gen_, n);
    std::vector<std::vector<SparseVector>> images(gs.size(), std::vector<SparseVector>(prev.dim()));
    for (std::size_t k = 0; k < gs.size(); ++k)
        for (std::size_t t = 0; t < prev.dim(); ++t) images[k][t] = cur.expand(gs[k](prev.basis_tree(t)));

    std::vector<SparseVector> basis = below.rows();
    for (const auto& x : basis)
        for (const auto& img : images) {
            if (e.rank() == cur.dim()) return;
            e.insert(combine_rows(x, img));
        }
    if (!saturate || !gen_.is_symmetric()) return;

    std::vector<std::vector<SparseVector>> moves(static_cast<std::size_t>(n - 1),
                                                 std::vector<SparseVector>(cur.dim()));
    for (int k = 0; k + 1 < n; ++k) {
        Perm s = Perm::transposition(n, k, k + 1);
        for (std::size_t i = 0; i < cur.dim(); ++i)
            moves[static_cast<std::size_t>(k)][i] = cur.expand(relabel_leaves(cur.basis_tree(i), s.images()));
    }
    std::deque<SparseVector> queue;
    for (auto& r : e.rows()) queue.push_back(std::move(r));
    while (!queue.empty() && e.rank() < cur.dim()) {
        SparseVector r = std::move(queue.front());
        queue.pop_front();
        for (const auto& m : moves) {
            SparseVector w = combine_rows(r, m);
            if (e.insert(w)) {
                ++added_[static_cast<std::size_t>(n - 1)];
                queue.push_back(std::move(w));
            }
        }
    }
}

Subspace ideal_span(const GenSpace& gen, const Subspace& relations_w2, int n) {
    return IdealTower(gen, relations_w2, n).ideal(n);
}

}  // namespace operad
