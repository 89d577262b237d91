#include "operad/freeop/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace operad {

std::size_t subtree_end(const TreeCode& t, std::size_t pos) {
    std::size_t need = 1;
    while (need > 0) {
        if (pos >= t.size()) throw std::invalid_argument("truncated tree code");
        need += is_leaf(t[pos]) ? -1 : 1;
        ++pos;
    }
    return pos;
}

int tree_arity(const TreeCode& t) {
    return static_cast<int>(std::count_if(t.begin(), t.end(), [](int c) { return is_leaf(c); }));
}

int min_leaf(const TreeCode& t, std::size_t pos) {
    std::size_t end = subtree_end(t, pos);
    int m = -1;
    for (std::size_t i = pos; i < end; ++i)
        if (is_leaf(t[i]) && (m < 0 || t[i] < m)) m = t[i];
    return m;
}

bool is_well_formed(const TreeCode& t) {
    if (t.empty()) return false;
    try {
        if (subtree_end(t, 0) != t.size()) return false;
    } catch (const std::invalid_argument&) {
        return false;
    }
    std::vector<int> leaves;
    for (int c : t)
        if (is_leaf(c)) leaves.push_back(c);
    std::sort(leaves.begin(), leaves.end());
    for (std::size_t i = 0; i < leaves.size(); ++i)
        if (leaves[i] != static_cast<int>(i)) return false;
    return true;
}

TreeCode relabel_leaves(const TreeCode& t, const std::vector<int>& map) {
    TreeCode out = t;
    for (int& c : out)
        if (is_leaf(c)) c = map[static_cast<std::size_t>(c)];
    return out;
}

TreeCode substitute_leaf(const TreeCode& t, int leaf, const TreeCode& sub) {
    TreeCode out;
    out.reserve(t.size() + sub.size());
    for (int c : t) {
        if (c == leaf)
            out.insert(out.end(), sub.begin(), sub.end());
        else
            out.push_back(c);
    }
    return out;
}

TreeCode make_vertex(int gen, const TreeCode& left, const TreeCode& right) {
    TreeCode out;
    out.reserve(1 + left.size() + right.size());
    out.push_back(vertex_code(gen));
    out.insert(out.end(), left.begin(), left.end());
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

TreeCode strip_labels(const TreeCode& t) {
    TreeCode out = t;
    for (int& c : out)
        if (!is_leaf(c)) c = vertex_code(0);
    return out;
}

std::vector<int> vertex_labels(const TreeCode& t) {
    std::vector<int> out;
    for (int c : t)
        if (!is_leaf(c)) out.push_back(vertex_gen(c));
    return out;
}

namespace {

std::string str_at(const TreeCode& t, std::size_t& pos, const std::vector<std::string>& names) {
    int c = t[pos++];
    if (is_leaf(c)) return std::to_string(c + 1);
    std::string g = static_cast<std::size_t>(vertex_gen(c)) < names.size()
                        ? names[static_cast<std::size_t>(vertex_gen(c))]
                        : "g" + std::to_string(vertex_gen(c));
    std::string l = str_at(t, pos, names);
    std::string r = str_at(t, pos, names);
    return g + "(" + l + "," + r + ")";
}

}  // namespace

std::string tree_str(const TreeCode& t, const std::vector<std::string>& names) {
    std::size_t pos = 0;
    return str_at(t, pos, names);
}

}  // namespace operad
