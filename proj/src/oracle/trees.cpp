#include "operad/oracle/trees.hpp"

#include <set>

namespace operad::oracle {

namespace {

std::vector<std::string> planar(int n, int d) {
    if (n == 1) return {"x"};
    std::vector<std::string> out;
    for (int k = 1; k < n; ++k)
        for (const auto& l : planar(k, d))
            for (const auto& r : planar(n - k, d))
                for (int g = 0; g < d; ++g) out.push_back("g" + std::to_string(g) + "(" + l + "," + r + ")");
    return out;
}

// Trees on the given leaf set; the canonical form puts the child with the smallest leaf first.
std::vector<std::string> abstract(const std::vector<int>& leaves, int d) {
    if (leaves.size() == 1) return {std::to_string(leaves[0])};
    std::vector<std::string> out;
    std::size_t n = leaves.size();
    // subsets containing leaves[0] (the smallest) form the first child
    for (std::size_t mask = 1; mask < (std::size_t{1} << n) - 1; ++mask) {
        if ((mask & 1) == 0) continue;
        std::vector<int> a, b;
        for (std::size_t k = 0; k < n; ++k) ((mask >> k) & 1 ? a : b).push_back(leaves[k]);
        for (const auto& l : abstract(a, d))
            for (const auto& r : abstract(b, d))
                for (int g = 0; g < d; ++g) out.push_back("g" + std::to_string(g) + "(" + l + "," + r + ")");
    }
    return out;
}

}  // namespace

std::vector<std::string> planar_binary_trees(int n) {
    std::vector<std::string> out;
    for (const auto& t : planar(n, 1)) {
        std::string s;
        for (char c : t)
            if (c != 'g' && c != '0') s.push_back(c);
        out.push_back(s);
    }
    return out;
}

std::vector<std::string> decorated_planar_trees(int n, int d) { return planar(n, d); }

std::vector<std::string> decorated_abstract_trees(int n, int d) {
    std::vector<int> leaves;
    for (int k = 1; k <= n; ++k) leaves.push_back(k);
    auto v = abstract(leaves, d);
    std::set<std::string> uniq(v.begin(), v.end());
    return {uniq.begin(), uniq.end()};
}

}  // namespace operad::oracle
