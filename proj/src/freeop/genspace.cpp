#include "operad/freeop/genspace.hpp"

#include <stdexcept>

namespace operad {

const char* kind_name(Kind k) { return k == Kind::symmetric ? "symmetric" : "regular"; }

Kind parse_kind(const std::string& s) {
    if (s == "symmetric") return Kind::symmetric;
    if (s == "regular") return Kind::regular;
    throw std::invalid_argument("unknown kind '" + s + "'");
}

GenSpace GenSpace::symmetric(std::vector<std::string> names, Matrix action12) {
    if (names.empty()) throw std::invalid_argument("generating space must have dimension at least 1");
    if (action12.rows() != names.size() || action12.cols() != names.size())
        throw std::invalid_argument("action12 must be a square matrix of the generator dimension");
    if (action12 * action12 != Matrix::identity(names.size()))
        throw std::invalid_argument("action12 is not an involution");
    GenSpace g;
    g.kind_ = Kind::symmetric;
    g.names_ = std::move(names);
    g.action12_ = std::move(action12);
    return g;
}

GenSpace GenSpace::regular(std::vector<std::string> names) {
    if (names.empty()) throw std::invalid_argument("generating space must have dimension at least 1");
    GenSpace g;
    g.kind_ = Kind::regular;
    g.names_ = std::move(names);
    return g;
}

GenSpace GenSpace::trivial(const std::string& name) { return symmetric({name}, Matrix::identity(1)); }

GenSpace GenSpace::sign(const std::string& name) { return symmetric({name}, Matrix::identity(1).scaled(-1)); }

GenSpace GenSpace::regular_action(const std::vector<std::string>& names) {
    std::vector<std::string> all;
    Matrix a(2 * names.size(), 2 * names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        all.push_back(names[i]);
        all.push_back(names[i] + "'");
        a(2 * i, 2 * i + 1) = 1;
        a(2 * i + 1, 2 * i) = 1;
    }
    return symmetric(std::move(all), std::move(a));
}

std::size_t GenSpace::index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw std::invalid_argument("unknown generator '" + name + "'");
}

GenSpace dual_genspace(const GenSpace& g) {
    std::vector<std::string> names;
    for (const auto& n : g.names()) names.push_back(n + "*");
    if (!g.is_symmetric()) return GenSpace::regular(std::move(names));
    return GenSpace::symmetric(std::move(names), g.action12().transpose().scaled(-1));
}

GenSpace tensor_genspace(const GenSpace& v, const GenSpace& w, int twist) {
    if (v.kind() != w.kind()) throw std::invalid_argument("tensor of generating spaces of different kinds");
    std::vector<std::string> names;
    for (const auto& a : v.names())
        for (const auto& b : w.names()) names.push_back(a + "@" + b);
    if (!v.is_symmetric()) return GenSpace::regular(std::move(names));
    return GenSpace::symmetric(std::move(names), kron(v.action12(), w.action12()).scaled(twist));
}

GenSpace symmetrize_genspace(const GenSpace& g) {
    if (g.is_symmetric()) throw std::invalid_argument("generating space is already symmetric");
    return GenSpace::regular_action(g.names());
}

}  // namespace operad
