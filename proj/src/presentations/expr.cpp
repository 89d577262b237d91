#include "operad/presentations/expr.hpp"

#include "operad/freeop/freespan.hpp"
#include "operad/freeop/weight2.hpp"

#include <cctype>
#include <stdexcept>

namespace operad {

const VEntry kVTable[12] = {
    {kCompI, 0, 0},   {kCompII, 1, 0}, {kCompII, 1, 1},  {kCompIII, 0, 1},
    {kCompIII, 0, 0}, {kCompI, 1, 0},  {kCompI, 1, 1},   {kCompII, 0, 1},
    {kCompII, 0, 0},  {kCompIII, 1, 0}, {kCompIII, 1, 1}, {kCompI, 0, 1},
};

namespace {

class Parser {
public:
    Parser(const GenSpace& g, const std::string& s) : g_(g), s_(s) {}

    std::vector<std::pair<Rational, TreeCode>> combination() {
        std::vector<std::pair<Rational, TreeCode>> out;
        skip();
        bool first = true;
        while (pos_ < s_.size()) {
            Rational sign(1);
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Rational coeff = sign;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= number();
                skip();
                if (peek() == '*') {
                    ++pos_;
                    skip();
                }
            }
            TreeCode t = term();
            out.emplace_back(coeff, std::move(t));
            skip();
        }
        if (out.empty()) fail("empty expression");
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("relation '" + s_ + "': " + what + " at position " + std::to_string(pos_));
    }
    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
        skip();
    }
    Rational number() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
        return Rational::parse(s_.substr(start, pos_ - start));
    }
    std::string ident() {
        std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') fail("expected a name");
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '\'') ++pos_;
        return s_.substr(start, pos_ - start);
    }
    TreeCode term() {
        skip();
        std::string name = ident();
        skip();
        if (peek() != '(') {
            static const char* vars[] = {"x", "y", "z"};
            for (int i = 0; i < 3; ++i)
                if (name == vars[i] || name == "x" + std::to_string(i + 1)) return {i};
            fail("unknown variable '" + name + "'");
        }
        int gen = -1;
        for (std::size_t i = 0; i < g_.dim(); ++i)
            if (g_.names()[i] == name) gen = static_cast<int>(i);
        if (gen < 0) fail("unknown operation '" + name + "'");
        expect('(');
        TreeCode l = term();
        expect(',');
        TreeCode r = term();
        skip();
        expect(')');
        return make_vertex(gen, l, r);
    }

    const GenSpace& g_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::pair<Rational, TreeCode>> parse_tree_combination(const GenSpace& g, const std::string& text) {
    auto terms = Parser(g, text).combination();
    for (const auto& [c, t] : terms)
        if (tree_arity(t) != 3 || !is_well_formed(t))
            throw std::invalid_argument("relation '" + text + "': every monomial must use x, y, z exactly once");
    return terms;
}

SparseVector parse_relation(const GenSpace& g, const std::string& text) {
    FreeSpan f3(g, 3);
    SparseVector t = f3.expand(parse_tree_combination(g, text));
    if (!g.is_symmetric()) return t;
    return tree3_to_weight2(g).apply(t);
}

SparseVector parse_v_relation(const GenSpace& g, const std::string& text) {
    if (!g.is_symmetric() || g.dim() != 2 || g.action12() != GenSpace::regular_action({"mu"}).action12())
        throw std::invalid_argument("v-coordinates need the regular S2-module k[S2] as generators");
    std::vector<SparseEntry> acc;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    while (pos < text.size()) {
        Rational sign(1);
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
            skip();
        }
        if (pos >= text.size() || text[pos] != 'v') throw std::invalid_argument("v-relation '" + text + "': expected v<i>");
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("v-relation '" + text + "': missing index");
        int i = std::stoi(text.substr(start, pos - start));
        if (i < 1 || i > 12) throw std::invalid_argument("v-relation '" + text + "': index outside 1..12");
        const VEntry& e = kVTable[i - 1];
        acc.emplace_back(weight2_index(g, e.comp, e.upper, e.lower), sign);
        skip();
    }
    return make_sparse(std::move(acc));
}

}  // namespace operad
