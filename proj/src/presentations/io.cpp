#include "operad/presentations/io.hpp"

#include "operad/freeop/weight2.hpp"
#include "operad/presentations/zoo.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace operad {

using nlohmann::json;

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational string, got " + j.dump());
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw std::invalid_argument("matrix row must be an array");
        std::vector<Rational> row;
        for (const auto& x : r) row.push_back(rational_from_json(x));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix has no rows");
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw std::invalid_argument("matrix rows differ in length");
    return Matrix::from_rows(rows);
}

json presentation_to_json(const QuadPresentation& p) {
    const GenSpace& g = p.gen();
    json gen = {{"dim", g.dim()}, {"names", g.names()}};
    if (g.is_symmetric()) gen["action12"] = matrix_to_json(g.action12());
    json rels = json::array();
    for (const auto& r : p.relations().basis()) {
        json terms = json::array();
        for (const auto& [i, c] : r) {
            Weight2Index w = weight2_decode(g, i);
            terms.push_back({{"comp", comp_name(g.kind(), w.comp)},
                             {"lower", w.lower},
                             {"upper", w.upper},
                             {"coeff", rational_to_json(c)}});
        }
        rels.push_back(std::move(terms));
    }
    return {{"name", p.name()}, {"kind", kind_name(g.kind())}, {"generators", gen}, {"relations", rels}};
}

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

int parse_comp(Kind k, const std::string& s) {
    int n = k == Kind::symmetric ? 3 : 2;
    for (int c = 0; c < n; ++c)
        if (s == comp_name(k, c)) return c;
    throw std::invalid_argument("unknown composition type '" + s + "' for " + kind_name(k) + " generators");
}

}  // namespace

QuadPresentation presentation_from_json(const json& j) {
    try {
        std::string name = field(j, "name").get<std::string>();
        Kind kind = parse_kind(field(j, "kind").get<std::string>());
        const json& gj = field(j, "generators");
        auto dim = field(gj, "dim").get<std::size_t>();
        auto names = field(gj, "names").get<std::vector<std::string>>();
        if (names.size() != dim) throw std::invalid_argument("generator names do not match dim");
        GenSpace g = kind == Kind::symmetric ? GenSpace::symmetric(names, matrix_from_json(field(gj, "action12")))
                                             : GenSpace::regular(names);
        std::vector<SparseVector> vs;
        for (const auto& rj : field(j, "relations")) {
            std::vector<SparseEntry> acc;
            for (const auto& t : rj) {
                int comp = parse_comp(kind, field(t, "comp").get<std::string>());
                auto lower = field(t, "lower").get<std::size_t>();
                auto upper = field(t, "upper").get<std::size_t>();
                if (lower >= dim || upper >= dim) throw std::invalid_argument("relation label out of range");
                acc.emplace_back(weight2_index(g, comp, upper, lower), rational_from_json(field(t, "coeff")));
            }
            vs.push_back(make_sparse(std::move(acc)));
        }
        QuadPresentation p(name, g, vs);
        if (j.contains("provenance")) p.set_provenance(j.at("provenance").get<std::string>());
        return p;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed presentation document: ") + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
}

QuadPresentation load_presentation(const std::string& ref) {
    if (ref.rfind("zoo:", 0) == 0) return zoo_get(ref.substr(4));
    return presentation_from_json(read_json_file(ref));
}

Matrix load_gen_map(const std::string& path) {
    json j = read_json_file(path);
    return matrix_from_json(field(j, "gen_map"));
}

}  // namespace operad
