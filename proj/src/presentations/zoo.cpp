#include "operad/presentations/zoo.hpp"

#include "operad/manin/products.hpp"
#include "operad/presentations/expr.hpp"

#include <map>
#include <stdexcept>

namespace operad {

std::vector<std::string> v_relations_as() {
    std::vector<std::string> out;
    for (int i = 1; i <= 11; i += 2) out.push_back("v" + std::to_string(i) + " - v" + std::to_string(i + 1));
    return out;
}

std::vector<std::string> v_relations_prelie() {
    std::vector<std::string> out;
    for (int i : {1, 5, 9})
        out.push_back("v" + std::to_string(i) + " - v" + std::to_string(i + 1) + " + v" + std::to_string(i + 2) +
                      " - v" + std::to_string(i + 3));
    return out;
}

std::vector<std::string> v_relations_perm() {
    std::vector<std::string> out;
    for (int i : {1, 5, 9})
        for (int j = i; j < i + 3; ++j) out.push_back("v" + std::to_string(j) + " - v" + std::to_string(j + 1));
    return out;
}

namespace {

ZooEntry from_text(std::string name, std::string summary, GenSpace gen, std::vector<std::string> text,
                   std::vector<std::size_t> dims, bool v_coords = false) {
    std::vector<SparseVector> vs;
    for (const auto& t : text) vs.push_back(v_coords ? parse_v_relation(gen, t) : parse_relation(gen, t));
    ZooEntry e;
    e.name = name;
    e.summary = std::move(summary);
    e.pres = QuadPresentation(std::move(name), std::move(gen), vs);
    e.pres.set_provenance("zoo");
    e.expected_dims = std::move(dims);
    e.relation_text = std::move(text);
    e.v_coordinates = v_coords;
    return e;
}

ZooEntry derived(std::string name, std::string summary, QuadPresentation p, std::vector<std::size_t> dims) {
    ZooEntry e;
    e.name = name;
    e.summary = std::move(summary);
    p.set_name(std::move(name));
    p.set_provenance("zoo");
    e.pres = std::move(p);
    e.expected_dims = std::move(dims);
    return e;
}

struct Zoo {
    std::vector<std::string> names;
    std::map<std::string, ZooEntry> entries;

    void add(ZooEntry e) {
        names.push_back(e.name);
        std::string key = e.name;
        entries.emplace(std::move(key), std::move(e));
    }
};

Zoo build_zoo() {
    Zoo z;
    const GenSpace k2 = GenSpace::regular_action({"mu"});
    const GenSpace com = GenSpace::trivial("mu");
    const GenSpace lie = GenSpace::sign("b");

    z.add(from_text("Com", "commutative associative", com, {"mu(mu(x,y),z) - mu(mu(y,z),x)", "mu(mu(y,z),x) - mu(mu(z,x),y)"},
                    {1, 1, 1, 1}));
    z.add(from_text("Lie", "Lie brackets", lie, {"b(b(x,y),z) + b(b(y,z),x) + b(b(z,x),y)"}, {1, 1, 2, 6}));
    z.add(from_text("Nil", "skew-symmetric operation with vanishing compositions", GenSpace::sign("nu"),
                    {"nu(nu(x,y),z)", "nu(nu(y,z),x)", "nu(nu(z,x),y)"}, {1, 1, 0, 0}));
    z.add(from_text("As", "associative (non-symmetric)", GenSpace::regular({"mu"}), {"mu(mu(x,y),z) - mu(x,mu(y,z))"},
                    {1, 1, 1, 1}));
    z.add(from_text("Perm", "permutative", k2, v_relations_perm(), {1, 2, 3, 4}, true));
    z.add(from_text("PreLie", "right pre-Lie", k2, v_relations_prelie(), {1, 2, 9, 64}, true));

    const GenSpace zinb = GenSpace::regular_action({"star"});
    z.add(from_text("Zinb", "Zinbiel", zinb,
                    {"star(star(x,y),z) - star(star(x,z),y)", "star(star(x,z),y) - star(x,star(z,y)) - star(x,star(y,z))"},
                    {1, 2, 6, 24}));

    const GenSpace dias = GenSpace::regular({"dashv", "vdash"});
    z.add(from_text("Dias", "diassociative (non-symmetric)", dias,
                    {"dashv(dashv(x,y),z) - dashv(x,dashv(y,z))", "dashv(x,dashv(y,z)) - dashv(x,vdash(y,z))",
                     "dashv(vdash(x,y),z) - vdash(x,dashv(y,z))", "vdash(dashv(x,y),z) - vdash(vdash(x,y),z)",
                     "vdash(vdash(x,y),z) - vdash(x,vdash(y,z))"},
                    {1, 2, 3, 4}));

    const GenSpace dend = GenSpace::regular({"prec", "succ"});
    z.add(from_text("Dend", "dendriform (non-symmetric)", dend,
                    {"prec(prec(x,y),z) - prec(x,prec(y,z)) - prec(x,succ(y,z))", "prec(succ(x,y),z) - succ(x,prec(y,z))",
                     "succ(prec(x,y),z) + succ(succ(x,y),z) - succ(x,succ(y,z))"},
                    {1, 2, 5, 14}));

    // x*y = prec(x,y) + succ(x,y)
    const GenSpace plp = GenSpace::regular_action({"prec", "succ"});
    z.add(from_text("PreLiePerm", "five-relation operad on prec, succ", plp,
                    {"prec(prec(x,y),z) - prec(x,prec(y,z)) - prec(x,succ(y,z))",
                     "prec(succ(x,y),z) - succ(x,prec(y,z))",
                     "succ(prec(x,y),z) + succ(succ(x,y),z) - succ(x,succ(y,z))",
                     "prec(x,prec(y,z)) + prec(x,succ(y,z)) - prec(x,prec(z,y)) - prec(x,succ(z,y))",
                     "succ(x,prec(y,z)) - succ(x,succ(z,y))"},
                    {1, 4, 21, 136}));

    const GenSpace diamond = GenSpace::regular_action({"diamond"});
    z.add(from_text("PreLieNilBlack", "right-nilpotent operation with symmetric right composition", diamond,
                    {"diamond(diamond(x,y),z)", "diamond(x,diamond(y,z)) - diamond(x,diamond(z,y))"}, {1, 2, 3, 0}));

    // Derived entries.
    {
        const QuadPresentation& zb = z.entries.at("Zinb").pres;
        QuadPresentation d = koszul_dual(zb);
        GenSpace g = GenSpace::symmetric({"lb", "lb'"}, d.gen().action12());
        z.add(derived("Leib", "Leibniz (Koszul dual of Zinb)", QuadPresentation("Leib", g, d.relations()),
                      {1, 2, 6, 24}));
    }
    {
        const QuadPresentation& de = z.entries.at("Dend").pres;
        z.add(derived("Quad", "quadri-algebras (black square of Dend with itself)", bsquare(de, de), {1, 4, 23, 156}));
    }

    // External relations (triassociative and tridendriform), optional.
    auto external = [&](ZooEntry e) {
        e.external = true;
        z.add(std::move(e));
    };
    external(from_text("Trias", "triassociative (non-symmetric)", GenSpace::regular({"dashv", "vdash", "perp"}),
                       {"dashv(dashv(x,y),z) - dashv(x,dashv(y,z))", "dashv(dashv(x,y),z) - dashv(x,vdash(y,z))",
                        "dashv(vdash(x,y),z) - vdash(x,dashv(y,z))", "vdash(dashv(x,y),z) - vdash(x,vdash(y,z))",
                        "vdash(vdash(x,y),z) - vdash(x,vdash(y,z))", "dashv(dashv(x,y),z) - dashv(x,perp(y,z))",
                        "dashv(perp(x,y),z) - perp(x,dashv(y,z))", "perp(dashv(x,y),z) - perp(x,vdash(y,z))",
                        "perp(vdash(x,y),z) - vdash(x,perp(y,z))", "vdash(perp(x,y),z) - vdash(x,vdash(y,z))",
                        "perp(perp(x,y),z) - perp(x,perp(y,z))"},
                       {1, 3, 7, 15}));
    // x*y = prec(x,y) + succ(x,y) + dot(x,y)
    external(from_text("TriDend", "tridendriform (non-symmetric)", GenSpace::regular({"prec", "succ", "dot"}),
                       {"prec(prec(x,y),z) - prec(x,prec(y,z)) - prec(x,succ(y,z)) - prec(x,dot(y,z))",
                        "prec(succ(x,y),z) - succ(x,prec(y,z))",
                        "succ(prec(x,y),z) + succ(succ(x,y),z) + succ(dot(x,y),z) - succ(x,succ(y,z))",
                        "dot(succ(x,y),z) - succ(x,dot(y,z))", "dot(prec(x,y),z) - dot(x,succ(y,z))",
                        "prec(dot(x,y),z) - dot(x,prec(y,z))", "dot(dot(x,y),z) - dot(x,dot(y,z))"},
                       {1, 3, 11, 45}));
    return z;
}

const Zoo& zoo() {
    static const Zoo z = build_zoo();
    return z;
}

}  // namespace

const std::vector<std::string>& zoo_names() { return zoo().names; }

bool zoo_has(const std::string& name) { return zoo().entries.count(name) > 0; }

const ZooEntry& zoo_entry(const std::string& name) {
    auto it = zoo().entries.find(name);
    if (it == zoo().entries.end()) {
        std::string list;
        for (const auto& n : zoo().names) list += (list.empty() ? "" : ", ") + n;
        throw std::invalid_argument("unknown zoo entry '" + name + "'; available: " + list);
    }
    return it->second;
}

const QuadPresentation& zoo_get(const std::string& name) { return zoo_entry(name).pres; }

}  // namespace operad
