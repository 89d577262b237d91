#include "operad/defcomplex/convolution.hpp"
#include "operad/manin/checks.hpp"
#include "operad/manin/products.hpp"
#include "operad/presentations/expr.hpp"
#include "operad/presentations/io.hpp"
#include "operad/presentations/zoo.hpp"
#include "operad/series/gk.hpp"
#include "operad/suite/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace operad;
using nlohmann::json;

namespace {

constexpr int kInputError = 1;
constexpr int kMathFailure = 2;

struct Options {
    bool json = false;
    int max_arity = 4;
    bool max_arity_set = false;
    int order = 6;
    std::string out;
    std::string expect;
    std::string map;
};

// Collected output: human text or a JSON document, written to stdout or --out.
struct Output {
    const Options& opt;
    std::ostringstream text;
    json doc = json::object();

    void emit() const {
        std::string s = opt.json ? doc.dump(2) + "\n" : text.str();
        if (!opt.out.empty())
            write_text_file(opt.out, s);
        else
            std::cout << s;
    }
};

bool is_v_space(const GenSpace& g) {
    return g.is_symmetric() && g.dim() == 2 && g.action12() == GenSpace::regular_action({"mu"}).action12();
}

std::string v_str(const GenSpace& g, const SparseVector& r) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : r)
        for (int k = 0; k < 12; ++k) {
            const VEntry& e = kVTable[k];
            if (weight2_index(g, e.comp, e.upper, e.lower) != i) continue;
            Rational a = c;
            if (first) {
                if (a == Rational(-1)) os << "-";
                else if (a != Rational(1)) os << a << "*";
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                Rational b = a.sign() < 0 ? -a : a;
                if (b != Rational(1)) os << b << "*";
            }
            os << "v" << (k + 1);
            first = false;
        }
    return os.str();
}

void describe(std::ostream& os, const QuadPresentation& p) {
    const GenSpace& g = p.gen();
    os << p.name() << " [" << kind_name(p.kind()) << "]\n";
    os << "  generators (" << g.dim() << "):";
    for (const auto& n : g.names()) os << " " << n;
    os << "\n";
    if (g.is_symmetric()) {
        os << "  action of (12), columns = images:\n";
        for (std::size_t i = 0; i < g.dim(); ++i) {
            os << "   ";
            for (std::size_t j = 0; j < g.dim(); ++j) os << " " << g.action12()(i, j);
            os << "\n";
        }
    }
    os << "  relations: " << p.relation_dim() << " of " << p.weight2_dim() << "\n";
    bool v = is_v_space(g);
    for (const auto& r : p.relations().basis()) {
        os << "    " << weight2_str(g, r);
        if (v) os << "    [" << v_str(g, r) << "]";
        os << "\n";
    }
}

json presentation_doc(const QuadPresentation& p) {
    json j = presentation_to_json(p);
    j["relation_dim"] = p.relation_dim();
    return j;
}

QuadPresentation as_symmetric(const QuadPresentation& p) { return p.is_symmetric() ? p : symmetrize(p); }

int fail_input(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kInputError;
}

// Compares a computed presentation with --expect; returns true when it matches.
bool compare_expected(const Options& opt, const QuadPresentation& computed, Output& out) {
    QuadPresentation target = load_presentation(opt.expect);
    if (computed.is_symmetric() && !target.is_symmetric()) target = symmetrize(target);
    Verdict v;
    std::string mode;
    if (!opt.map.empty()) {
        v = presentation_equal(computed, target, load_gen_map(opt.map));
        mode = "generator map " + opt.map;
    } else {
        int n = opt.max_arity_set ? opt.max_arity : 4;
        v = presentation_invariants_equal(computed, target, n);
        mode = "no generator map given; comparing invariants (relation dim and quotient dims to arity " +
               std::to_string(n) + ")";
    }
    out.text << "expect " << target.name() << ": " << (v.ok ? "MATCH" : "MISMATCH") << " (" << mode << ")\n";
    if (!v.detail.empty()) out.text << "  " << v.detail << "\n";
    out.doc["expect"] = {{"target", target.name()}, {"match", v.ok}, {"mode", mode}, {"detail", v.detail}};
    return v.ok;
}

int emit_presentation(const Options& opt, const QuadPresentation& p) {
    Output out{opt};
    describe(out.text, p);
    out.doc = presentation_doc(p);
    bool ok = true;
    if (!opt.expect.empty()) {
        ok = compare_expected(opt, p, out);
    }
    if (!opt.out.empty() && !opt.json) {
        // --out stores the presentation document; the listing still goes to stdout.
        write_text_file(opt.out, presentation_to_json(p).dump(2) + "\n");
        std::cout << out.text.str();
    } else {
        out.emit();
    }
    return ok ? 0 : kMathFailure;
}

int emit_verdict(const Options& opt, const std::string& what, const Verdict& v) {
    Output out{opt};
    out.text << what << ": " << (v.ok ? "PASS" : "FAIL") << "\n";
    if (!v.detail.empty()) out.text << "  " << v.detail << "\n";
    out.doc = {{"check", what}, {"ok", v.ok}, {"detail", v.detail}};
    out.emit();
    return v.ok ? 0 : kMathFailure;
}

int cmd_zoo(const Options& opt, const std::vector<std::string>& args) {
    Output out{opt};
    if (args.empty()) return fail_input("zoo expects 'list' or 'show NAME'");
    if (args[0] == "list") {
        json arr = json::array();
        for (const auto& n : zoo_names()) {
            const auto& e = zoo_entry(n);
            out.text << n << " [" << kind_name(e.pres.kind()) << "] dims";
            for (auto d : e.expected_dims) out.text << " " << d;
            out.text << (e.external ? "  (external)" : "") << "  " << e.summary << "\n";
            arr.push_back({{"name", n}, {"kind", kind_name(e.pres.kind())}, {"dims", e.expected_dims},
                           {"summary", e.summary}, {"external", e.external}});
        }
        out.doc["zoo"] = arr;
        out.emit();
        return 0;
    }
    if (args[0] == "show") {
        if (args.size() != 2) return fail_input("zoo show expects one name");
        const auto& e = zoo_entry(args[1]);
        out.text << e.summary << "\n";
        describe(out.text, e.pres);
        if (!e.relation_text.empty()) {
            out.text << "  entered as" << (e.v_coordinates ? " (v-coordinates)" : "") << ":\n";
            for (const auto& r : e.relation_text) out.text << "    " << r << "\n";
        }
        out.text << "  dims (n = 1.." << e.expected_dims.size() << "):";
        for (auto d : e.expected_dims) out.text << " " << d;
        out.text << "\n";
        out.doc = presentation_doc(e.pres);
        out.doc["summary"] = e.summary;
        out.doc["dims"] = e.expected_dims;
        out.emit();
        return 0;
    }
    return fail_input("unknown zoo action '" + args[0] + "'");
}

int cmd_dims(const Options& opt, const QuadPresentation& p) {
    Output out{opt};
    int n = opt.max_arity_set ? opt.max_arity : 4;
    auto rec = quotient_dims(p, n);
    out.text << p.name() << " [" << kind_name(p.kind()) << "]"
             << (p.is_symmetric() ? "" : " non-symmetric dimensions dim P'(n)") << "\n";
    out.text << "n  free  ideal  quotient\n";
    json rows = json::array();
    std::vector<std::size_t> dims;
    for (const auto& r : rec) {
        out.text << r.arity << "  " << r.free_dim << "  " << r.ideal_dim << "  " << r.quotient_dim << "\n";
        rows.push_back({{"n", r.arity}, {"free", r.free_dim}, {"ideal", r.ideal_dim}, {"quotient", r.quotient_dim}});
        dims.push_back(r.quotient_dim);
    }
    out.text << "dims:";
    for (std::size_t i = 0; i < dims.size(); ++i) out.text << (i ? "," : " ") << dims[i];
    out.text << "\n";
    out.doc = {{"name", p.name()}, {"kind", kind_name(p.kind())}, {"dims", dims}, {"table", rows}};
    out.emit();
    return 0;
}

int cmd_koszul(const Options& opt, const QuadPresentation& p) {
    Output out{opt};
    int n = opt.max_arity_set ? opt.max_arity : 5;
    GkReport r = gk_test(p, opt.order, n);
    out.text << p.name() << " with dual " << p.name() << "!, order " << opt.order << "\n" << gk_report_str(r);
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"n", row.n}, {"coeff", row.coeff.str()}, {"dim", row.dim.str()}, {"flagged", row.flagged},
                        {"reason", row.reason}});
    out.doc = {{"name", p.name()},
               {"order", r.order},
               {"f", r.f.str()},
               {"reflected", r.reflected.str()},
               {"inverse", r.inverse.str()},
               {"rows", rows},
               {"identity_order", r.identity_order},
               {"identity_holds", r.identity_holds},
               {"not_koszul", r.not_koszul},
               {"verdict", r.verdict}};
    out.emit();
    return (r.not_koszul || !r.identity_holds) ? kMathFailure : 0;
}

int cmd_defcomplex(const Options& opt, const QuadPresentation& p, const std::string& algebra_file) {
    Output out{opt};
    int n = opt.max_arity_set ? opt.max_arity : 4;
    std::vector<AlgebraStructure> algs;
    if (!algebra_file.empty())
        algs.push_back(algebra_from_json(p, read_json_file(algebra_file)));
    else if (p.name() == "As" && !p.is_symmetric())
        algs = as_test_algebras();
    else if (p.name() == "Dend" && !p.is_symmetric())
        algs = dend_test_algebras();
    else
        return fail_input("no built-in test algebras for " + p.name() + "; pass --algebra FILE");
    bool all_ok = true;
    json arr = json::array();
    for (const auto& a : algs) {
        ConvolutionContext ctx(p, a, n);
        out.text << p.name() << "-algebra " << a.name() << " (dim " << a.dim() << ")\n";
        out.text << "  n  dim P!(n)  dim Hom(A^n,A)  dim C(n)\n";
        json comps = json::array();
        for (int k = 1; k <= n; ++k) {
            out.text << "  " << k << "  " << ctx.cooperad().dim(k) << "  " << ctx.end_dim(k) << "  "
                     << ctx.element_dim(k) << "\n";
            comps.push_back({{"n", k}, {"dual_dim", ctx.cooperad().dim(k)}, {"end_dim", ctx.end_dim(k)},
                             {"dim", ctx.element_dim(k)}});
        }
        json checks = json::array();
        for (const auto& c : check_invariants(ctx, 10, 1)) {
            all_ok = all_ok && c.ok;
            out.text << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << " (" << c.instances << ")\n";
            checks.push_back({{"name", c.name}, {"ok", c.ok}, {"instances", c.instances}});
        }
        arr.push_back({{"algebra", a.name()}, {"dim", a.dim()}, {"components", comps}, {"checks", checks}});
    }
    out.doc = {{"operad", p.name()}, {"max_arity", n}, {"algebras", arr}, {"ok", all_ok}};
    out.emit();
    return all_ok ? 0 : kMathFailure;
}

int cmd_paper_suite(const Options& opt) {
    Output out{opt};
    bool all = true;
    json arr = json::array();
    for (int k = 1; k <= kSuiteCriteria; ++k) {
        CriterionResult r = run_criterion(k);
        all = all && r.pass;
        out.text << criterion_report(r);
        json checks = json::array();
        for (const auto& c : r.checks) checks.push_back({{"ok", c.ok}, {"text", c.text}});
        arr.push_back({{"criterion", r.number}, {"title", r.title}, {"pass", r.pass}, {"checks", checks}});
        if (!opt.json && opt.out.empty()) std::cout << out.text.str() << std::flush, out.text.str("");
    }
    out.text << (all ? "paper-suite: all criteria PASS\n" : "paper-suite: FAILURES\n");
    out.doc = {{"criteria", arr}, {"pass", all}};
    out.emit();
    return all ? 0 : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with binary quadratic operads"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "Machine-readable JSON output");
    auto* max_arity = app.add_option("--max-arity", opt.max_arity, "Largest arity for dimension computations")
                          ->check(CLI::Range(1, 8));
    app.add_option("--order", opt.order, "Series order for koszul-check")->check(CLI::Range(1, 40));
    app.add_option("--out", opt.out, "Write the result to FILE");
    app.add_option("--expect", opt.expect, "Compare the result with a presentation (zoo:Name or file)");
    app.add_option("--map", opt.map, "Generator map file for --expect");

    std::vector<std::string> zoo_args, refs;
    std::string algebra;
    auto* zoo = app.add_subcommand("zoo", "List or show the built-in presentations");
    zoo->add_option("args", zoo_args, "list | show NAME")->required();
    auto unary = [&](const std::string& name, const std::string& help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("ref", refs, "zoo:Name or presentation file")->required()->expected(1);
        return s;
    };
    auto binary = [&](const std::string& name, const std::string& help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("refs", refs, "two presentation references")->required()->expected(2);
        return s;
    };
    auto* dual = unary("dual", "Koszul dual");
    auto* white = binary("white", "White product (symmetric; regular operands are symmetrized)");
    auto* black = binary("black", "Black product (symmetric; regular operands are symmetrized)");
    auto* ws = binary("wsquare", "White square product of regular operads");
    auto* bs = binary("bsquare", "Black square product of regular operads");
    auto* dims = unary("dims", "Quotient dimensions");
    auto* kc = unary("koszul-check", "Necessary Koszulity test by generating series");
    auto* dc = binary("duality-check", "Black/white duality");
    auto* ec = binary("epi-check", "Black-square relations inside white-square relations");
    auto* mc = unary("mult-check", "Canonical multiplication in P! wsquare P");
    auto* bc = unary("bracket-check", "Canonical bracket in P! white P");
    auto* def = unary("defcomplex", "Deformation complex invariants");
    def->add_option("--algebra", algebra, "Algebra file");
    auto* suite = app.add_subcommand("paper-suite", "Run all acceptance criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }
    opt.max_arity_set = max_arity->count() > 0;

    try {
        if (zoo->parsed()) return cmd_zoo(opt, zoo_args);
        if (suite->parsed()) return cmd_paper_suite(opt);
        std::vector<QuadPresentation> ps;
        for (const auto& r : refs) ps.push_back(load_presentation(r));
        if (dual->parsed()) return emit_presentation(opt, koszul_dual(ps[0]));
        if (white->parsed()) return emit_presentation(opt, white_product(as_symmetric(ps[0]), as_symmetric(ps[1])));
        if (black->parsed()) return emit_presentation(opt, black_product(as_symmetric(ps[0]), as_symmetric(ps[1])));
        if (ws->parsed() || bs->parsed() || ec->parsed() || mc->parsed()) {
            for (const auto& p : ps)
                if (p.is_symmetric()) return fail_input(p.name() + " is symmetric; this verb needs regular operads");
        }
        if (ws->parsed()) return emit_presentation(opt, wsquare(ps[0], ps[1]));
        if (bs->parsed()) return emit_presentation(opt, bsquare(ps[0], ps[1]));
        if (dims->parsed()) return cmd_dims(opt, ps[0]);
        if (kc->parsed()) return cmd_koszul(opt, ps[0]);
        if (dc->parsed()) {
            if (ps[0].kind() != ps[1].kind()) {
                ps[0] = as_symmetric(ps[0]);
                ps[1] = as_symmetric(ps[1]);
            }
            return emit_verdict(opt, "duality " + ps[0].name() + ", " + ps[1].name(), duality_check(ps[0], ps[1]));
        }
        if (ec->parsed()) return emit_verdict(opt, "epi " + ps[0].name() + ", " + ps[1].name(), epi_check(ps[0], ps[1]));
        if (mc->parsed()) return emit_verdict(opt, "canonical multiplication " + ps[0].name(), canonical_mult_check(ps[0]));
        if (bc->parsed())
            return emit_verdict(opt, "canonical bracket " + ps[0].name(), canonical_bracket_check(as_symmetric(ps[0])));
        if (def->parsed()) {
            if (ps[0].is_symmetric())
                return fail_input("multiplicative structure requires a regular operad; " + ps[0].name() +
                                  " is symmetric");
            return cmd_defcomplex(opt, ps[0], algebra);
        }
    } catch (const std::invalid_argument& e) {
        return fail_input(e.what());
    } catch (const std::out_of_range& e) {
        return fail_input(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMathFailure;
    }
    return kInputError;
}
