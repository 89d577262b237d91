#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(OPERAD_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("operad_cli_test_" + name)).string();
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("white product with an expected result") {
    auto r = run("white zoo:Perm zoo:As --expect zoo:Dias");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "MATCH"));
    CHECK(contains(r.out, "no generator map given"));
}

TEST_CASE("expected result with a generator map") {
    std::string map = temp_path("map.json");
    {
        std::ofstream f(map);
        f << R"({"gen_map": [["1","0","0","0"],["0","0","0","1"],["0","0","1","0"],["0","1","0","0"]]})";
    }
    auto r = run("white zoo:Perm zoo:As --expect zoo:Dias --map " + map);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "MATCH"));
    std::string wrong = temp_path("wrong_map.json");
    {
        std::ofstream f(wrong);
        f << R"({"gen_map": [["0","0","0","1"],["1","0","0","0"],["0","1","0","0"],["0","0","1","0"]]})";
    }
    auto w = run("white zoo:Perm zoo:As --expect zoo:Dias --map " + wrong);
    CHECK(w.code == 2);
    CHECK(contains(w.out, "MISMATCH"));
    std::string noneq = temp_path("noneq_map.json");
    {
        std::ofstream f(noneq);
        f << R"({"gen_map": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]})";
    }
    CHECK(run("white zoo:Perm zoo:As --expect zoo:Dias --map " + noneq).code == 1);
}

TEST_CASE("koszul-check flags the counterexample") {
    auto r = run("koszul-check zoo:PreLieNilBlack --order 10");
    CHECK(r.code == 2);
    CHECK(contains(r.out, "-715/16"));
    CHECK(contains(r.out, "not Koszul"));
    CHECK(run("koszul-check zoo:Com --order 5").code == 0);
}

TEST_CASE("dims table") {
    auto r = run("dims zoo:PreLie --max-arity 5");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "dims: 1,2,9,64,625"));
}

TEST_CASE("zoo listing") {
    auto r = run("zoo list");
    CHECK(r.code == 0);
    for (const char* n : {"Com", "Lie", "Dend", "Dias", "Quad", "PreLieNilBlack"}) CHECK(contains(r.out, n));
    auto s = run("zoo show Dend");
    CHECK(s.code == 0);
    CHECK(contains(s.out, "prec"));
    CHECK(run("zoo show Nope").code == 1);
}

TEST_CASE("v-coordinates are shown for k[S2] generators") {
    auto r = run("zoo show PreLie");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "v1"));
}

TEST_CASE("input errors exit with 1") {
    CHECK(run("dual zoo:Nope").code == 1);
    CHECK(run("dual /nonexistent.json").code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("wsquare zoo:Com zoo:Lie").code == 1);
    auto d = run("defcomplex zoo:Com");
    CHECK(d.code == 1);
    CHECK(contains(d.out, "requires a regular operad"));
}

TEST_CASE("json output is deterministic and files round-trip") {
    auto a = run("black zoo:PreLie zoo:As --json");
    auto b = run("black zoo:PreLie zoo:As --json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::string file = temp_path("dual.json");
    std::filesystem::remove(file);
    auto w = run("dual zoo:Dend --out " + file);
    CHECK(w.code == 0);
    REQUIRE(std::filesystem::exists(file));
    auto e = run("dims " + file + " --max-arity 4");
    CHECK(e.code == 0);
    CHECK(contains(e.out, "dims: 1,2,3,4"));
    CHECK(run("dual " + file + " --expect zoo:Dend").code == 0);
}

TEST_CASE("checks") {
    CHECK(run("duality-check zoo:Dend zoo:Dias").code == 0);
    CHECK(run("epi-check zoo:Dend zoo:Dias").code == 0);
    CHECK(run("mult-check zoo:Dend").code == 0);
    CHECK(run("bracket-check zoo:Leib").code == 0);
    CHECK(run("bracket-check zoo:As").code == 0);
    CHECK(run("bsquare zoo:Dend zoo:Dend --expect zoo:Quad").code == 0);
    CHECK(run("wsquare zoo:Dend zoo:Dias --expect zoo:Dend").code == 2);
}

TEST_CASE("defcomplex on the built-in and file algebras") {
    auto r = run("defcomplex zoo:Dend");
    CHECK(r.code == 0);
    CHECK_FALSE(contains(r.out, "FAIL"));
    std::string alg = temp_path("alg.json");
    {
        std::ofstream f(alg);
        f << R"({"dim": 2, "generators": [{"name": "mu", "table": [["1","0","0","0"],["0","1","1","0"]]}]})";
    }
    auto a = run("defcomplex zoo:As --algebra " + alg);
    CHECK(a.code == 0);
    CHECK(contains(a.out, "dim 2"));
    std::string bad = temp_path("bad_alg.json");
    {
        std::ofstream f(bad);
        f << R"({"dim": 2, "generators": [{"name": "mu", "table": [["0","0","0","1"],["1","1","1","0"]]}]})";
    }
    CHECK(run("defcomplex zoo:As --algebra " + bad).code == 1);
}
