#include "support.hpp"

#include "effalg/cli.hpp"

#include <doctest.h>

#include <filesystem>

using namespace testing_support;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    int code = effalg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body)
{
    auto path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("classify even-4 with states")
{
    auto r = run({"classify", data_path("even4.omp"), "--with-states"});
    CHECK(r.code == 0);
    CHECK(r.out.find("omp=true") != std::string::npos);
    CHECK(r.out.find("lattice=true") != std::string::npos);
    CHECK(r.out.find("jp_algebra=false") != std::string::npos);
}

TEST_CASE("check sod with a state file")
{
    auto r = run({"check", "sod", data_path("even4.omp"), "--states", data_path("sabc.st")});
    CHECK(r.code == 1);
    CHECK(r.out.find("({a,d}, {a,b})") != std::string::npos);
    CHECK(run({"check", "unital", data_path("even4.omp"), "--states", data_path("sabc.st")}).code == 0);
    CHECK(run({"check", "jp", data_path("powerset3.omp")}).code == 0);
    CHECK(run({"check", "unital", data_path("c3.ea")}).code == 1);
    CHECK(run({"check", "sod", data_path("even4.omp"), "--full"}).code == 0);
}

TEST_CASE("validate exit codes")
{
    CHECK(run({"validate", data_path("c3.ea")}).code == 0);
    CHECK(run({"validate", data_path("even6.omp")}).code == 0);
    auto bad = temp_file("effalg_bad.ea", "ea 3\none 2\nsum 1 1 1\n");
    auto r = run({"validate", bad});
    CHECK(r.code == 2);
    CHECK(r.out.find("violation") != std::string::npos);
    auto open = temp_file("effalg_open.omp", "base 2\nblock e:\nblock x: 0\nblock f: 0 1\n");
    CHECK(run({"validate", open}).code == 2);
    CHECK(run({"validate", open, "--closure"}).code == 0);
    auto garbage = temp_file("effalg_garbage.ea", "ea two\n");
    CHECK(run({"validate", garbage}).code == 2);
    CHECK(run({"validate", "/nonexistent/file.ea"}).code == 2);
}

TEST_CASE("argument errors exit 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"classify", data_path("c3.ea"), "--unknown"}).code == 2);
    CHECK(run({"check", "maybe", data_path("c3.ea")}).code == 2);
    CHECK(run({"enumerate", "--n", "99"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("states")
{
    auto r = run({"states", data_path("even4.omp"), "--two-valued"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# 8 two-valued states") != std::string::npos);
    auto lp = run({"states", data_path("even4.omp"), "--pin", "{a,d}=1", "--minimize", "{a,b}"});
    CHECK(lp.code == 0);
    CHECK(lp.out.find("optimum: 0") != std::string::npos);
    CHECK(run({"states", data_path("c3.ea"), "--pin", "a=1"}).code == 1);
    CHECK(run({"states", data_path("c3.ea"), "--pin", "q=1"}).code == 2);
}

TEST_CASE("enumerate, theorems, witness, export-dot")
{
    auto census = (std::filesystem::temp_directory_path() / "effalg_census.txt").string();
    auto e = run({"enumerate", "--n", "4", "--census", census});
    CHECK(e.code == 0);
    CHECK(e.out.find("# 3 algebras with 4 elements") != std::string::npos);
    CHECK(slurp(census).find("oa=") != std::string::npos);
    CHECK(run({"enumerate", "--n", "4", "--naive"}).out == e.out);
    CHECK(run({"theorems", "--max-n", "4"}).code == 0);

    auto w = run({"witness", "omp-not-m", "no-maximal", "--candidate", "empty"});
    CHECK(w.code == 0);
    CHECK(w.out.find("witness: empty^{X1:0}") != std::string::npos);
    CHECK(w.out.find("verified: true") != std::string::npos);
    CHECK(run({"witness", "omp-not-m", "no-maximal", "--candidate", "X1uX2"}).code == 2);
    CHECK(run({"witness", "balanced", "chain-no-upper-bound", "--candidate", "cofinite^{X:1,X:3,Y:1,Y:0}"}).code == 0);
    CHECK(run({"witness", "finite-cofinite", "no-supremum", "--system", "odd"}).code == 0);
    CHECK(run({"witness", "omp-unot-sod", "not-sod"}).code == 0);
    CHECK(run({"witness", "chain-finite-lattice", "chain-bound"}).code == 0);
    CHECK(run({"witness", "balanced", "no-maximal"}).code == 2);

    auto dot = (std::filesystem::temp_directory_path() / "effalg_c3.dot").string();
    CHECK(run({"export-dot", data_path("c3.ea"), "-o", dot}).code == 0);
    auto text = slurp(dot);
    CHECK(text.find("n0 -> n1;") != std::string::npos);
    CHECK(text.find("label=\"a\"") != std::string::npos);
}

TEST_CASE("output is deterministic")
{
    auto a = run({"classify", data_path("even6.omp"), "--with-states"});
    auto b = run({"classify", data_path("even6.omp"), "--with-states"});
    CHECK(a.out == b.out);
}
