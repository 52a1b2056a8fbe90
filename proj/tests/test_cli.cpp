#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpr/attainability.hpp"
#include "qpr/cli.hpp"
#include "qpr/matrix_io.hpp"
#include "qpr/sequences.hpp"

using namespace qpr;
using nlohmann::json;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_main(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "qpr_cli_test") { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string write_file(const TempDir& dir, const std::string& name, const std::string& text) {
    std::string p = dir.file(name);
    std::ofstream(p) << text;
    return p;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("compute") {
    TempDir dir;
    std::string m = write_file(dir, "m.txt", "Q 2\n1 1\n1 0\n");

    auto r = run({"compute", "--in", m});
    CHECK(r.code == 0);
    CHECK(r.out.find("field: Q\n") != std::string::npos);
    CHECK(r.out.find("n: 2\n") != std::string::npos);
    CHECK(r.out.find("pr: 1]11\n") != std::string::npos);
    CHECK(r.out.find("epr: SA\n") != std::string::npos);
    CHECK(r.out.find("qpr: SA\n") != std::string::npos);
    CHECK(r.out.find("rank: 2\n") != std::string::npos);
    CHECK(r.err.empty());

    auto j = run({"compute", "--in", m, "--json"});
    CHECK(j.code == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed["n"] == 2);
    CHECK(parsed["field"] == "Q");
    CHECK(parsed["pr"] == "1]11");
    CHECK(parsed["epr"] == "SA");
    CHECK(parsed["qpr"] == "SA");
    CHECK(parsed["rank"] == 2);

    auto v = run({"compute", "--in", m, "--verbose"});
    CHECK(v.code == 0);
    CHECK(v.out.find("check ok: qpr ends in A or N") != std::string::npos);

    std::string f5 = write_file(dir, "f5.txt", "F5 2\n1 2\n2 4\n");
    auto ff = run({"compute", "--in", f5, "--json"});
    CHECK(ff.code == 0);
    CHECK(json::parse(ff.out)["field"] == "F5");
    CHECK(json::parse(ff.out)["qpr"] == "AN"); // det = 4 - 4 = 0

    CHECK(run({"compute", "--in", dir.file("absent.txt")}).code == 2);
    std::string bad = write_file(dir, "bad.txt", "Q 2\n1 2\n3 4\n");
    auto b = run({"compute", "--in", bad});
    CHECK(b.code == 2);
    CHECK(b.err.find("error:") != std::string::npos);
}

TEST_CASE("check") {
    auto ok = run({"check", "--seq", "asan"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("attainable") == 0);
    CHECK(ok.out.find("characteristic 0") != std::string::npos);

    auto nsa = run({"check", "--seq", "NSA"});
    CHECK(nsa.code == 1);
    CHECK(nsa.out.find("not attainable: contains NS") != std::string::npos);

    auto j = run({"check", "--seq", "ANS", "--json"});
    CHECK(j.code == 1);
    json parsed = json::parse(j.out);
    CHECK(parsed["seq"] == "ANS");
    CHECK(parsed["attainable"] == false);
    CHECK(parsed["violations"] == json::array({"ends in S", "contains NS"}));

    CHECK(run({"check", "--seq", "XYZ"}).code == 2);
    CHECK(run({"check"}).code == 2); // --seq is required
}

TEST_CASE("enumerate") {
    auto r = run({"enumerate", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "AA\nAN\nNN\nSA\nSN\n");

    auto j = run({"enumerate", "--n", "3", "--json"});
    CHECK(j.code == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed.size() == 11);
    CHECK(parsed[0] == "AAA");

    CHECK(run({"enumerate", "--n", "0"}).code == 1);
    CHECK(run({"enumerate", "--n", "x"}).code == 2);
}

TEST_CASE("synthesize writes a witness and logs its trace") {
    TempDir dir;
    std::string out1 = dir.file("w1.txt");

    auto r = run({"synthesize", "--seq", "ASAN", "--seed", "7", "--out", out1});
    CHECK(r.code == 0);
    CHECK(r.err.find("target ASAN seed 7") == 0);
    CHECK(r.err.find("step 1:") != std::string::npos);

    AnySymMatrix m = read_matrix_file(out1);
    auto rep = std::visit([](const auto& v) { return validate_matrix_report(v); }, m);
    CHECK(rep.qpr == "ASAN");

    // byte-identical across runs: same file, same trace
    std::string out2 = dir.file("w2.txt");
    auto r2 = run({"synthesize", "--seq", "ASAN", "--seed", "7", "--out", out2});
    CHECK(r2.code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(r.err == r2.err);

    // stdout target ("-" is the default)
    auto piped = run({"synthesize", "--seq", "SN", "--seed", "3"});
    CHECK(piped.code == 0);
    std::istringstream in(piped.out);
    CHECK(compute_qpr(std::get<SymMat<Rational>>(read_matrix(in))) == "SN");

    auto bad = run({"synthesize", "--seq", "AAS", "--seed", "1"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("cannot synthesize") != std::string::npos);
    CHECK(run({"synthesize", "--seq", "A?A"}).code == 2);
}

TEST_CASE("QPR_SEED provides the default seed") {
    TempDir dir;
    std::string flagged = dir.file("flagged.txt"), defaulted = dir.file("defaulted.txt");

    REQUIRE(setenv("QPR_SEED", "7", 1) == 0);
    auto env_run = run({"synthesize", "--seq", "ASAN", "--out", defaulted});
    REQUIRE(unsetenv("QPR_SEED") == 0);
    CHECK(env_run.code == 0);

    auto flag_run = run({"synthesize", "--seq", "ASAN", "--seed", "7", "--out", flagged});
    CHECK(flag_run.code == 0);
    CHECK(slurp(defaulted) == slurp(flagged));
    CHECK(env_run.err == flag_run.err);
}

TEST_CASE("synthesize piped into compute round-trips, lengths 1 through 5") {
    TempDir dir;
    std::string file = dir.file("roundtrip.txt");
    for (int n = 1; n <= 5; ++n)
        for (const auto& seq : enumerate_attainable(n)) {
            CAPTURE(seq);
            REQUIRE(run({"synthesize", "--seq", seq, "--seed", "5", "--out", file}).code == 0);
            auto c = run({"compute", "--in", file, "--json"});
            REQUIRE(c.code == 0);
            CHECK(json::parse(c.out)["qpr"] == seq);
        }
}

TEST_CASE("schur") {
    TempDir dir;
    std::string m = write_file(dir, "b.txt", "Q 3\n2 1 0\n1 1 1\n0 1 3\n");

    auto r = run({"schur", "--in", m, "--gamma", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "Q 2\n1 -1\n-1 2\n");

    std::string out = dir.file("c.txt");
    CHECK(run({"schur", "--in", m, "--gamma", "1,2", "--out", out}).code == 0);
    std::istringstream in(slurp(out));
    CHECK(matrix_order(read_matrix(in)) == 1);

    std::string sing = write_file(dir, "sing.txt", "Q 2\n0 1\n1 0\n");
    auto s = run({"schur", "--in", sing, "--gamma", "1"});
    CHECK(s.code == 1); // singular pivot block
    CHECK(s.err.find("singular") != std::string::npos);

    CHECK(run({"schur", "--in", m, "--gamma", "1,x"}).code == 2);
    CHECK(run({"schur", "--in", m, "--gamma", ""}).code == 2);
    CHECK(run({"schur", "--in", m, "--gamma", "1,,2"}).code == 2);
    CHECK(run({"schur", "--in", m, "--gamma", "5"}).code == 1);   // out of range
    CHECK(run({"schur", "--in", m, "--gamma", "1,1"}).code == 2); // duplicate index
}

TEST_CASE("survey") {
    auto r = run({"survey", "--p", "2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("survey F2 n=2: 8 matrices, 4 sequences") == 0);
    CHECK(r.out.find("AN 1\n") != std::string::npos);
    CHECK(r.out.find("SA 4\n") != std::string::npos);
    CHECK(r.out.find("AA") == std::string::npos);

    auto j = run({"survey", "--p", "2", "--n", "2", "--json", "--witness"});
    CHECK(j.code == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed["field"] == "F2");
    CHECK(parsed["total"] == 8);
    CHECK(parsed["realized"]["SA"]["count"] == 4);
    CHECK(parsed["realized"]["SN"]["witness"] == json::array({{1, 0}, {0, 0}}));

    auto w = run({"survey", "--p", "2", "--n", "1", "--witness"});
    CHECK(w.code == 0);
    CHECK(w.out.find("witness=[[1]]") != std::string::npos);

    CHECK(run({"survey", "--p", "4", "--n", "2"}).code == 1); // not prime
    CHECK(run({"survey", "--p", "2", "--n", "9"}).code == 1); // over budget
}

TEST_CASE("selftest subcommand") {
    auto r = run({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ok") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("argument errors and help") {
    CHECK(run({}).code == 2);                       // a subcommand is required
    CHECK(run({"frobnicate"}).code == 2);           // unknown subcommand
    CHECK(run({"compute"}).code == 2);              // missing --in
    CHECK(run({"compute", "--in"}).code == 2);      // flag without value
    CHECK(run({"enumerate", "--n", "2", "--bogus"}).code == 2);

    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("compute") != std::string::npos);
    CHECK(help.out.find("synthesize") != std::string::npos);
}
