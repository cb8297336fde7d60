// End-to-end tests of the fermatsha binary. The first program argument is
// the path to the binary under test; the remaining arguments go to doctest.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <filesystem>
#include <string>
#include <unistd.h>

#include <nlohmann/json.hpp>

namespace {

std::string g_binary;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    const std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() /
           ("fermatsha-cli-" + std::to_string(::getpid()) + "-" + name);
}

std::string cache_arg() {
    static const std::string path = temp_path("shared.cache").string();
    return " --cache " + path;
}

// positions of needles in the output, in order
void check_ordered(const std::string& haystack, const std::vector<std::string>& needles) {
    size_t pos = 0;
    for (const std::string& needle : needles) {
        const size_t found = haystack.find(needle, pos);
        INFO("looking for '" << needle << "' after offset " << pos);
        REQUIRE(found != std::string::npos);
        pos = found + needle.size();
    }
}

}  // namespace

TEST_CASE("classify") {
    RunResult r = run("classify --p 19 --a 7 --b 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "tame (witness 0)\n");

    r = run("classify --p 5 --a 1 --b 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "wild split (witness 1)\n");

    r = run("classify --p 7 --a 1 --b 1");
    CHECK(r.output == "wild non-split (witness 5)\n");

    r = run("classify --p 19 --a 7 --b 1 --json");
    CHECK(r.exit_code == 0);
    const auto o = nlohmann::json::parse(r.output);
    CHECK(o["reduction"] == "tame");
    CHECK(o["witness"] == 0);
    CHECK(o["c"] == -8);
}

TEST_CASE("usage errors exit 2 with one diagnostic line") {
    CHECK(run("classify --p 5 --a 3 --b 4").exit_code == 2);
    CHECK(run("classify --p 6 --a 1 --b 1").exit_code == 2);
    CHECK(run("classify --p 19 --a 7").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("verify no-such-verifier").exit_code == 2);
}

TEST_CASE("report-hurwitz-klein emits the deduction chain in order") {
    const RunResult r = run("report-hurwitz-klein");
    CHECK(r.exit_code == 0);
    check_ordered(r.output, {
                                "non-simple: yes (r=7)",
                                "reduction: tame (witness 0)",
                                "p=19 regular: yes",
                                "gamma(7,1,-8) = 15 ≠ 0 (mod 19)",
                                "Selmer dimension: 3",
                                "Mordell-Weil rank = 1",
                                "dim Ш[λ] = 2",
                                "Ш[p^∞] ≅ (Z[ζ]/(λ³))^2",
                            });
    // the isomorphism statement is the final line
    const std::string tail = "Ш[p^∞] ≅ (Z[ζ]/(λ³))^2\n";
    REQUIRE(r.output.size() >= tail.size());
    CHECK(r.output.substr(r.output.size() - tail.size()) == tail);
}

TEST_CASE("report-hurwitz-klein --no-rank-positive stops early") {
    const RunResult r = run("report-hurwitz-klein --no-rank-positive");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(Z[ζ]/(λ³))^2") == std::string::npos);
    check_ordered(r.output, {"Ш[λ³] ≠ 0 and |Ш[p^∞]| ≥ p³",
                             "Ш[λ³] free over Z[ζ]/(λ³)"});
}

TEST_CASE("bernoulli and regular") {
    RunResult r = run("bernoulli --p 7" + cache_arg());
    CHECK(r.exit_code == 0);
    check_ordered(r.output, {"B_2 ≡ 6 (mod 7)", "B_4 ≡ 3 (mod 7)", "regular: yes"});

    r = run("bernoulli --p 19 --k 16" + cache_arg());
    CHECK(r.output == "B_16 ≡ 15 (mod 19)\n");

    CHECK(run("bernoulli --p 19 --k 7" + cache_arg()).exit_code == 2);

    r = run("regular --range 30 40" + cache_arg());
    CHECK(r.exit_code == 0);
    check_ordered(r.output, {"p=31 regular", "p=37 irregular: 32"});
}

TEST_CASE("theorems") {
    RunResult r = run("theorems --p 19 --a 7 --b 1" + cache_arg());
    CHECK(r.exit_code == 0);
    check_ordered(r.output, {"reduction: tame", "gamma: 15", "old: fails",
                             "free: holds", "nontrivial: holds", "selmer_dim: 3",
                             "rank_bound: 1", "Ш[λ³] free over Z[ζ]/(λ³)"});
    CHECK(r.output.find("(Z[ζ]/(λ³))^2") == std::string::npos);

    r = run("theorems --p 19 --a 7 --b 1 --rank-positive" + cache_arg());
    check_ordered(r.output, {"Mordell-Weil rank = 1", "Ш[p^∞] ≅ (Z[ζ]/(λ³))^2",
                             "external facts used:"});
}

TEST_CASE("scan to stdout and to a file") {
    RunResult r = run("scan --p 5" + cache_arg());
    CHECK(r.exit_code == 0);
    check_ordered(r.output,
                  {"p,a,b,c,reduction,gamma,nonsimple,old,free,nontrivial,"
                   "selmer_dim,rank_bound",
                   "5,1,1,-2,wild split", "5,1,2,-3", "5,1,3,-4", "5,2,2,-4"});

    r = run("scan --p 5 --orbits" + cache_arg());
    CHECK(r.output.find("5,1,1,-2") != std::string::npos);
    CHECK(r.output.find("5,1,2") == std::string::npos);

    const auto out_file = temp_path("scan.json");
    r = run("scan --p 19 --format json --out " + out_file.string() + cache_arg());
    CHECK(r.exit_code == 0);
    std::ifstream in(out_file);
    REQUIRE(in.good());
    const auto arr = nlohmann::json::parse(in);
    CHECK(arr.is_array());
    CHECK(arr.size() == 81);
    std::filesystem::remove(out_file);
}

TEST_CASE("scan is deterministic across worker counts") {
    const RunResult a = run("scan --p 101 --jobs 1" + cache_arg());
    const RunResult b = run("scan --p 101 --jobs 4" + cache_arg());
    const RunResult c = run("scan --p 101 --jobs 4" + cache_arg());
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(b.output == c.output);
}

TEST_CASE("verify subcommands") {
    CHECK(run("verify vandiver --pmax 13" + cache_arg()).exit_code == 0);
    CHECK(run("verify schur --pmax 11 --trials 200 --seed 5").exit_code == 0);
    CHECK(run("verify tame-nonsimple --pmax 200").exit_code == 0);
    CHECK(run("verify b-half --pmax 200").exit_code == 0);

    // the bk comparison finds counterexamples; that is exit code 1
    const RunResult bk = run("verify bk --pmax 7" + cache_arg());
    CHECK(bk.exit_code == 1);
    CHECK(bk.output.find("FAIL") != std::string::npos);
    CHECK(bk.output.find("counterexample:") != std::string::npos);
    CHECK(bk.output.find("q3_plus_2abcB_over_6=") != std::string::npos);
}

TEST_CASE("seeded verifiers reproduce byte-for-byte") {
    const std::string cmd = "verify schur --pmax 19 --trials 100 --seed 42";
    const RunResult a = run(cmd);
    const RunResult b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("modules deduce") {
    const auto cfile = temp_path("constraints.txt");
    {
        std::ofstream out(cfile);
        out << "part_cap 4\n"
               "torsion_shape 3 3,3\n"
               "quotient_dim 3 1 >= 2\n";
    }
    const RunResult r = run("modules deduce --constraints " + cfile.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "(3,3)\n");
    std::filesystem::remove(cfile);

    CHECK(run("modules deduce --constraints /nonexistent/file").exit_code == 2);
}

TEST_CASE("modules pairing-test") {
    const RunResult r =
        run("modules pairing-test --parts 3,1 --p 3 --trials 10 --seed 9");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-binary> [doctest args]\n");
        return 1;
    }
    g_binary = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
