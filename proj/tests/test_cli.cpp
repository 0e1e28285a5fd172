#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("LATMAT_CLI_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "LATMAT_CLI_BIN must point at the latmat binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("det on the 1,2,3 chain prints 3") {
    auto r = run_cli("det --kind join --chain 1,2,3 --f linear:t=0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "det: 3"));
    CHECK(contains(r.out, "method: upper-closed"));
}

TEST_CASE("meet inverse on the 1,2,3 chain agrees with the oracle") {
    auto r = run_cli("inv --kind meet --chain 1,2,3 --f linear:t=0 --check");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "2 -1 0\n-1 2 -1\n0 -1 1"));
    CHECK(contains(r.out, "verdict: AGREE"));
}

TEST_CASE("join-closed method on a set that is not join-closed exits 3") {
    auto r = run_cli("det --kind join --divisors 1,2,3 --f identity --method join-closed");
    CHECK(r.exit_code == 3);
}

TEST_CASE("enumeration cap exits 4 and --force overrides it") {
    auto capped = run_cli("det --kind join --divisors 2,3,5 --f identity --method cauchy-binet --cap 1");
    CHECK(capped.exit_code == 4);
    auto forced =
        run_cli("det --kind join --divisors 2,3,5 --f identity --method cauchy-binet --cap 1 --force --check");
    CHECK(forced.exit_code == 0);
    CHECK(contains(forced.out, "verdict: AGREE"));
}

TEST_CASE("singular inverse exits 2") {
    auto r = run_cli("inv --kind join --chain 1,2 --f constant:1");
    CHECK(r.exit_code == 2);
    // The determinant of a singular matrix is an ordinary result, not an error.
    auto det = run_cli("det --kind join --chain 1,2 --f constant:1");
    CHECK(det.exit_code == 0);
    CHECK(contains(det.out, "det: 0"));
}

TEST_CASE("verify needs at least one trial") {
    CHECK(run_cli("verify --trials 0 --seed 1").exit_code == 1);
}

TEST_CASE("input errors exit 1") {
    CHECK(run_cli("det --chain 1,2 --f linear:t=0.5").exit_code == 1);  // no floats
    CHECK(run_cli("det --f identity").exit_code == 1);                  // no host
    CHECK(run_cli("det --chain 1,2 --divisors 1,2").exit_code == 1);    // two hosts
    CHECK(run_cli("det --divisors 1,2 --set 1,7").exit_code == 1);      // unknown member
}

TEST_CASE("build prints the LCM matrix") {
    auto r = run_cli("build --kind join --divisors 1,2,3 --f identity");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "matrix:\n1 2 3\n2 2 6\n3 6 3"));
}

TEST_CASE("two-set determinant with --set and --set-y") {
    auto r = run_cli("det --kind join --divisors 1,2,3,6 --set 1,2 --set-y 3,6 --f identity --check");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "matrix:\n3 6\n6 6"));
    CHECK(contains(r.out, "det: -18"));
    CHECK(contains(r.out, "verdict: AGREE"));
}

TEST_CASE("named poset file with explicit sets") {
    std::string path = "/tmp/latmat_test_poset.txt";
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f);
    fputs("# a diamond\nelem bot\nelem l\nelem r\nelem top\nrel bot l\nrel bot r\nrel l top\nrel r top\n", f);
    fclose(f);
    std::string fpath = "/tmp/latmat_test_f.txt";
    f = fopen(fpath.c_str(), "w");
    REQUIRE(f);
    fputs("bot 1\nl 2\nr 3\ntop 6\n", f);
    fclose(f);
    auto r = run_cli("det --kind join --poset " + path + " --set l,r --f " + fpath + " --check");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "verdict: AGREE"));
}

TEST_CASE("verify runs are byte-identical for a fixed seed") {
    auto a = run_cli("verify --trials 5 --seed 7");
    auto b = run_cli("verify --trials 5 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "5/5 pass"));
    auto c = run_cli("verify --trials 5 --seed 8");
    CHECK(c.exit_code == 0);
}

TEST_CASE("worked examples") {
    auto ex2 = run_cli("example 2 --chain 4,5,6 --t 0");
    CHECK(ex2.exit_code == 0);
    CHECK(contains(ex2.out, "closed form: 6"));
    CHECK(contains(ex2.out, "verdict: AGREE"));

    auto ex6 = run_cli("example 6 --start 1 --n 3 --t 0");
    CHECK(ex6.exit_code == 0);
    CHECK(contains(ex6.out, "closed form: 1"));
    CHECK(contains(ex6.out, "verdict: AGREE"));

    auto singular = run_cli("example 3 --chain 1,2,3 --t -3");
    CHECK(singular.exit_code == 3);

    auto not_consecutive = run_cli("example 2 --chain 1,3,5 --t 0");
    CHECK(not_consecutive.exit_code == 3);

    for (int id = 1; id <= 8; ++id) {
        auto r = run_cli("example " + std::to_string(id) + " --chain 2,5,9 --t 1/2");
        if (id % 2 == 0) {
            CHECK(r.exit_code == 3);  // consecutive-chain examples reject 2,5,9
        } else {
            CHECK(r.exit_code == 0);
            CHECK(contains(r.out, "verdict: AGREE"));
        }
        auto c = run_cli("example " + std::to_string(id) + " --start 3 --n 4 --t 1/2");
        CHECK(c.exit_code == 0);
        CHECK(contains(c.out, "verdict: AGREE"));
    }
}
