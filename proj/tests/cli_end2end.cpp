// End-to-end checks of the padic-cf binary: exit-code contract and
// byte-identical output under a fixed seed.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(PADIC_CF_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) result.output.append(buffer.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("expand prints the worked example") {
    RunResult r = run("expand --p 5 --value 1/3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[2, -3/5], Finite\n");
}

TEST_CASE("ruban expansion of -p reports a period") {
    RunResult r = run("expand --p 5 --kind ruban --value -5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PeriodDetected") != std::string::npos);
}

TEST_CASE("height h2 on the worked example prints h, bound, PASS") {
    std::string cf = write_temp("padic_cf_example.json",
                                R"({"schema":1,"p":5,
                                    "preperiod":[{"u":"0","a":0},{"u":"4","a":2},{"u":"-3","a":3}],
                                    "period":[{"u":"1","a":1}]})");
    RunResult r = run("height --p 5 --cf " + cf + " --check h2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "h = 9713125\nbound = 9765625\nPASS\n");

    RunResult h1 = run("height --p 5 --cf " + cf + " --check h1");
    CHECK(h1.exit_code == 0);
    RunResult remark = run("height --p 5 --cf " + cf + " --check remark");
    CHECK(remark.exit_code == 0);
}

TEST_CASE("usage and I/O errors exit 1") {
    CHECK(run("expand --p 5").exit_code == 1);              // missing --value
    CHECK(run("expand --p 4 --value 1/3").exit_code == 1);  // not a prime
    CHECK(run("height --p 5 --cf /nonexistent.json --check h1").exit_code == 1);
    CHECK(run("nonsense").exit_code == 1);
    std::string empty_spec = write_temp("padic_cf_empty_sweep.json", R"({"primes":[]})");
    CHECK(run("sweep --spec " + empty_spec).exit_code == 1); // empty sweep spec
}

TEST_CASE("sweep passes under Browkin and fails under the counterexample floor") {
    std::string spec = write_temp("padic_cf_sweep.json",
                                  R"({"primes":[5],"samples":25,"suites":["termination","floor_contract"]})");
    RunResult good = run("sweep --spec " + spec + " --seed 7");
    CHECK(good.exit_code == 0);

    std::string ce_spec = write_temp("padic_cf_sweep_ce.json",
                                     R"({"primes":[5],"samples":25,"suites":["floor_contract"]})");
    RunResult bad = run("sweep --spec " + ce_spec + " --floor counterexample --seed 7");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("fixed seed gives byte-identical JSON output") {
    std::string spec = write_temp("padic_cf_qper.json",
                                  R"({"p":5,"C":"18/1","n0":2,"k":1,"runs":2,"gap":1,"d_cap_exp":9,
                                      "filler_pool":[{"u":"1","a":1},{"u":"2","a":9},{"u":"-2","a":9}]})");
    std::string args = "family qper --p 5 --spec " + spec + " --emit-certificate --seed 99 --output json";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("sweep JSON is byte-identical for a fixed seed") {
    std::string spec = write_temp("padic_cf_sweep_det.json",
                                  R"({"primes":[3,5],"samples":20,"suites":["termination","determinant"]})");
    std::string args = "sweep --spec " + spec + " --seed 11 --output json";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("family certificate violations exit 2") {
    // C below the threshold for a 5^9 pool
    std::string spec = write_temp("padic_cf_qper_bad.json",
                                  R"({"p":5,"C":"3/1","n0":2,"k":1,"runs":2,"gap":1,"d_cap_exp":9,
                                      "filler_pool":[{"u":"2","a":9}]})");
    RunResult r = run("family qper --p 5 --spec " + spec + " --emit-certificate --seed 3");
    CHECK(r.exit_code == 2);
}

TEST_CASE("convergents CSV output") {
    RunResult r = run("convergents --p 5 --value 1/3 --output csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n,A,B,e,f\n-2,0,1,inf,0\n-1,1,0,0,inf\n0,2,1,0,0\n1,-1/5,-3/5,-1,-1\n");
}

TEST_CASE("floor command evaluates all three kinds") {
    RunResult browkin = run("floor --p 5 --kind browkin --value 1/3");
    CHECK(browkin.exit_code == 0);
    CHECK(browkin.output.find("floor = 2") != std::string::npos);
    RunResult ce = run("floor --p 5 --kind counterexample --value 2/5");
    CHECK(ce.exit_code == 0);
    CHECK(ce.output.find("|x - s|_p < 1: NO") != std::string::npos);
    RunResult ruban = run("floor --p 5 --kind ruban --value -1");
    CHECK(ruban.output.find("floor = 4") != std::string::npos);
}

TEST_CASE("euclid command streams the division steps") {
    RunResult r = run("euclid --p 5 --x0 1 --x1 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("step 0: q = 2, r = -5") != std::string::npos);
    CHECK(r.output.find("step 1: q = -3/5, r = 0") != std::string::npos);
}

TEST_CASE("expand handles quadratic surd input") {
    RunResult r = run("expand --p 7 --value \"(0 + 1*sqrt(2))/1\" --branch + --max-steps 12");
    CHECK(r.exit_code == 0);
    CHECK((r.output.find("Finite") != std::string::npos || r.output.find("Truncated") != std::string::npos ||
           r.output.find("Period") != std::string::npos));
}
