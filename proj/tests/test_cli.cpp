// End-to-end tests of the command-line tool: output formats, JSON schemas,
// exit codes, and byte determinism.  Drives the real binary via popen.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(TORUSQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = out;
    return r;
}

} // namespace

TEST_CASE("invariant evaluation and form agreement") {
    RunResult lattice = run_cli("jones A1 --p 2 --pp 3 --lambda 1");
    CHECK(lattice.code == 0);
    CHECK(lattice.out == "-1 + q^2 + q^3 + q^4\n");

    RunResult rosso = run_cli("jones A1 --p 2 --pp 3 --lambda 1 --form rosso");
    CHECK(rosso.code == 0);
    CHECK(rosso.out == lattice.out);

    // the two evaluation forms are byte-identical in JSON as well
    RunResult jl = run_cli("jones A2 --p 3 --pp 4 --lambda 1,1 --json --form lattice");
    RunResult jr = run_cli("jones A2 --p 3 --pp 4 --lambda 1,1 --json --form rosso");
    CHECK(jl.code == 0);
    CHECK(jl.out == jr.out);

    RunResult jhat = run_cli("jhat A1 --p 2 --pp 3 --lambda 1");
    CHECK(jhat.out == "1 - q^2 - q^3 - q^4\n");
}

TEST_CASE("multiplicity lookups and tables") {
    RunResult single = run_cli("mult A2 --lambda 1,1 --mu 0,0");
    CHECK(single.code == 0);
    CHECK(single.out == "2\n");

    RunResult root_basis = run_cli("mult C2 --lambda 3,2 --basis root --mu 0,0");
    CHECK(root_basis.out == "3\n");

    RunResult table = run_cli("mult C2 --lambda 2,0 --json");
    auto j = nlohmann::json::parse(table.out);
    CHECK(j["lambda"] == nlohmann::json::array({2, 0}));
    REQUIRE(j["mults"].size() == 3);
    CHECK(j["mults"][2][0] == nlohmann::json::array({0, 0}));
    CHECK(j["mults"][2][1] == "2");
}

TEST_CASE("series JSON schema") {
    RunResult r = run_cli("jones A1 --p 2 --pp 3 --lambda 1 --json");
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["denominator"] == 1);
    CHECK(j["window"].is_null());
    REQUIRE(j["terms"].size() == 4);
    CHECK(j["terms"][0][0] == 0);
    CHECK(j["terms"][0][1] == "-1");
    CHECK(j["terms"][3][0] == 4);
    CHECK(j["terms"][3][1] == "1");

    RunResult w = run_cli("wchar A2 --p 3 --pp 4 --j 1 --window 5 --json");
    auto jw = nlohmann::json::parse(w.out);
    CHECK(jw["denominator"] == 12);
    CHECK(jw["window"] == 5);
    CHECK(jw["min_exponent"] == "1/12");
    CHECK(jw["sign"] == 1);
    REQUIRE(jw["terms"].size() == 6);
    CHECK(jw["terms"][0] == nlohmann::json::array({1, "1"}));
    CHECK(jw["terms"][1] == nlohmann::json::array({13, "-2"}));
    long prev = -1;
    for (const auto& term : jw["terms"]) {
        long e = term[0].get<long>();
        CHECK(e > prev);
        prev = e;
    }
}

TEST_CASE("limit series output") {
    RunResult sl = run_cli("limit-rhs A1 --p 2 --pp 3 --window 12");
    CHECK(sl.code == 0);
    CHECK(sl.out ==
          "1 - q^2 - q^3 - q^4 + q^7 + q^8 + q^9 + q^10 + q^11   "
          "(exact through q^12)\n");

    RunResult srb = run_cli("limit-rhs C2 --p 7 --pp 8 --window 10");
    CHECK(srb.out == "1 - q^10   (exact through q^10)\n");
}

TEST_CASE("harness reports carry the empirical label") {
    RunResult stab =
        run_cli("stabilize A2 --p 3 --pp 4 --lambda 1,1 --window 10 --nmax 10");
    CHECK(stab.code == 0);
    CHECK(stab.out.find("label:") != std::string::npos);
    CHECK(stab.out.find("EMPIRICAL") != std::string::npos);
    CHECK(stab.out.find("stabilized at: 9") != std::string::npos);
    CHECK(stab.out.find("nondecreasing: yes") != std::string::npos);

    RunResult ratios =
        run_cli("ratios G2 --lambda 1,1 --mu1 0,0 --mu2 0,1 --nmax 3");
    CHECK(ratios.out.find("EMPIRICAL") != std::string::npos);
    CHECK(ratios.out.find("final deviation: 1/7") != std::string::npos);

    RunResult ratios_json =
        run_cli("ratios G2 --lambda 1,1 --mu1 0,0 --mu2 0,1 --nmax 3 --json");
    auto j = nlohmann::json::parse(ratios_json.out);
    CHECK(j["label"] == "EMPIRICAL");
    CHECK(j["monotone"] == true);
    CHECK(j["rows"][0]["mult1"] == "4");
    CHECK(j["rows"][2]["ratio"] == "8/7");

    RunResult fit =
        run_cli("fit A2 --lambda 1,1 --mu 0,0 --degree 1 --nmax 10");
    CHECK(fit.out.find("estimate: 1\n") != std::string::npos);
}

TEST_CASE("info summarizes the root datum") {
    RunResult info = run_cli("info G2 --json");
    auto j = nlohmann::json::parse(info.out);
    CHECK(j["rank"] == 2);
    CHECK(j["simply_laced"] == false);
    CHECK(j["dimension"] == 14);
    CHECK(j["coxeter_number"] == 6);
    CHECK(j["dual_coxeter_number"] == 4);
    CHECK(j["weyl_order"] == 12);
    CHECK(j["rho_norm2"] == "14/3");
    CHECK(j["marked_nodes"] == nlohmann::json::array({0}));

    RunResult d4 = run_cli("info D4 --json");
    auto jd = nlohmann::json::parse(d4.out);
    CHECK(jd["weyl_order"] == 192);
    CHECK(jd["lattice_index"] == 4);
    CHECK(jd["rho_norm2"] == "14");
}

TEST_CASE("exit codes distinguish input errors") {
    CHECK(run_cli("jones A1 --p 2 --pp 4 --lambda 1").code == 2);
    CHECK(run_cli("jones Z9 --p 2 --pp 3 --lambda 1").code == 2);
    CHECK(run_cli("mult A2 --lambda 1,1 --mu 0").code == 2);
    CHECK(run_cli("mult A2 --lambda 1,x --mu 0,0").code == 2);
    CHECK(run_cli("mult A2 --lambda 1,1 --mu 0,1/0").code == 2);
    CHECK(run_cli("limit-rhs C2 --p 7 --pp 8 --window 10 --j 1").code == 2);
    CHECK(run_cli("wchar C2 --p 7 --pp 8 --window 5").code == 2);
    CHECK(run_cli("stabilize C2 --p 3 --pp 4 --lambda 0,1 --window 6 --nmax 2").code == 2);
    CHECK(run_cli("bogus").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("jones --help").code == 0);
}

TEST_CASE("repeated invocations are byte-identical") {
    const std::string cmd =
        "stabilize A1 --p 2 --pp 5 --lambda 2 --window 12 --nmax 8 --json";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    RunResult c = run_cli("ratios C2 --lambda 2,0 --mu1 0,0 --mu2 2,0 --nmax 8 --json");
    RunResult d = run_cli("ratios C2 --lambda 2,0 --mu1 0,0 --mu2 2,0 --nmax 8 --json");
    CHECK(c.out == d.out);
    auto j = nlohmann::json::parse(c.out);
    CHECK(j["rows"][7]["ratio"] == "9/8");
}