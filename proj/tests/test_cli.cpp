#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(NROOTS_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("gen lists roots and exits cleanly") {
    RunResult r = run_cli("gen --type D4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("D4: 24 roots, 12 positive") == 0);
}

TEST_CASE("verify-qp exit codes distinguish verified and refuted") {
    CHECK(run_cli("verify-qp --type D4 --universe all").exit_code == 0);
    CHECK(run_cli("verify-qp --type E6 --universe odd:4 --exclude 4").exit_code == 1);
    CHECK(run_cli("verify-qp --type Z9 --universe all").exit_code == 2);
    CHECK(run_cli("verify-qp --type D4 --universe odd:9").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("verify output is byte-stable across runs") {
    for (const char* cmd :
         {"table1", "cubic", "verify-qp --type D6 --universe odd:6 --exclude 6 --format json",
          "omega --type E7 --universe odd:7 --format json"}) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("json output round-trips through the documented schemas") {
    RunResult om = run_cli("omega --type D4 --universe all --format json");
    REQUIRE(om.exit_code == 0);
    auto j = nlohmann::json::parse(om.out);
    CHECK(j["kappa"] == 4);
    CHECK(j["universe"].size() == 12);
    CHECK(j["members"].size() == 3);
    CHECK(j["levels"].size() == 3);
    for (const auto& m : j["members"]) CHECK(m.size() == 4);

    RunResult v = run_cli("verify-qp --type D4 --universe all --format json");
    auto jv = nlohmann::json::parse(v.out);
    for (const char* key : {"scaled", "qp1", "qp2", "transitive", "witnesses"})
        CHECK(jv.contains(key));

    RunResult h = run_cli("hafnian --type D6 --universe odd:6 --format json");
    auto jh = nlohmann::json::parse(h.out);
    CHECK(jh["terms"].size() == 15);
    for (const auto& t : jh["terms"]) {
        CHECK(t.contains("q"));
        CHECK(t.contains("coeff"));
        CHECK(t["monomial"].size() == 3);
    }
}

TEST_CASE("dot outputs are well-formed digraphs") {
    RunResult hasse = run_cli("order --type D4 --universe all --format dot");
    CHECK(hasse.exit_code == 0);
    CHECK(hasse.out.rfind("digraph hasse", 0) == 0);
    CHECK(hasse.out.find("rank=same") != std::string::npos);

    RunResult dag = run_cli("gamedag --type D6 --universe odd:6 --exclude 6 --format dot");
    CHECK(dag.exit_code == 0);
    CHECK(dag.out.rfind("digraph game", 0) == 0);
}

TEST_CASE("abc display names the 27-root model") {
    RunResult r = run_cli("omega --type E7 --universe odd:7 --display abc");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("{b6,c16,a1}  level=0") != std::string::npos);
    CHECK(r.out.find("|U| = 27, kappa = 3, |Omega_U| = 45") == 0);

    CHECK(run_cli("omega --type D4 --universe all --display abc").exit_code == 2);
}

TEST_CASE("oracle subcommand") {
    CHECK(run_cli("oracle --model permutation -k 3 --trials 5").exit_code == 0);
    CHECK(run_cli("oracle --model matching -k 2 --trials 5").exit_code == 0);
}

TEST_CASE("omega enumerations are memoized under ROOTS_CACHE_DIR") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "nroots-cache-test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string env = "ROOTS_CACHE_DIR=" + dir.string() + " ";
    const std::string cmd = std::string(NROOTS_CLI_PATH) +
                            " omega --type E6 --universe odd:2 --format json 2>/dev/null";

    auto run_with_env = [&](const std::string& full) {
        std::array<char, 4096> buf{};
        std::string out;
        FILE* pipe = popen(full.c_str(), "r");
        REQUIRE(pipe != nullptr);
        size_t n;
        while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
        pclose(pipe);
        return out;
    };

    const std::string cold = run_with_env(env + cmd);
    CHECK(!fs::is_empty(dir));
    const std::string warm = run_with_env(env + cmd);
    CHECK(cold == warm);
    const std::string uncached = run_with_env(cmd);
    CHECK(cold == uncached);
    fs::remove_all(dir);
}
