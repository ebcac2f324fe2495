#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "zvk/fixtures.hpp"
#include "zvk/json_io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(ZVK_BIN_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli zariski-pair distinguishes the bundled sextics") {
    RunResult r = run_cli("zariski-pair --order 12 --jobs 2");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "DISTINCT");
    CHECK(j["curve1"]["char1"].size() == 1);
    CHECK(j["curve2"]["char1"].size() == 4);
}

TEST_CASE("cli output is byte-identical across runs") {
    RunResult a = run_cli("zariski-pair --order 12");
    RunResult b = run_cli("zariski-pair --order 12");
    CHECK(a.out == b.out);
    RunResult c = run_cli("orbits");
    RunResult d = run_cli("orbits");
    CHECK(c.out == d.out);
}

TEST_CASE("cli deform-solve") {
    RunResult r = run_cli("deform-solve --range 0..8");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["solutions"] == nlohmann::json::array({2}));
}

TEST_CASE("cli lattice subcommands") {
    RunResult r = run_cli("lattice obstruct --disc-t 256 --disc-ns 16 -n 8");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["verdict"] == "OBSTRUCTED");

    std::string spec = "cli_disc_spec_test.json";
    {
        std::ofstream f(spec);
        f << R"({"summands":[{"type":"scalar","value":2},{"type":"A","k":15},)"
          << R"({"type":"A","k":3},{"type":"A","k":1}]})";
    }
    RunResult d = run_cli("lattice disc " + spec);
    std::remove(spec.c_str());
    CHECK(d.exit_code == 0);
    CHECK(nlohmann::json::parse(d.out)["disc"] == "256");
}

TEST_CASE("cli orbits") {
    RunResult r = run_cli("orbits");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["modulus"] == 12);
    CHECK(j["classes"].size() == 3);
}

TEST_CASE("cli pipeline present/simplify/abelianize/charvar") {
    RunResult pres = run_cli("present c1_special --projective");
    CHECK(pres.exit_code == 0);

    std::string path = "cli_pres_test.json";
    {
        std::ofstream f(path);
        f << pres.out;
    }
    RunResult simp = run_cli("simplify " + path);
    CHECK(simp.exit_code == 0);
    auto sj = nlohmann::json::parse(simp.out);
    CHECK(sj["rank"].get<int>() <= 2);

    RunResult ab = run_cli("abelianize " + path);
    auto aj = nlohmann::json::parse(ab.out);
    CHECK(aj["free_rank"] == 1);
    CHECK(aj["torsion"] == nlohmann::json::array({"2"}));

    std::string spath = "cli_simp_test.json";
    {
        std::ofstream f(spath);
        f << simp.out;
    }
    RunResult cv = run_cli("charvar " + spath + " --order 12");
    auto cj = nlohmann::json::parse(cv.out);
    CHECK(cj["points"].size() == 1);
    std::remove(path.c_str());
    std::remove(spath.c_str());
}

TEST_CASE("cli alexpoly on the reference fixtures") {
    RunResult r = run_cli("alexpoly g1_paper");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "t - 1\n");
    RunResult r2 = run_cli("alexpoly g2_paper");
    CHECK(r2.out == "t - 1\n");
}

TEST_CASE("cli braid eq exit codes") {
    std::string p1 = "cli_braid1_test.json", p2 = "cli_braid2_test.json", p3 = "cli_braid3_test.json";
    {
        std::ofstream(p1) << R"({"strands":3,"letters":[1,2,1]})";
        std::ofstream(p2) << R"({"strands":3,"letters":[2,1,2]})";
        std::ofstream(p3) << R"({"strands":3,"letters":[2]})";
    }
    CHECK(run_cli("braid eq " + p1 + " " + p2).exit_code == 0);
    RunResult ne = run_cli("braid eq " + p1 + " " + p3);
    CHECK(ne.exit_code == 1);
    CHECK(ne.out == "false\n");
    std::remove(p1.c_str());
    std::remove(p2.c_str());
    std::remove(p3.c_str());
}

TEST_CASE("cli rejects malformed input with exit code 2") {
    std::string bad = "cli_bad_test.json";
    { std::ofstream(bad) << R"({"strands":4,"letters":[4]})"; }
    RunResult r = run_cli("braid eq " + bad + " " + bad);
    CHECK(r.exit_code == 2);
    std::remove(bad.c_str());

    RunResult missing = run_cli("present no_such_fixture");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("cli homcount fingerprint") {
    RunResult r = run_cli("homcount g1_paper --max-order 8 --jobs 2");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["Q8"] == 40);
    CHECK(j["C2"] == 4);
}

TEST_CASE("bundled fixture files stay in sync with the builtin data") {
    using namespace zvk;
    std::string dir = ZVK_FIXTURE_DIR;
    MonodromyPresentation c1 = load_monodromy(dir + "/c1_special.json");
    CHECK(c1.braids == fixtures::c1_special().braids);
    CHECK(c1.infinity_word == fixtures::c1_special().infinity_word);
    MonodromyPresentation c2 = load_monodromy(dir + "/c2_special.json");
    CHECK(c2.braids == fixtures::c2_special().braids);
    CHECK(c2.infinity_word == fixtures::c2_special().infinity_word);
    GroupPresentation g1 = load_presentation(dir + "/g1_paper.json");
    CHECK(g1.relators == fixtures::g1_paper().relators);
    GroupPresentation g2 = load_presentation(dir + "/g2_paper.json");
    CHECK(g2.relators == fixtures::g2_paper().relators);
}
