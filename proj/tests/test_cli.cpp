#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string &args) {
    std::string tmp = "cli_out.txt";
    std::string cmd = std::string(STRATA_CLI_PATH) + " " + args + " > " +
                      tmp + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(tmp.c_str());
#ifdef _WIN32
    return {status, ss.str()};
#else
    return {WEXITSTATUS(status), ss.str()};
#endif
}

const std::string kFixtures = std::string("--fixtures ") + STRATA_FIXTURES_DIR;

}  // namespace

TEST_CASE("report emits the full markdown table with totals") {
    RunResult r = run(kFixtures + " report --case 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("49 strata, 16 non-empty") != std::string::npos);
    CHECK(r.out.find("Ex2(k)") != std::string::npos);
    RunResult r2 = run(kFixtures + " report --case 2");
    CHECK(r2.code == 0);
    CHECK(r2.out.find("81 strata, 13 non-empty") != std::string::npos);
    CHECK(r2.out.find("index 74") != std::string::npos);
}

TEST_CASE("report json round-trips and matches the markdown data") {
    RunResult r = run(kFixtures + " report --case 2 --format json");
    CHECK(r.code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["strata"] == 81);
    CHECK(doc["nonempty"] == 13);
    CHECK(doc["rows"].size() == 81);
    int nonempty = 0;
    for (const auto &row : doc["rows"])
        if (row["status"] == "nonempty") ++nonempty;
    CHECK(nonempty == 13);
    CHECK(doc["rows"][73]["index"] == 74);
    CHECK(doc["rows"][73]["status"] == "nonempty");
    /* byte-determinism */
    RunResult again = run(kFixtures + " report --case 2 --format json");
    CHECK(again.out == r.out);
}

TEST_CASE("find-oneps answers both directions of the dichotomy") {
    RunResult feasible = run(kFixtures + " find-oneps --case 1 --index 10 6");
    CHECK(feasible.code == 0);
    CHECK(feasible.out.find("1-PS:") != std::string::npos);
    RunResult infeasible = run(kFixtures + " find-oneps --case 1 --index 29");
    CHECK(infeasible.code == 0);
    CHECK(infeasible.out.find("infeasible") != std::string::npos);
    RunResult c2 = run(kFixtures + " find-oneps --case 2 --index 79 15");
    CHECK(c2.code == 0);
    CHECK(c2.out.find("30:1") != std::string::npos);
}

TEST_CASE("usage and fixture errors exit with code 2") {
    CHECK(run("no-such-subcommand").code == 2);
    CHECK(run(kFixtures + " report --case 3").code == 2);
    CHECK(run(kFixtures + " find-oneps --case 1 --index 10 999").code == 2);
    CHECK(run("--fixtures /no/such/dir report --case 1").code == 2);
}

TEST_CASE("classify reads point files and reports the square class") {
    {
        std::ofstream pt("cli_point.txt");
        pt << "# A = I2, B = diag(1,-1)\n";
        pt << "5 = 1\n9 = 1\n14 = 1\n18 = -1\n";
    }
    RunResult split = run(kFixtures + " classify --case 1 --index 29 "
                          "cli_point.txt");
    CHECK(split.code == 0);
    CHECK(split.out.find("disc class 1") != std::string::npos);
    CHECK(split.out.find("split") != std::string::npos);
    {
        std::ofstream pt("cli_point.txt");
        pt << "# B = [[0,1],[2,0]] gives the pencil u^2 - 2v^2\n";
        pt << "5 = 1\n9 = 1\n15 = 1\n17 = 2\n";
    }
    RunResult rt2 = run(kFixtures + " classify --case 1 --index 29 "
                        "cli_point.txt");
    CHECK(rt2.code == 0);
    CHECK(rt2.out.find("disc class 2") != std::string::npos);
    {
        std::ofstream pt("cli_point.txt");
        pt << "1 = 0\n";
    }
    RunResult zero = run(kFixtures + " classify --case 1 --index 29 "
                         "cli_point.txt");
    CHECK(zero.code == 1);
    std::remove("cli_point.txt");
}

TEST_CASE("verify certifies both catalogs end to end") {
    RunResult r = run(kFixtures + " verify all");
    CHECK(r.code == 0);
    CHECK(r.out.find("VERIFY PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("sigma-transport: ok") != std::string::npos);
}
