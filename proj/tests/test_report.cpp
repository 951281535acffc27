#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

#include "tncodes/errors.hpp"
#include "tncodes/report.hpp"
#include "tncodes/verify.hpp"

using namespace tncodes;
using nlohmann::ordered_json;

namespace {

RunConfig tower_cfg(std::string sub, std::uint32_t p, std::uint32_t e, std::uint32_t f, std::uint32_t k)
{
    RunConfig cfg;
    cfg.subcommand = std::move(sub);
    cfg.p = p;
    cfg.e = e;
    cfg.f = f;
    cfg.k = k;
    return cfg;
}

struct Run {
    int rc;
    std::string out, err;
};

Run run(int (*cmd)(const RunConfig&, std::ostream&, std::ostream&), const RunConfig& cfg)
{
    std::ostringstream out, err;
    const int rc = cmd(cfg, out, err);
    return {rc, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

int shell(const std::string& args)
{
    const int status = std::system((std::string(TNCODES_CLI) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("field summary")
{
    RunConfig cfg = tower_cfg("field", 2, 1, 1, 4);
    cfg.format = OutputFormat::json;
    const Run r = run(cmd_field, cfg);
    REQUIRE(r.rc == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(j["size"] == 16);
    CHECK(j["alpha_order"] == 15);
    CHECK(j["subfields"].size() == 3);  // degrees 1, 2, 4

    cfg = tower_cfg("field", 3, 1, 1, 6);
    cfg.format = OutputFormat::json;
    CHECK(ordered_json::parse(run(cmd_field, cfg).out)["alpha_order"] == 728);

    CHECK_THROWS_AS(run(cmd_field, tower_cfg("field", 4, 1, 1, 4)), ParameterError);
    CHECK_THROWS_AS(run(cmd_field, tower_cfg("field", 2, 1, 3, 4)), ParameterError);
}

TEST_CASE("code record matches the published [51,4,36] code")
{
    RunConfig cfg = tower_cfg("code", 2, 2, 2, 4);
    const Run r = run(cmd_code, cfg);
    REQUIRE(r.rc == 0);
    const auto j = ordered_json::parse(r.out);
    CHECK(j["n"] == 51);
    CHECK(j["dim"] == 4);
    CHECK(j["dmin"] == 36);
    CHECK(j["weights"] == ordered_json::parse(R"([{"w":36,"count":204},{"w":48,"count":51}])"));
    CHECK(j["theory"]["match"] == true);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"params", "n", "dim", "dmin", "weights", "enumerator", "theory"});
}

TEST_CASE("code record for the binary f = 3 family")
{
    RunConfig cfg = tower_cfg("code", 2, 1, 3, 6);
    cfg.a = 1;
    const auto j = ordered_json::parse(run(cmd_code, cfg).out);
    CHECK(j["n"] == 36);
    CHECK(j["dim"] == 6);
    CHECK(j["weights"] == ordered_json::parse(R"([{"w":16,"count":27},{"w":20,"count":36}])"));
    CHECK(j["theory"]["match"] == true);
}

TEST_CASE("puncturing is a no-op for q = 2")
{
    RunConfig cfg = tower_cfg("code", 2, 1, 2, 4);
    cfg.format = OutputFormat::csv;
    const Run plain = run(cmd_code, cfg);
    cfg.punctured = true;
    const Run punct = run(cmd_code, cfg);
    CHECK(lines(plain.out).at(1) == lines(punct.out).at(1));
    CHECK(lines(plain.out).at(0) == csv_header());
}

TEST_CASE("Gauss sums")
{
    RunConfig cfg = tower_cfg("gauss", 3, 1, 1, 2);
    cfg.format = OutputFormat::json;
    cfg.j = 2;  // order 4 on F_9
    auto j = ordered_json::parse(run(cmd_gauss, cfg).out);
    CHECK(j["character_order"] == 4);
    CHECK(j["value"] == -3);

    cfg.j = 0;
    j = ordered_json::parse(run(cmd_gauss, cfg).out);
    CHECK(j["value"] == -1);
    CHECK(j["norm_ok"] == true);

    cfg = tower_cfg("gauss", 2, 1, 1, 3);
    cfg.format = OutputFormat::json;
    cfg.j = 1;
    const Run r = run(cmd_gauss, cfg);
    CHECK(r.rc == 0);
    j = ordered_json::parse(r.out);
    CHECK(j["value"].is_null());
    CHECK(j["norm"] == 8);
    CHECK(j["coefficients"].size() > 1);

    cfg.j = 7;
    CHECK_THROWS_AS(run(cmd_gauss, cfg), ParameterError);
}

TEST_CASE("search rows")
{
    RunConfig cfg;
    cfg.subcommand = "search";
    cfg.budget = 3;  // no tower has q^{2f} <= 3
    Run r = run(cmd_search, cfg);
    CHECK(r.rc == 0);
    CHECK(r.out == csv_header() + "\n");

    cfg.budget = 256;
    r = run(cmd_search, cfg);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() > 1);
    // Rows for a = 0 and every nonzero label of each tower, in tuple order.
    CHECK(rows[1].rfind("2,1,1,2,1,", 0) == 0);
    bool inapplicable = false;
    for (const auto& row : rows)
        if (row.rfind("3,1,1,2,", 0) == 0) {
            CHECK(row.substr(row.rfind(',') + 1) == "inapplicable");  // gcd(2, 2) = 2
            inapplicable = true;
        }
    CHECK(inapplicable);

    cfg.filter = "griesmer-met";
    const auto met = lines(run(cmd_search, cfg).out);
    bool simplex = false;
    for (const auto& row : met) {
        if (row.rfind("2,1,1,3,1,7,3,4,", 0) == 0) simplex = true;
        if (row != met[0]) CHECK(row.find(",true,") != std::string::npos);
    }
    CHECK(simplex);

    cfg.filter = "nonsense";
    CHECK_THROWS_AS(run(cmd_search, cfg), ParameterError);
}

TEST_CASE("admissible towers")
{
    const auto towers = admissible_towers(64, {2, 3});
    std::vector<TowerSpec> want{{2, 1, 1, 2}, {2, 1, 1, 3}, {2, 1, 1, 4}, {2, 1, 1, 5}, {2, 1, 1, 6}, {2, 1, 2, 4},
                                {2, 1, 2, 6}, {2, 1, 3, 6}, {2, 2, 1, 2}, {2, 2, 1, 3}, {2, 3, 1, 2}, {3, 1, 1, 2},
                                {3, 1, 1, 3}};
    CHECK(towers == want);
}

TEST_CASE("verify command")
{
    RunConfig cfg;
    cfg.subcommand = "verify";
    cfg.suite = "bogus";
    CHECK_THROWS_AS(run(cmd_verify, cfg), ParameterError);
    cfg.suite = "grid";
    cfg.budget = 64;
    const Run r = run(cmd_verify, cfg);
    // For f = 1, q = 3, k = 2 the defining set holds both d and -d (gcd(k, q-1) = 2),
    // so that code repeats coordinates and falls one short of the Griesmer sum.
    CHECK(r.rc == 1);
    std::vector<std::string> failures;
    for (const auto& line : lines(r.out))
        if (line.rfind("FAIL", 0) == 0) failures.push_back(line);
    REQUIRE(failures.size() == 1);
    CHECK(failures[0].find("(3,1,1,2)") != std::string::npos);
    CHECK(verify_grid(64, 2).ok());
}

TEST_CASE("secret sharing and determinism suites")
{
    CHECK(verify_secret_sharing().ok());
    CHECK(verify_determinism().ok());
}

TEST_CASE("command-line exit codes")
{
    CHECK(shell("field --p 2 --e 1 --k 4") == 0);
    CHECK(shell("field --p 4 --k 2") == 2);
    CHECK(shell("code --p 2 --f 3 --k 4") == 2);
    CHECK(shell("code --p 2 --e 2 --f 2 --k 4 --format yaml") == 2);
    CHECK(shell("nosuchcommand") == 2);
    CHECK(shell("") == 2);
    CHECK(shell("gauss --p 2 --k 3 --j 1") == 0);
    CHECK(shell("code --p 2 --e 1 --f 1 --k 30") == 2);  // field budget
    CHECK(shell("search --budget 16 --format csv") == 0);
}
