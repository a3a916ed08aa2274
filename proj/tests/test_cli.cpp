#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ajima/cli.hpp"
#include "ajima/geom.hpp"

using namespace ajima;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

size_t count(const std::string& s, const std::string& needle) {
    size_t n = 0;
    for (size_t i = s.find(needle); i != std::string::npos; i = s.find(needle, i + 1)) ++n;
    return n;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("verify") {
    Run r = cli({"verify", "--triangle", "3,4,5", "--theta", "180", "--checks", "T01"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["per_check"].size() == 1);
    CHECK(j["per_check"][0]["id"] == "T01_tangents");
    CHECK(j["per_check"][0]["na"] == 1);

    r = cli({"verify", "--trials", "0"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["per_check"].empty());

    r = cli({"verify", "--trials", "25", "--seed", "42"});
    CHECK(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["per_check"].size() >= 50);
    CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("verify exit codes") {
    CHECK(cli({"verify", "--trials", "5", "--tol", "1e-300", "--checks", "P01"}).code == 1);
    CHECK(cli({"verify", "--checks", "X99"}).code == 2);
    CHECK(cli({"verify", "--thetas", "100,120,140"}).code == 2);
    CHECK(cli({"verify", "--triangle", "1,2,3", "--theta", "100"}).code == 2);
    CHECK(cli({"verify", "--triangle", "3,4,5"}).code == 2);
    CHECK(cli({"verify", "--triangle", "3,4,5", "--sample", "--theta", "100"}).code == 2);
    CHECK(cli({"verify", "--trials", "-1"}).code == 2);
    CHECK(cli({"verify", "--bogus"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("tolerance from the environment") {
    ::setenv("AJIMA_TOL", "1e-300", 1);
    CHECK(cli({"verify", "--trials", "5", "--checks", "P01"}).code == 1);
    CHECK(cli({"verify", "--trials", "5", "--checks", "P01", "--tol", "1e-7"}).code == 0);
    ::setenv("AJIMA_TOL", "junk", 1);
    CHECK(cli({"verify", "--trials", "5", "--checks", "P01"}).code == 2);
    ::unsetenv("AJIMA_TOL");
}

TEST_CASE("verify writes the report file") {
    std::string a = "test_cli_report_a.json", b = "test_cli_report_b.json";
    Run r = cli({"verify", "--trials", "20", "--json", a});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 failures") != std::string::npos);
    cli({"verify", "--trials", "20", "--json", b});
    std::string x = slurp(a);
    CHECK_FALSE(x.empty());
    CHECK(x == slurp(b));
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("solve") {
    Run r = cli({"solve", "--triangle", "4,5,6", "--theta", "180"});
    CHECK(r.code == 0);
    CHECK(r.out.find("rho_i        1.043791011") != std::string::npos);
    CHECK(r.out.find("rho_o        2.111764544") != std::string::npos);
    CHECK(r.out.find("W            1.789031839") != std::string::npos);

    r = cli({"solve", "--triangle", "2,2,2", "--theta", "180"});
    CHECK(count(r.out, "0.2440169359") >= 6);

    r = cli({"solve", "--triangle", "3,4,5", "--theta", "180"});
    CHECK(r.code == 0);
    size_t rc = r.out.find("rho_c");
    REQUIRE(rc != std::string::npos);
    std::string line = r.out.substr(rc, r.out.find('\n', rc) - rc);
    CHECK(line.find("degenerate point circle") != std::string::npos);
    CHECK(count(r.out, "degenerate point circle") == 1);

    CHECK(cli({"solve", "--triangle", "1,1,3", "--theta", "90"}).code == 2);
    CHECK(cli({"solve", "--triangle", "3,4,5", "--theta", "360"}).code == 2);
    CHECK(cli({"solve", "--triangle", "3,4,5"}).code == 2);
    CHECK(cli({"solve", "--sample", "--theta", "90"}).code == 2);
}

TEST_CASE("figure") {
    Run r = cli({"figure", "--triangle", "4,5,6", "--theta", "180"});
    CHECK(r.code == 0);
    const std::string& svg = r.out;
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("scale(100.0000 -100.0000)") != std::string::npos);
    CHECK(count(svg, "class=\"arc\"") == 3);
    CHECK(count(svg, "class=\"gamma\"") == 3);
    CHECK(count(svg, "class=\"tri\"") == 1);
    CHECK(svg.find("id=\"apollonius\"") == std::string::npos);
    CHECK(svg == cli({"figure", "--triangle", "4,5,6", "--theta", "180"}).out);

    Run s = cli({"figure", "--triangle", "4,5,6", "--theta", "180", "--show", "soddy,apollonius"});
    for (const char* label : {">U<", ">V<", ">I<", ">Ge<"}) CHECK(s.out.find(label) != std::string::npos);
    CHECK(count(s.out, "class=\"soddy\"") == 1);
    CHECK(count(s.out, "class=\"inner\"") == 1);
    CHECK(count(s.out, "class=\"outer\"") == 1);

    Run w = cli({"figure", "--triangle", "4,5,6", "--theta", "100", "--show", "registry-witness", "--checks",
                 "P01,P02"});
    CHECK(w.code == 0);
    CHECK(w.out.find("<!-- P01:") != std::string::npos);

    Run tri = cli({"figure", "--triangle", "4,5,6", "--thetas", "100,140,170", "--show", "apollonius"});
    CHECK(tri.code == 0);
    CHECK(count(tri.out, "class=\"gamma\"") == 3);

    CHECK(cli({"figure", "--triangle", "4,5,6", "--theta", "100", "--show", "nope"}).code == 2);
    CHECK(cli({"figure", "--triangle", "4,5,6"}).code == 2);
    CHECK(cli({"figure", "--triangle", "4,5,6", "--thetas", "100,140"}).code == 2);
}

TEST_CASE("figure file output is byte-identical") {
    std::string a = "test_cli_a.svg", b = "test_cli_b.svg";
    for (const std::string& p : {a, b})
        CHECK(cli({"figure", "--triangle", "4,5,6", "--theta", "150", "--show", "apollonius,soddy", "--svg", p})
                  .code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).size() > 1000);
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("miyamoto") {
    Run r = cli({"miyamoto", "--triangle", "4,5,6", "--thetas", "100,140,170"});
    CHECK(r.code == 0);
    CHECK(cli({"miyamoto", "--triangle", "4,5,6", "--thetas", "40,90,150"}).code == 1);
    CHECK(cli({"miyamoto", "--triangle", "4,5,6", "--theta", "40"}).code == 2);
}

TEST_CASE("check id prefixes") {
    CHECK(resolve_check_ids({"T01"}) == std::vector<std::string>{"T01_tangents"});
    CHECK(resolve_check_ids({"P01_protasov"}) == std::vector<std::string>{"P01_protasov"});
    CHECK(resolve_check_ids({}).empty());
    CHECK_THROWS_AS(resolve_check_ids({"Q"}), GeometryError);
}

TEST_CASE("installed binary") {
    std::string cmd = std::string(AJIMA_CLI_PATH) + " verify --trials 0 > /dev/null";
    int st = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(st) == 0);
    cmd = std::string(AJIMA_CLI_PATH) + " verify --checks X99 2> /dev/null";
    st = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(st) == 2);
}
