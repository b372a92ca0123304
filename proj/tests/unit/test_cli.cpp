#include "cohomotopy/cli/cli.hpp"
#include "cohomotopy/cli/scan.hpp"
#include "cohomotopy/error.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace cohomotopy;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(COHOMOTOPY_DATA_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("documented invocations") {
    auto a = invoke({"cohomotopy", "--space", "CP(5)", "--n", "7", "--coeff", "Z_(3)"});
    REQUIRE(a.code == 0);
    REQUIRE(a.out.rfind("pi^7(CP(5); Z_(3)) = Z/3 [splits: T=Z/3, H=0]\n", 0) == 0);

    auto b = invoke({"cohomotopy", "--space", "M(6; 2^1)", "--n", "6", "--coeff", "Z/2"});
    REQUIRE(b.code == 0);
    REQUIRE(contains(b.out, "pi^6(M(6; 2^1); Z/2) = Z/4 [does not split"));
    REQUIRE(contains(b.out, "discrepancy:"));

    auto c = invoke({"cohomology", "--file", data("torus.facets"), "--n", "1", "--coeff", "Z"});
    REQUIRE(c.code == 0);
    REQUIRE(contains(c.out, "= Z^2\n"));
}

TEST_CASE("exit codes") {
    REQUIRE(invoke({"cohomotopy", "--space", "HP(3)", "--n", "9", "--coeff", "Z/2"}).code == 3);
    auto h = invoke({"cohomotopy", "--space", "HP(3)", "--n", "9", "--coeff", "Z/2"});
    REQUIRE(contains(h.err, "n + 2p - 3"));
    REQUIRE(invoke({"cohomotopy", "--space", "S(3)", "--n", "3", "--coeff", "Z/3"}).code == 3);
    REQUIRE(invoke({"steenrod", "--file", data("cp2.facets"), "--op", "P1", "--p", "3", "--degree", "2"}).code == 4);
    REQUIRE(invoke({"cohomology", "--n", "2"}).code == 2);
    REQUIRE(invoke({"cohomology", "--space", "S(2)", "--file", data("rp2.facets"), "--n", "2"}).code == 2);
    REQUIRE(invoke({"cohomology", "--space", "Klein(2)", "--n", "2"}).code == 2);
    REQUIRE(invoke({"frobnicate"}).code == 2);
    REQUIRE(invoke({"cohomotopy", "--space", "S(5)"}).code == 2);
    REQUIRE(invoke({"catalog-scan", "--n", "1..65"}).code == 2);
    REQUIRE(invoke({"catalog-scan", "--p", "3..37"}).code == 2);
    REQUIRE(invoke({"--help"}).code == 0);
}

TEST_CASE("structured and text output share one record") {
    const std::vector<std::vector<std::string>> queries = {
        {"cohomotopy", "--space", "wedge(M(7; 2^2), CP(3))", "--n", "7", "--coeff", "Z/4"},
        {"cohomology", "--space", "CP(3)", "--n", "4"},
        {"steenrod", "--space", "susp(CP(2), 1)", "--op", "Sq2", "--degree", "3"},
        {"primary", "--space", "HP(7)", "--n", "25", "--p", "3"},
        {"uct-check", "--space", "S(6)", "--n", "6", "--coeff", "Z/9", "--pi-m", "Z", "--pi-m1", "0"},
        {"h3-image", "--space", "susp(CP(2), 1)", "--p", "2"},
        {"catalog-scan", "--family", "C", "--p", "3", "--n", "2..4"}};
    for (auto q : queries) {
        auto text = invoke(q);
        REQUIRE(text.code == 0);
        REQUIRE(invoke(q).out == text.out);
        q.push_back("--json");
        auto js = invoke(q);
        REQUIRE(js.code == 0);
        auto record = nlohmann::json::parse(js.out);
        REQUIRE(contains(text.out, record["summary"].get<std::string>()));
    }
}

TEST_CASE("structured output file") {
    const std::string path = "test_cli_out.json";
    auto r = invoke({"cohomotopy", "--space", "M(6; 2^3)", "--n", "6", "--coeff", "Z/4", "--out", path});
    REQUIRE(r.code == 0);
    std::ifstream in(path);
    auto record = nlohmann::json::parse(in);
    REQUIRE(record["group"]["text"] == "Z/2 ⊕ Z/4");
    REQUIRE(record["verdict"]["status"] == "splits");
    REQUIRE(record["group"]["torsion"] == nlohmann::json::array({2, 4}));
    std::remove(path.c_str());
}

TEST_CASE("catalog scan") {
    auto rows = cli::catalog_scan('H', cli::Range::parse("1..13"), cli::Range::parse("3"), cli::Range::parse("0"));
    REQUIRE(rows.size() == 13);
    for (const auto& row : rows) {
        if (!row.degree_ok) continue;
        REQUIRE(row.group);
        REQUIRE(row.group->is_trivial() == (row.n % 3 != 1));
    }
    auto odd = cli::catalog_scan('C', cli::Range::parse("6..12"), cli::Range::parse("3"), cli::Range::parse("1"));
    for (const auto& row : odd) REQUIRE(row.integral_rank == 1);
    REQUIRE(cli::catalog_scan('C', cli::Range::parse("5..4"), cli::Range::parse("3"), cli::Range::parse("0")).empty());
    auto empty = invoke({"catalog-scan", "--n", "3..2", "--json"});
    REQUIRE(empty.code == 0);
    REQUIRE(nlohmann::json::parse(empty.out)["rows"].empty());
    REQUIRE_THROWS_AS(cli::catalog_scan('C', cli::Range::parse("1..64"), cli::Range::parse("2..32"), cli::Range::parse("0")),
                      Error);
    REQUIRE_THROWS_AS(cli::Range::parse("a..3"), Error);
}

TEST_CASE("group arguments") {
    auto r = invoke({"uct-check", "--space", "M(6; 2^1)", "--n", "6", "--coeff", "Z/2", "--pi-m", "Z/2", "--pi-m1",
                     "Z/2", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["predicted_order"] == 4);
    REQUIRE(j["orders_match"] == true);
    REQUIRE(invoke({"uct-check", "--space", "S(6)", "--n", "6", "--pi-m", "Q"}).code == 2);
}
