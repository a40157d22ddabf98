#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

#include "flowpoly/flow_core.hpp"
#include "flowpoly/json_io.hpp"
#include "flowpoly/kostant.hpp"

using namespace flowpoly;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

const char* cli_path() { return std::getenv("FLOWPOLY_CLI"); }

CliResult run_cli(const std::string& args) {
    CliResult result;
    const std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("graph and flow JSON round trips") {
    const FlowGraph g = build_graph(Partition::parse("2,1,1"), 5);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    const NetflowVector a({Int(1), Int(2), Int(1), Int(1), Int(1)});
    for (const Flow& f : enumerate_vertices(g, a)) {
        const Flow back = flow_from_json(g, flow_to_json(g, f));
        CHECK(back == f);
    }
    // rationals survive the trip too
    Flow fractional;
    fractional.values.assign(g.edges.size(), Rat(1, 3));
    CHECK(flow_from_json(g, flow_to_json(g, fractional)) == fractional);
}

TEST_CASE("integer vector and polynomial JSON") {
    const std::vector<Int> v{Int(1), Int("123456789012345678901234567890"), Int(-7)};
    CHECK(int_vector_from_json(int_vector_to_json(v)) == v);
    const Polynomial p({Rat(1), Rat(3, 2), Rat(1, 2)});
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
}

TEST_CASE("command line interface") {
    if (!cli_path()) {
        MESSAGE("FLOWPOLY_CLI not set; skipping CLI subprocess tests (ctest sets it)");
        return;
    }

    SUBCASE("volume report fields") {
        const CliResult r = run_cli("volume --partition 2,1 --n 4 --netflow ones");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j["schema"] == "flowpoly/1");
        CHECK(j["lidskii"] == "3");
        CHECK(j["closed_form"] == "3");
        CHECK(j["agree"] == true);
        CHECK(j["stabilized"] == true);
    }

    SUBCASE("table reproduction example") {
        const CliResult r = run_cli("volume --partition 4,3,2,1 --n 8 --netflow ones");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j["lidskii"] == "12600");
        CHECK(j["closed_form"] == "12600");
        CHECK(j["agree"] == true);
    }

    SUBCASE("vertex count") {
        const CliResult r = run_cli("vertices --partition 2,1 --n 3 --netflow ones --count-only");
        REQUIRE(r.exit_code == 0);
        CHECK(json::parse(r.out)["count"] == "6");
        const CliResult plain =
            run_cli("vertices --partition 2,1 --n 3 --count-only --format plain");
        CHECK(plain.out == "6\n");
    }

    SUBCASE("vertices parse back into valid flows") {
        const CliResult r = run_cli("vertices --partition 2,1 --n 3 --netflow ones");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        const FlowGraph g = build_graph(Partition::parse("2,1"), 3);
        REQUIRE(j["vertices"].size() == 6);
        for (const auto& row : j["vertices"]) {
            Flow f;
            for (const auto& v : row) f.values.push_back(rat_from_string(v.get<std::string>()));
            CHECK(validate_flow(g, NetflowVector::ones(3), f));
        }
    }

    SUBCASE("h-polynomial coefficients") {
        const CliResult r = run_cli("hpoly --partition 2,1");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j["coefficients"] == json::array({"1", "2", "2", "1"}));
    }

    SUBCASE("points agree across both formulas") {
        const CliResult r = run_cli("points --partition 2,1 --n 3");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j["lidskii"] == "7");
        CHECK(j["kostant"] == "7");
        CHECK(j["agree"] == true);
    }

    SUBCASE("ehrhart report") {
        const CliResult r = run_cli("ehrhart --partition 1 --n 2");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j["polynomial"] == json::array({"1", "1"}));
        CHECK(j["normalized_volume"] == "1");
        CHECK(int_vector_from_json(j["values"]) == std::vector<Int>{1, 2});
    }

    SUBCASE("faces report") {
        const CliResult r = run_cli("faces --partition 2,1 --n 3");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j["f_vector"] == json::array({"6", "9", "5", "1"}));
        CHECK(j["total_faces"] == "21");
        CHECK(j["enumerated"] == true);
        CHECK(j["agree"] == true);
    }

    SUBCASE("ct report") {
        const CliResult r = run_cli("ct --partition 2,1 --n 4");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j["series"] == "3");
        CHECK(j["lidskii"] == "3");
        CHECK(j["closed_form"] == "3");
        CHECK(j["agree"] == true);
    }

    SUBCASE("tesler report") {
        const CliResult r = run_cli("tesler --n 4 --with-lidskii");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        CHECK(j["volume"] == "160");
        CHECK(j["catalan_form"] == "160");
        CHECK(j["lidskii"] == "160");
        CHECK(j["agree"] == true);
    }

    SUBCASE("segment table") {
        const CliResult r = run_cli("table --partition 1 --from 2 --to 4 --netflow ones");
        REQUIRE(r.exit_code == 0);
        const json j = json::parse(r.out);
        REQUIRE(j["rows"].size() == 3);
        for (const auto& row : j["rows"]) CHECK(row["volume"] == "1");
        CHECK(j["n_star"] == 2);
    }

    SUBCASE("thread count never changes the bytes") {
        const std::string args = "volume --partition 3,2,1 --n 6 --netflow 2,1,1,2,1,1";
        const CliResult a = run_cli(args + " --threads 1");
        const CliResult b = run_cli(args + " --threads 4");
        const CliResult c = run_cli(args + " --threads 13");
        REQUIRE(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }

    SUBCASE("graph JSON parses back") {
        const CliResult r = run_cli("graph --partition 2,1,1 --n 5");
        REQUIRE(r.exit_code == 0);
        CHECK(graph_from_json(json::parse(r.out)) == build_graph(Partition::parse("2,1,1"), 5));
    }

    SUBCASE("invalid inputs exit with code 1") {
        CHECK(run_cli("volume --partition 1,2 --n 3").exit_code == 1);
        CHECK(run_cli("volume --partition 3,1 --n 3").exit_code == 1);
        CHECK(run_cli("volume --partition 2,1 --n 4 --netflow 1,1").exit_code == 1);
        CHECK(run_cli("volume --partition 2,1 --n 4 --netflow 0,1,1,1").exit_code == 1);
        CHECK(run_cli("table --partition 2,1 --from 5 --to 4").exit_code == 1);
    }

    SUBCASE("extra netflow entries are accepted") {
        const CliResult r = run_cli("volume --partition 2,1 --n 4 --netflow 1,1,1,1,9,9");
        REQUIRE(r.exit_code == 0);
        CHECK(json::parse(r.out)["lidskii"] == "3");
    }

    SUBCASE("csv has no headers") {
        const CliResult r = run_cli("table --partition 1 --from 2 --to 3 --format csv");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out == "2,1\n3,1\n");
    }
}
