#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string command = std::string(EXPANSE_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr)
        r.out += buffer.data();
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string data(const char* name) { return std::string(EXPANSE_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("expand writes the expanded complex") {
    const auto r = run("expand --complex " + data("delta0.json") + " --s 1,2,1,1,2");
    REQUIRE(r.status == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["facets"].size() == 6);
    CHECK(doc["vertices"].size() == 7);
}

TEST_CASE("expand a graph") {
    const auto r = run("expand --graph " + data("fig2_graph.json") + " --s 1,1,2,1,2");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out)["edges"].size() == 11);
}

TEST_CASE("check exit codes") {
    CHECK(run("check --property vd " + data("delta0.json")).status == 0);
    CHECK(run("check --property pure " + data("delta0.json")).status == 1);
    CHECK(run("check --property connected " + data("delta0.json")).status == 0);
    CHECK(run("check --property cm " + data("delta0.json")).status == 1);
    CHECK(run("check --property chordal " + data("g0.json")).status == 0);
    CHECK(run("check --property vd --budget 1 " + data("delta0.json")).status == 2);
    CHECK(run("check --property chordal " + data("delta0.json")).status == 3);
    CHECK(run("check --property bogus " + data("delta0.json")).status == 3);
}

TEST_CASE("check emits a JSON witness") {
    const auto r = run("--json check --property shellable " + data("delta0.json"));
    REQUIRE(r.status == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["result"] == "yes");
    CHECK(doc["witness"].size() == 3);
    const auto v = run("check --json --property vd " + data("delta0.json"));
    CHECK(json::parse(v.out)["witness"].contains("shedding_vertex"));
}

TEST_CASE("invariants by both routes") {
    const auto r = run("--json invariants " + data("delta0.json") + " --expand 1,1,2,1,2 --via both");
    REQUIRE(r.status == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["hochster"]["pd"] == 5);
    CHECK(doc["hochster"]["depth"] == 2);
    CHECK(doc["routes_agree"] == true);
    const auto g = run("--json invariants " + data("g0.json") + " --expand 2,2,3,2,3 --via both --what reg");
    REQUIRE(g.status == 0);
    const auto gd = json::parse(g.out);
    CHECK(gd["linear_quotients"]["reg"] == 2);
    CHECK(gd["hochster"]["reg"] == 2);
}

TEST_CASE("dual and shelling") {
    const auto d = run("dual --ideal " + data("delta0.json"));
    REQUIRE(d.status == 0);
    CHECK(json::parse(d.out)["monomials"] == json::parse(R"(["x1*x2*x3", "x3*x5", "x4*x5"])"));
    const auto s = run("shelling " + data("delta0.json") + " --expand 1,2,1,1,2");
    REQUIRE(s.status == 0);
    CHECK(json::parse(s.out)["expanded_order"].size() == 6);
}

TEST_CASE("search-conjecture writes a reproducible report") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = (dir / "expanse_report_a.json").string();
    const auto b = (dir / "expanse_report_b.json").string();
    REQUIRE(run("--seed 7 search-conjecture --trials 30 --n-max 5 --s-max 2 -o " + a).status == 0);
    REQUIRE(run("--seed 7 search-conjecture --trials 30 --n-max 5 --s-max 2 --serial -o " + b).status == 0);
    std::ifstream fa(a), fb(b);
    CHECK(json::parse(fa) == json::parse(fb));
}

TEST_CASE("bad arguments") {
    CHECK(run("expand --complex " + data("delta0.json") + " --s 1,0,1,1,1").status == 3);
    CHECK(run("expand --complex " + data("delta0.json") + " --s 1,1").status == 3);
    CHECK(run("invariants " + data("delta0.json") + " --field gf:4").status == 3);
    CHECK(run("nosuchcommand").status != 0);
}
