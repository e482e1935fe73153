#include "doctest.h"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GNET_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    CliResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("bad arguments exit with the usage code") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("build --k 0").code == 2);
    CHECK(run_cli("build --k -3").code == 2);
    CHECK(run_cli("route --k 2 --from 0,0 --to 5,5").code == 2);       // outside the diamond
    CHECK(run_cli("route --k 2 --from 0,0 --to abc").code == 2);
    CHECK(run_cli("route --k 2 --from 1,1 --to 1,1").code == 2);       // self-route
    CHECK(run_cli("route --k 2 --from 0,0 --to 1,1 --tree purple").code == 2);
    CHECK(run_cli("export --k 2 --what green").code == 2);
    CHECK(run_cli("export --k 2 --format xml").code == 2);
    CHECK(run_cli("verify 3..1").code == 2);
    CHECK(run_cli("verify abc").code == 2);
    CHECK(run_cli("verify 0").code == 2);
    CHECK(run_cli("split --k 2 --from 1,0 --to 1,0").code == 2);
    CHECK(run_cli("broadcast --k 2 --fault-node 0,1 --fault-edge 0,0:0,1").code == 2);
    CHECK(run_cli("broadcast --k 2 --fault-edge 0,0-0,1").code == 2);  // wrong separator
    CHECK(run_cli("broadcast --k 2 --fault-edge 0,0:1,1").code == 2);  // not an edge
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("build emits the network document") {
    const auto r = run_cli("build --k 2");
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("n") == 13);
    CHECK(doc.at("edges").size() == 26);
}

TEST_CASE("build --out writes the same bytes as stdout") {
    const std::string path = "cli_build_out.json";
    REQUIRE(run_cli("build --k 1 --out " + path).code == 0);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream file_content;
    file_content << in.rdbuf();
    CHECK(file_content.str() == run_cli("build --k 1").out);
    std::remove(path.c_str());
}

TEST_CASE("repeated runs are byte-identical") {
    CHECK(run_cli("build --k 3").out == run_cli("build --k 3").out);
    CHECK(run_cli("export --k 3 --what both --format json").out ==
          run_cli("export --k 3 --what both --format json").out);
    CHECK(run_cli("export --k 3 --what both --format dot").out ==
          run_cli("export --k 3 --what both --format dot").out);
}

TEST_CASE("export selects content and format") {
    const json doc = json::parse(run_cli("export --k 2 --what redprime").out);
    CHECK(doc.at("what") == "redprime");
    CHECK(doc.at("edges").size() == 12);
    const auto dot = run_cli("export --k 1 --what redprime --format dot");
    REQUIRE(dot.code == 0);
    CHECK(dot.out.find("\"0,-1\" -- \"1,0\" [color=red];") != std::string::npos);
}

TEST_CASE("route prints the walk and a per-hop trace") {
    const auto black = run_cli("route --k 2 --from 0,0 --to 1,1 --tree black");
    REQUIRE(black.code == 0);
    CHECK(black.out ==
          "0,0 0,1 1,1\n"
          "# send from 0,0 heading N toward relative offset 1,1\n"
          "# hop 1: 0,1 forwards E to 1,1\n"
          "# hop 2: 1,1 accepts\n");

    const auto red = run_cli("route --k 2 --from 0,0 --to 1,1 --tree redprime");
    REQUIRE(red.code == 0);
    CHECK(first_line(red.out) == "0,0 -1,0 -1,-1 1,1");

    // default tree is black, and translation moves the walk with the source
    CHECK(first_line(run_cli("route --k 2 --from 0,0 --to 1,1").out) == "0,0 0,1 1,1");
    CHECK(first_line(run_cli("route --k 2 --from 0,-2 --to 1,-1").out) == "0,-2 0,-1 1,-1");
}

TEST_CASE("verify passes on honest trees and fails on sabotaged ones") {
    const auto ok = run_cli("verify 1..3");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("verify: all checks passed") != std::string::npos);
    CHECK(ok.out.find("k=2 independence-black-red ok") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const auto bad = run_cli("verify 2 --sabotage");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("verify: FAILURES detected") != std::string::npos);
}

TEST_CASE("stats summary") {
    const auto r = run_cli("stats --k 2");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("k 2\n") != std::string::npos);
    CHECK(r.out.find("n 13\n") != std::string::npos);
    CHECK(r.out.find("edges 26\n") != std::string::npos);
    CHECK(r.out.find("diameter 2\n") != std::string::npos);
    CHECK(r.out.find("histogram {0:1, 1:4, 2:8}") != std::string::npos);
    CHECK(run_cli("stats --k 2 --all-pairs").out == r.out);
}

TEST_CASE("broadcast report over the wire") {
    const json doc = json::parse(run_cli("broadcast --k 2 --fault-node 0,1").out);
    CHECK(doc.at("root") == json::array({0, 0}));
    CHECK(doc.at("fault").at("kind") == "node");
    CHECK(doc.at("transmissions").at("black") == 7);
    CHECK(doc.at("transmissions").at("red") == 12);
    CHECK(doc.at("blocked") == json::array({json::array({0, 1})}));

    const json link = json::parse(run_cli("broadcast --k 2 --fault-edge 0,0:0,1").out);
    CHECK(link.at("fault").at("kind") == "edge");
    CHECK(link.at("transmissions").at("black") == 6);
    CHECK(link.at("blocked") == json::array());
    CHECK(link.at("delivered").size() == 13);

    const json clean = json::parse(run_cli("broadcast --k 1 --root 0,1").out);
    CHECK(clean.at("fault").at("kind") == "none");
    CHECK(clean.at("delivered").size() == 5);
}

TEST_CASE("split report over the wire") {
    const json doc = json::parse(run_cli("split --k 2 --from 0,0 --to 1,1").out);
    CHECK(doc.at("source") == json::array({0, 0}));
    CHECK(doc.at("dest") == json::array({1, 1}));
    CHECK(doc.at("transmissions").at("black") == 2);
    CHECK(doc.at("transmissions").at("red") == 3);
    CHECK(doc.at("delivered") == json::array({json::array({1, 1})}));
}
