#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csurg/json_io.hpp"
#include "fronts_common.hpp"

using namespace csurg;
using nlohmann::json;

TEST_CASE("front schema round-trip") {
    json j = {{"events", json::array({json::array({"lcusp", 1}), json::array({"rcusp", 1})})},
              {"orientation", json::array({1})}};
    auto f = io::front_from_json(j);
    CHECK(f.component_count() == 1);
    auto back = io::front_to_json(f);
    auto f2 = io::front_from_json(back);
    CHECK(f2.events() == f.events());
    CHECK(io::front_to_json(f2) == back);

    CHECK_THROWS_AS(io::front_from_json(json{{"events", 3}}), io::SchemaError);
    CHECK_THROWS_AS(
        io::front_from_json(json{{"events", json::array({json::array({"zcusp", 1})})}}),
        io::SchemaError);
}

TEST_CASE("pd schema round-trip") {
    json j = {{"crossings", json::array()}, {"unknots", 1}};
    auto p = io::pd_from_json(j);
    CHECK(p.unknots == 1);
    CHECK(io::pd_from_json(io::pd_to_json(p)) == p);

    auto t = front::front_to_pd(front::validate_front(testfronts::rh_trefoil()));
    CHECK(io::pd_from_json(io::pd_to_json(t)) == t);
}

TEST_CASE("diagram schema round-trip and validation") {
    json j = {{"components", json::array({json{{"abstract", json{{"tag", "L"}}},
                                               {"tb", -1},
                                               {"rot", 0},
                                               {"coeff", "-1/2"}}})},
              {"linking", json::array({json::array({0})})}};
    auto d = io::diagram_from_json(j);
    CHECK(d.size() == 1);
    CHECK(d.component(0).coeff == make_rat(-1, 2));
    auto j2 = io::diagram_to_json(d);
    auto d2 = io::diagram_from_json(j2);
    CHECK(d2.component(0).tb == d.component(0).tb);
    CHECK(io::diagram_to_json(d2) == j2);

    // fronts carried inside diagrams: tb consistency enforced
    json jf = {{"components", json::array({json{{"front", io::front_to_json(front::validate_front(
                                                               testfronts::unknot()))},
                                                {"tb", 5},
                                                {"coeff", "-1"}}})},
               {"linking", json::array({json::array({0})})}};
    CHECK_THROWS_AS(io::diagram_from_json(jf), io::SchemaError);
}

TEST_CASE("report json shape and determinism") {
    json j = {{"components", json::array({json{{"abstract", json{{"tag", "L"}}},
                                               {"tb", -3},
                                               {"rot", 2},
                                               {"coeff", "-2"}}})},
              {"linking", json::array({json::array({0})})}};
    auto d = io::diagram_from_json(j);
    auto r1 = io::report_to_json(d);
    auto r2 = io::report_to_json(d);
    CHECK(r1 == r2);
    CHECK(r1.contains("h1"));
    CHECK(r1.contains("euler"));
    CHECK(r1.contains("d3"));
    CHECK(r1["h1"] == json::array({"5"}));
    CHECK(r1["euler"].size() == 2);
    CHECK(r1["d3"].size() == 2);
    for (const auto& v : r1["d3"]) {
        std::string s = v.get<std::string>();
        CHECK((s == "nontorsion" || s.find('/') != std::string::npos));
    }
}

TEST_CASE("move script schema") {
    json j = {{"moves", json::array({json::array({"cancel", 0, 1}),
                                     json::array({"slide", 0, 1, "+"}),
                                     json::array({"rolfsen", 2, json::array({"+", "-"})})})}};
    auto moves = io::moves_from_json(j);
    REQUIRE(moves.size() == 3);
    CHECK(moves[0].kind == kirby::Move::Kind::Cancel);
    CHECK(moves[1].eps == 1);
    CHECK(moves[2].signs == std::vector<int>{1, -1});
    CHECK_THROWS_AS(io::moves_from_json(json{{"moves", json::array({json::array({"warp", 1})})}}),
                    io::SchemaError);
}

TEST_CASE("obstruction report json") {
    auto k = slopes::KnotClass::get(slopes::KnotTag::Fig8);
    auto rep = slopes::check_characterizing(k, -5, 0, Rat(-1));
    auto j = io::obstruction_to_json(rep);
    CHECK(j["verdict"] == "candidate_survives");
    CHECK(j["survivors"].size() == 1);
    CHECK(j["survivors"][0]["tb"] == 7);
    CHECK(j["query"]["slope"] == "-1/1");
}

#ifdef CSURG_CLI_PATH
#include <array>
#include <cstdio>

namespace {

std::string run_cli(const std::string& args) {
    std::string cmd = std::string(CSURG_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    pclose(p);
    return out;
}

}  // namespace

TEST_CASE("cli determinism and exit codes") {
    std::string fx = CSURG_FIXTURE_DIR;
    auto a = run_cli("invariants " + fx + "/stabilized_unknot_minus2.diagram.json");
    auto b = run_cli("invariants " + fx + "/stabilized_unknot_minus2.diagram.json");
    CHECK(a == b);
    CHECK(a.find("\"h1\"") != std::string::npos);
    CHECK(a.find("5") != std::string::npos);

    auto f = run_cli("front " + fx + "/rh_trefoil_maxtb.front.json");
    CHECK(f.find("\"tb\": 1") != std::string::npos);

    // usage error
    std::string cmd = std::string(CSURG_CLI_PATH) + " nonsense 2>/dev/null";
    int rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 64);
    // schema error
    cmd = std::string(CSURG_CLI_PATH) + " invariants " + fx + "/cancel_script.json 2>/dev/null";
    rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 65);
}
#endif
