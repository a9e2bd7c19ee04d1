#include "doctest.h"

#include "logsurf/commands.hpp"
#include "logsurf/error.hpp"
#include "logsurf/scenario.hpp"

#include <fstream>
#include <sstream>

using namespace logsurf;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string data(const std::string& rel) { return std::string(LOGSURF_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("built-in scenarios match the data files") {
    CHECK(builtin_scenario_names() == std::vector<std::string>{"ex-462", "ex-825"});
    for (const auto& name : builtin_scenario_names()) {
        const auto text = builtin_scenario_text(name);
        REQUIRE(text);
        CHECK(std::string(*text) == slurp(data("scenarios/" + name + ".json")));
    }
    CHECK(fnv1a(*builtin_scenario_text("ex-462")) == 0xe2b07feau);
    CHECK(fnv1a(*builtin_scenario_text("ex-825")) == 0xb5b2fb53u);
    CHECK(fnv1a("") == 2166136261u);
    CHECK_FALSE(builtin_scenario_text("ex-000"));
}

TEST_CASE("built-in scenarios pass") {
    for (const auto& name : builtin_scenario_names()) {
        const Report r = run_scenario(load_scenario(name));
        CHECK(r.passed());
        for (const auto& c : r.checks) {
            INFO(c.id);
            CHECK(c.failures.empty());
        }
    }
    const Report r = run_scenario(load_scenario(data("scenarios/ex-825.json")));
    CHECK(r.checks.size() == 10);
}

TEST_CASE("report json round trip") {
    const Report r = run_scenario(load_scenario("ex-462"));
    const json j = report_to_json(r);
    const Report back = report_from_json(json::parse(j.dump()));
    CHECK(report_to_json(back) == j);
    CHECK(render_text(back, false) == render_text(r, false));
    CHECK(render_text(r, true).find("\033[32m") != std::string::npos);
}

TEST_CASE("scenario input errors") {
    try {
        parse_scenario("{\"lines\": 4,\n \"steps\": [}");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(load_scenario("no-such-scenario"), Error);
    const auto unknown = parse_scenario(R"({"lines": 3, "steps": [], "sets": {"s": ["L7"]}})");
    CHECK_THROWS_AS(run_scenario(unknown), Error);
    const auto bad_expr =
        parse_scenario(R"({"lines": 3, "steps": [], "checks": [{"kind": "volume", "divisor": "K + Q"}]})");
    CHECK_THROWS_AS(run_scenario(bad_expr), Error);
    const auto bad_kind = parse_scenario(R"({"lines": 3, "steps": [], "checks": [{"kind": "frobnicate"}]})");
    CHECK_THROWS_AS(run_scenario(bad_kind), Error);
}

TEST_CASE("failed expectations are reported, not thrown") {
    const auto s = parse_scenario(R"({"lines": 3, "steps": [["L0", "L1", "E"]],
        "checks": [{"id": "v", "kind": "volume", "divisor": "L0 + L1 + L2", "expect": {"volume": "1/2"}},
                   {"id": "z", "kind": "nef_threshold", "base": "K", "ray": "E"}]})");
    const Report r = run_scenario(s);
    REQUIRE(r.checks.size() == 2);
    CHECK_FALSE(r.checks[0].passed);
    CHECK(r.checks[0].outputs.at("volume") == "5");
    CHECK_FALSE(r.passed());
}

TEST_CASE("command reports") {
    const auto g = germ_report(read_graph_file(data("graphs/table1-no1.graph")), "no1");
    const auto& o = g.checks.at(0).outputs;
    CHECK(o.at("lc") == true);
    CHECK(o.at("klt") == false);
    CHECK(o.at("fork_is_lc_place") == true);
    CHECK(o.at("fork_square") == "-1/3");
    CHECK(o.at("special_fork") == 1);

    const auto a = wps_analyze_report({1, 0, 1, 1}, Rational(0), Rational(1));
    CHECK(a.passed());
    CHECK(a.checks.at(0).outputs.at("lc") == true);
    CHECK(a.checks.at(0).outputs.at("klt") == false);

    CHECK(wps_volume_report({6, 11, 25, 43}, 86, 0).checks.at(0).outputs.at("volume") == "1/825");
    CHECK(wps_hilbert_report({6, 11, 25, 43}, 86, 6).checks.at(0).outputs.at("h(n)") == "1");
    const auto nf = wps_normal_form_report({0, 1, 1, 1, 1, 1});
    CHECK(nf.checks.at(0).outputs.at("eps") == json::array({0, 1, 1, 1}));
    CHECK(nf.checks.at(0).outputs.at("verified") == true);
    const auto q = quadmin_report(QuadraticForm1D::composite(Rational(1, 462), 11, 10, Rational(1, 3)));
    CHECK(q.checks.at(0).outputs.at("t_star") == "24/25");
    const auto l22 = enumerate_lemma22_report();
    CHECK(l22.checks.at(0).outputs.at("tuples").size() == 2);
    const auto l34 = enumerate_lemma34_report(Rational(11, 42), {2, 3, 7}, 5, 6);
    CHECK(l34.checks.at(1).outputs.at("value") == "1/20");
}
