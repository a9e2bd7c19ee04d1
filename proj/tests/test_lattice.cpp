#include "doctest.h"

#include "logsurf/error.hpp"
#include "logsurf/lattice.hpp"
#include "logsurf/recipe_io.hpp"
#include "logsurf/scenario.hpp"

using namespace logsurf;

namespace {

SurfaceModel model(const std::string& name) { return build_from_recipe(load_scenario(name).recipe.recipe); }

}  // namespace

TEST_CASE("plane with lines") {
    const auto m = build_from_recipe({3, {}});
    CHECK(m.rank() == 1);
    CHECK(m.self_intersection("L0") == Rational(1));
    CHECK(m.product(m.canonical_class(), m.canonical_class()) == Rational(9));
    CHECK(m.incident("L0", "L2"));
}

TEST_CASE("blow-ups update classes and incidence") {
    const auto m = build_from_recipe({3, {{"L0", "L1", "E"}, {"E", "L0", ""}}});
    CHECK(m.rank() == 3);
    CHECK(m.self_intersection("L0") == Rational(-1));
    CHECK(m.self_intersection("L1") == Rational(0));
    CHECK(m.self_intersection("E") == Rational(-2));
    CHECK(m.self_intersection("E2") == Rational(-1));
    CHECK_FALSE(m.incident("L0", "L1"));
    CHECK_FALSE(m.incident("L0", "E"));
    CHECK(m.incident("E", "L1"));
    CHECK(m.product(m.canonical_class(), m.canonical_class()) == Rational(7));
    // Adjunction on every visible rational curve.
    for (const auto& l : m.labels())
        CHECK(m.product(m.canonical_class(), m.class_of(l)) + m.self_intersection(l) == Rational(-2));
    CHECK_THROWS_AS(build_from_recipe({3, {{"L0", "L9", ""}}}), Error);
    CHECK_THROWS_AS(build_from_recipe({3, {{"L0", "L1", "X"}, {"L0", "L1", "Y"}}}), Error);
    CHECK_THROWS_AS(build_from_recipe({3, {{"L0", "L1", "L2"}}}), Error);
}

TEST_CASE("example surfaces have the displayed self-intersections") {
    const auto m = model("ex-825");
    CHECK(m.rank() == 18);
    const std::map<std::string, int> squares = {
        {"L0", -2}, {"L1", -4},  {"L2", -9},  {"L3", -2},  {"A01", -3}, {"A03", -2}, {"C01", -2},
        {"A12", -2}, {"B12", -2}, {"B23", -2}, {"A23", -2}, {"D1", -2},  {"D5", -2},  {"C0", -1},
        {"W03", -1}, {"W01", -1}, {"W12", -1}, {"W23", -1}};
    for (const auto& [l, s] : squares) CHECK(m.self_intersection(l) == Rational(s));
}

TEST_CASE("log pullback on the 1/825 surface") {
    const auto m = model("ex-825");
    const auto lp = log_pullback(m, {Rational(10, 11), Rational(8, 11), Rational(9, 11), Rational(6, 11)});
    CHECK(lp.coeffs.at("C0") == Rational(-2, 11));
    CHECK(lp.coeffs.at("D1") == Rational(8, 11));
    CHECK(lp.coeffs.at("D5") == Rational(0));
    CHECK(lp.coeffs.at("A01") == Rational(7, 11));
    CHECK(lp.coeffs.at("W12") == Rational(0));
    CHECK(lp.log_class == m.zero_class());
    // Independent recomputation of the class.
    LatticeClass c = m.canonical_class();
    for (const auto& [l, b] : lp.coeffs) {
        const auto& cl = m.class_of(l);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b * cl[i];
    }
    CHECK(c == m.zero_class());
    CHECK_THROWS_AS(log_pullback(m, {Rational(1)}), Error);
}

TEST_CASE("germ export of the boundary cluster") {
    const auto m = model("ex-462");
    const auto g = germ_of_cluster(m, {"A03", "A01", "L2", "A12", "B12"}, {"L0"});
    CHECK(g.vertex("L0").self_int == -1);
    CHECK_FALSE(g.vertex("L0").is_exceptional);
    CHECK(g.vertex("A01").self_int == -3);
    CHECK_THROWS_AS(germ_of_cluster(build_from_recipe({3, {}}), {"L0"}), Error);
    const auto clusters = connected_clusters(m, {"L1", "L3", "C01", "B23", "A23", "L2", "A12", "B12"});
    CHECK(clusters.size() == 2);
}

TEST_CASE("recipe json and divisor expressions") {
    const auto rf = parse_recipe(R"({"lines": 3, "steps": [["L0", "L1", "E"]], "divisors": {"B": {"L0": "1/2", "E": 1}}})");
    const auto m = build_from_recipe(rf.recipe);
    const auto d = parse_divisor_expr("K + 2 B - 1/2 L2", rf.divisors, m);
    CHECK(d.canonical == Rational(1));
    CHECK(d.boundary.at("L0") == Rational(1));
    CHECK(d.boundary.at("E") == Rational(2));
    CHECK(d.boundary.at("L2") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_divisor_expr("K + Z", rf.divisors, m), Error);
    CHECK(recipe_to_json(rf) == recipe_to_json(recipe_from_json(recipe_to_json(rf))));
    try {
        parse_recipe("{\n  \"lines\": 3,\n  \"steps\": [,]\n}");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}
