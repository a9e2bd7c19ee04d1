#include "doctest.h"

#include "logsurf/dualgraph.hpp"
#include "logsurf/error.hpp"
#include "logsurf/graph_io.hpp"
#include "support.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace logsurf;
using testsupport::uniform;

namespace {

GraphFile load(const std::string& name) { return read_graph_file(std::string(LOGSURF_DATA_DIR) + "/graphs/" + name); }

std::set<std::string> all_but(const DualGraph& g, const std::string& keep) {
    std::set<std::string> out;
    for (const auto& v : g.vertices())
        if (v.label != keep) out.insert(v.label);
    return out;
}

}  // namespace

TEST_CASE("cyclic types of chains") {
    CHECK(cyclic_type({-2}) == CyclicType{2, 1});
    CHECK(cyclic_type({-3, -2, -2}) == CyclicType{7, 3});
    CHECK(cyclic_type({-2, -2, -2, -2, -2}) == CyclicType{6, 5});
    CHECK(cyclic_type(testsupport::hj_chain(22, 13)) == CyclicType{22, 13});
    CHECK(cyclic_type(testsupport::hj_chain(25, 3)) == CyclicType{25, 3});
    CHECK(CyclicType{7, 5}.normalized() == CyclicType{7, 3});
    CHECK_THROWS_AS(cyclic_type({-1, -2}), Error);
    CHECK_THROWS_AS(cyclic_type({}), Error);
}

TEST_CASE("graph files") {
    const auto a1 = load("a1.graph");
    const auto g = classify_germ(a1.graph);
    CHECK(g.is_klt);
    REQUIRE(g.order);
    CHECK(*g.order == 2);

    const auto no1 = load("table1-no1.graph");
    const QMatrix m = intersection_matrix(no1.graph);
    REQUIRE(m.rows() == 6);
    const auto f = no1.graph.index_of("F");
    int ones = 0;
    for (std::size_t j = 0; j < 6; ++j)
        if (j != f && m(f, j) == Rational(1)) ++ones;
    CHECK(ones == 3);
    const auto c1 = classify_germ(no1.graph);
    CHECK(c1.is_lc);
    CHECK_FALSE(c1.is_klt);
    CHECK(c1.lc_places == std::vector<std::string>{"F"});
    CHECK(contract_and_square(no1.graph, all_but(no1.graph, "F"), "F") == Rational(-1, 3));
    CHECK(table1_number(no1.graph) == 1);

    const auto no2 = load("table1-no2.graph");
    const auto c2 = classify_germ(no2.graph);
    CHECK(c2.is_lc);
    CHECK_FALSE(c2.is_klt);
    CHECK(c2.discrepancy_coeffs.at("F") == Rational(1));
    CHECK(table1_number(no2.graph) == 2);
    CHECK(fork_branches(no2.graph, "F") == std::vector<CyclicType>{{2, 1}, {3, 1}, {6, 5}});

    const auto ext = load("lemma34-extended.graph");
    const auto ce = classify_germ(ext.graph, ext.boundary_coeffs);
    CHECK(ce.is_plt);
    std::vector<std::int64_t> orders;
    for (const auto& p : ce.points) orders.push_back(p.determinant);
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<std::int64_t>{2, 3, 7});

    const auto bad = load("not-negdef.graph");
    CHECK_THROWS_AS(classify_germ(bad.graph), Error);
}

TEST_CASE("graph parser errors and round trip") {
    CHECK_THROWS_AS(parse_graph("E x\n"), Error);
    CHECK_THROWS_AS(parse_graph("E 2 frobnicate\n"), Error);
    CHECK_THROWS_AS(parse_graph("E 2\nE -- Z\n"), Error);
    try {
        parse_graph("A 2\nB two\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    const auto no2 = load("table1-no2.graph");
    const auto again = parse_graph(format_graph(no2));
    CHECK(intersection_matrix(again.graph) == intersection_matrix(no2.graph));
    const auto nodal = parse_graph("N 1 node\n");
    CHECK(nodal.graph.vertices()[0].arithmetic_genus() == 1);
}

TEST_CASE("non-klt log canonical cases") {
    // (a) nodal rational curve, (b) elliptic curve.
    const auto a = classify_germ(parse_graph("N 1 node\n").graph);
    CHECK(a.is_lc);
    CHECK_FALSE(a.is_klt);
    const auto b = classify_germ(parse_graph("E 1 1\n").graph);
    CHECK(b.is_lc);
    CHECK_FALSE(b.is_klt);
    // (c) cycle with one (-3)-curve.
    const auto c = classify_germ(parse_graph("A 3\nB 2\nC 2\nA -- B\nB -- C\nC -- A\n").graph);
    CHECK(c.is_lc);
    CHECK_FALSE(c.is_klt);
    // (d) four (-2) tails on a (-3) fork.
    const auto d = classify_germ(testsupport::fork_graph(-3, {{-2}, {-2}, {-2}, {-2}}));
    CHECK(d.is_lc);
    CHECK_FALSE(d.is_klt);
    // Branch orders (2,3,7) lie outside the log canonical range.
    const auto e = classify_germ(testsupport::fork_graph(-2, {{-2}, {-3}, {-7}}));
    CHECK_FALSE(e.is_lc);
}

TEST_CASE("forks whose contracted square is -1/3") {
    const auto tuples = enumerate_lemma22();
    REQUIRE(tuples.size() == 2);
    std::set<std::vector<std::int64_t>> got;
    for (const auto& t : tuples) {
        CHECK(t.e0_square == -2);
        CHECK(lemma22_square(t) == Rational(-1, 3));
        got.insert({t.n[0], t.n[1], t.n[2], t.q[0], t.q[1], t.q[2]});
        // The contracted fork of the realized graph has the same square.
        std::vector<std::vector<std::int64_t>> branches;
        for (int i = 0; i < 3; ++i) branches.push_back(testsupport::hj_chain(t.n[i], t.q[i]));
        const auto g = testsupport::fork_graph(t.e0_square, branches);
        CHECK(contract_and_square(g, all_but(g, "F"), "F") == Rational(-1, 3));
    }
    CHECK(got == std::set<std::vector<std::int64_t>>{{3, 3, 3, 1, 2, 2}, {2, 3, 6, 1, 1, 5}});

    // Full re-scan: any realizable configuration with square -1/3 is in the list.
    const std::int64_t triples[3][3] = {{3, 3, 3}, {2, 4, 4}, {2, 3, 6}};
    int matches = 0;
    for (const auto& n : triples)
        for (std::int64_t e0 = -1; e0 >= -12; --e0)
            for (std::int64_t q0 = 1; q0 < n[0]; ++q0)
                for (std::int64_t q1 = 1; q1 < n[1]; ++q1)
                    for (std::int64_t q2 = 1; q2 < n[2]; ++q2) {
                        if (std::gcd(q0, n[0]) != 1 || std::gcd(q1, n[1]) != 1 || std::gcd(q2, n[2]) != 1) continue;
                        const auto g = testsupport::fork_graph(
                            e0, {testsupport::hj_chain(n[0], q0), testsupport::hj_chain(n[1], q1),
                                 testsupport::hj_chain(n[2], q2)});
                        const Rational sq = contract_and_square(g, all_but(g, "F"), "F");
                        const bool returned = std::any_of(tuples.begin(), tuples.end(), [&](const Lemma22Tuple& t) {
                            std::multiset<std::pair<std::int64_t, std::int64_t>> a{{n[0], q0}, {n[1], q1}, {n[2], q2}};
                            std::multiset<std::pair<std::int64_t, std::int64_t>> b{
                                {t.n[0], t.q[0]}, {t.n[1], t.q[1]}, {t.n[2], t.q[2]}};
                            return a == b && t.e0_square == e0;
                        });
                        CHECK((sq == Rational(-1, 3)) == returned);
                        if (returned) ++matches;
                    }
    CHECK(matches > 0);
}

TEST_CASE("residues and adjunction degrees") {
    const auto hits = residue_search(Rational(11, 42), {2, 3, 7});
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].q == std::vector<std::int64_t>{1, 1, 3});
    CHECK(adjunction_degree({2, 3, 7}) == Rational(1, 42));
    CHECK(adjunction_degree({2, 4, 5}) == Rational(1, 20));
    const auto small = min_positive_adjunction(5, 6);
    REQUIRE(small);
    CHECK(small->value == Rational(1, 20));
    const auto wide = min_positive_adjunction(50, 4);
    REQUIRE(wide);
    CHECK(wide->value == Rational(1, 42));
    CHECK(wide->orders == std::vector<std::int64_t>{2, 3, 7});
}

TEST_CASE("cyclic_type agrees with the determinant on random chains") {
    std::mt19937 rng(testsupport::kSeed + 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> chain(static_cast<std::size_t>(uniform(rng, 1, 10)));
        for (auto& e : chain) e = uniform(rng, -5, -2);
        const auto ct = cyclic_type(chain);
        CHECK(ct.n == graph_determinant(make_chain(chain)));
        CHECK(std::gcd(ct.n, ct.q) == 1);
        CHECK(testsupport::hj_chain(ct.n, ct.q) == chain);
    }
}

TEST_CASE("discrepancy residuals vanish on random negative definite trees") {
    std::mt19937 rng(testsupport::kSeed + 2);
    int accepted = 0;
    while (accepted < 200) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 8));
        DualGraph g;
        for (std::size_t i = 0; i < n; ++i) g.add_vertex({"E" + std::to_string(i), uniform(rng, -5, -2)});
        for (std::size_t i = 1; i < n; ++i)
            g.add_edge("E" + std::to_string(uniform(rng, 0, static_cast<std::int64_t>(i) - 1)), "E" + std::to_string(i));
        const QMatrix m = intersection_matrix(g);
        if (!is_negative_definite(m)) continue;
        ++accepted;
        const auto b = solve_discrepancies(g);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& vi = g.vertices()[i];
            Rational residual = Rational(-2) - Rational(static_cast<long long>(vi.self_int));  // K.E_i
            for (std::size_t j = 0; j < n; ++j) residual += b.at(g.vertices()[j].label) * m(i, j);
            CHECK(residual == Rational(0));
        }
    }
}

TEST_CASE("contracting branches adds q/n to the fork") {
    std::mt19937 rng(testsupport::kSeed + 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<std::int64_t>> branches(3);
        Rational expected(uniform(rng, -6, -2));
        const auto e0 = static_cast<std::int64_t>(expected.num().get_si());
        for (auto& br : branches) {
            br.resize(static_cast<std::size_t>(uniform(rng, 1, 4)));
            for (auto& e : br) e = uniform(rng, -4, -2);
            const auto ct = cyclic_type(br);
            expected += Rational(ct.q, ct.n);
        }
        const auto g = testsupport::fork_graph(e0, branches);
        CHECK(contract_and_square(g, all_but(g, "F"), "F") == expected);
    }
}
