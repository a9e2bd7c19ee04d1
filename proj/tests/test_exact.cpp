#include "doctest.h"

#include "logsurf/error.hpp"
#include "logsurf/exact.hpp"
#include "support.hpp"

#include <random>

using namespace logsurf;

TEST_CASE("rational parsing and arithmetic") {
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(10, 11).str() == "10/11");
    CHECK(Rational(-3, 1).str() == "-3");
    CHECK(floor_div(Rational(-7, 2)) == Rational(-4));
    CHECK(ceil(Rational(7, 2)) == Rational(4));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("determinant and solving") {
    const QMatrix a2 = {{-2, 1}, {1, -2}};
    CHECK(determinant(a2) == Rational(3));
    CHECK(is_negative_definite(a2));
    CHECK(solve_linear(a2, {1, 0}) == QVector{Rational(-2, 3), Rational(-1, 3)});
    const QMatrix cycle = {{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}};
    CHECK_FALSE(is_negative_definite(cycle));
    CHECK(determinant(cycle) == Rational(0));
    CHECK(rank(cycle) == 2);
    CHECK_THROWS_AS(solve_linear(cycle, {1, 0, 0}), Error);
    CHECK(determinant(QMatrix(0, 0)) == Rational(1));
}

TEST_CASE("lp feasibility with certificates") {
    const QMatrix a = {{1, 1}};
    auto r = lp_feasible(a, {3});
    REQUIRE(std::holds_alternative<Feasible>(r));
    CHECK(verify_feasibility(a, {3}, r));
    auto r2 = lp_feasible(a, {-1});
    REQUIRE(std::holds_alternative<Infeasible>(r2));
    CHECK(verify_feasibility(a, {-1}, r2));
}

TEST_CASE("lp certificates re-verify on random systems") {
    std::mt19937 rng(testsupport::kSeed);
    int feasible = 0, infeasible = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = static_cast<std::size_t>(testsupport::uniform(rng, 1, 4));
        const auto n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 6));
        QMatrix a(m, n);
        QVector b(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(testsupport::uniform(rng, -3, 3));
            b[i] = Rational(testsupport::uniform(rng, -4, 4));
        }
        const auto r = lp_feasible(a, b);
        CHECK(verify_feasibility(a, b, r));
        if (const auto* f = std::get_if<Feasible>(&r)) {
            ++feasible;
            REQUIRE(f->x.size() == n);
            for (const auto& x : f->x) CHECK(x.sign() >= 0);
            CHECK(a * f->x == b);
        } else {
            ++infeasible;
            const auto& y = std::get<Infeasible>(r).certificate;
            REQUIRE(y.size() == m);
            for (std::size_t j = 0; j < n; ++j) {
                Rational col;
                for (std::size_t i = 0; i < m; ++i) col += y[i] * a(i, j);
                CHECK(col.sign() <= 0);
            }
            CHECK(dot(y, b).sign() > 0);
        }
    }
    CHECK(feasible > 0);
    CHECK(infeasible > 0);
}

TEST_CASE("one-variable quadratic minimum") {
    const auto f = QuadraticForm1D::composite(Rational(1, 462), 11, 10, Rational(1, 3));
    const auto m = minimize_quadratic(f);
    CHECK(m.t_star == Rational(24, 25));
    CHECK(m.f_min == Rational(1, 825));
    const auto g = QuadraticForm1D::composite(Rational(1, 260), 13, 12, Rational(1, 3));
    const auto mg = minimize_quadratic(g);
    CHECK(mg.t_star == Rational(56, 59));
    CHECK(mg.f_min == Rational(1, 767));
    // Direct expansion of the composite form.
    for (int k = 0; k <= 10; ++k) {
        const Rational t(k, 10);
        const Rational direct = Rational(1, 462) * pow(11 * t - 10, 2) + Rational(1, 3) * pow(1 - t, 2);
        CHECK(f(t) == direct);
    }
    CHECK(f(m.t_star + Rational(1, 1000)) > m.f_min);
    CHECK(f(m.t_star - Rational(1, 1000)) > m.f_min);
    CHECK_THROWS_AS(minimize_quadratic({Rational(0), Rational(1), Rational(0)}), Error);
    CHECK_THROWS_AS(minimize_quadratic({Rational(-1), Rational(0), Rational(0)}), Error);
}
