// One line per acceptance criterion; exit status is nonzero if any fails.
#include "logsurf/commands.hpp"
#include "logsurf/dualgraph.hpp"
#include "logsurf/error.hpp"
#include "logsurf/positivity.hpp"
#include "logsurf/scenario.hpp"
#include "logsurf/wps.hpp"
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>

using namespace logsurf;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const CheckRecord& check(const Report& r, const std::string& id) {
    for (const auto& c : r.checks)
        if (c.id == id) return c;
    throw Error(ErrorKind::InvalidArgument, "no check " + id);
}

Outcome c1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const Report r = run_scenario(load_scenario("ex-825"));
    for (const char* id : {"log-pullback", "positive-part", "volume"}) o.require(check(r, id).passed, id);
    o.require(check(r, "volume").outputs.at("volume") == "1/825", "volume value");
    o.require(check(r, "log-pullback").outputs.at("coeffs").at("C0") == "-2/11", "C0 coefficient");
    o.require(check(r, "log-pullback").outputs.at("class_zero") == true, "class of K + C'");
    o.require(seconds_since(t0) < 1.0, "runtime");
    return o;
}

Outcome c2() {
    Outcome o;
    const Report r = run_scenario(load_scenario("ex-825"));
    o.require(check(r, "contraction").passed, "contraction expectations");
    o.require(check(r, "contraction").outputs.at("picard_number") == 2, "picard number");
    return o;
}

Outcome c3() {
    Outcome o;
    const Report r = run_scenario(load_scenario("ex-462"));
    for (const char* id : {"positive-part", "volume", "boundary-germ"}) o.require(check(r, id).passed, id);
    o.require(check(r, "volume").outputs.at("volume") == "1/462", "volume value");
    o.require(check(r, "boundary-germ").outputs.at("orders") == nlohmann::json::array({2, 3, 7}), "orders");
    return o;
}

Outcome c4() {
    Outcome o;
    const Report r = run_scenario(load_scenario("ex-462"));
    const auto& pet = check(r, "pet");
    o.require(pet.passed, "pet expectations");
    o.require(pet.outputs.at("value") == "10/11", "value");
    o.require(pet.outputs.at("zero_class_at_value") == true, "zero class");
    o.require(pet.outputs.at("in_forbidden_interval") == false, "interval");
    return o;
}

Outcome c5() {
    Outcome o;
    const Report r = run_scenario(load_scenario("ex-825"));
    o.require(check(r, "nef-threshold").passed, "nef threshold");
    o.require(check(r, "nef-threshold").outputs.at("value") == "24/25", "threshold value");
    const auto a = minimize_quadratic(QuadraticForm1D::composite(Rational(1, 462), 11, 10, Rational(1, 3)));
    const auto b = minimize_quadratic(QuadraticForm1D::composite(Rational(1, 260), 13, 12, Rational(1, 3)));
    o.require(a.t_star == Rational(24, 25) && a.f_min == Rational(1, 825), "first form");
    o.require(b.t_star == Rational(56, 59) && b.f_min == Rational(1, 767), "second form");
    return o;
}

Outcome c6() {
    Outcome o;
    std::set<std::vector<std::int64_t>> got;
    for (const auto& t : enumerate_lemma22()) {
        o.require(t.e0_square == -2, "fork square");
        got.insert({t.n[0], t.n[1], t.n[2], t.q[0], t.q[1], t.q[2]});
    }
    o.require(got == std::set<std::vector<std::int64_t>>{{3, 3, 3, 1, 2, 2}, {2, 3, 6, 1, 1, 5}}, "fork tuples");
    const auto hits = residue_search(Rational(11, 42), {2, 3, 7});
    o.require(hits.size() == 1 && hits[0].q == std::vector<std::int64_t>{1, 1, 3}, "residues");
    return o;
}

Outcome c7() {
    Outcome o;
    o.require(adjunction_degree({2, 3, 7}) == Rational(1, 42), "(2,3,7)");
    const auto small = min_positive_adjunction(5, 6);
    o.require(small && small->value == Rational(1, 20), "orders <= 5");
    const auto wide = min_positive_adjunction(50, 4);
    o.require(wide && wide->value == Rational(1, 42), "orders <= 50");
    const Report r = run_scenario(load_scenario("ex-462"));
    const auto& chain = check(r, "identity-chain");
    o.require(chain.passed, "identity chain");
    o.require(chain.inputs.at("c") == "10/11", "c");
    return o;
}

Outcome c8() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    o.require(wps_volume(weights_6_11_25_43(), 86) == Rational(1, 825), "volume 1/825");
    o.require(wps_volume({6, 11, 14, 21}, 42, 11) == Rational(1, 462), "volume 1/462");
    const auto basis = monomial_basis(weights_6_11_25_43(), 86);
    o.require(std::set<Exponent>(basis.begin(), basis.end()) ==
                  std::set<Exponent>(degree86_monomials().begin(), degree86_monomials().end()),
              "monomial basis");
    const std::vector<std::pair<int, int>> params = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (const auto& eps : legal_epsilons())
        for (const auto& [s, t] : params) {
            const auto v = classify_hypersurface(eps, Rational(s), Rational(t));
            const bool special = eps == Epsilon{1, 0, 1, 1} && (s != 0 || t != 0);
            o.require(v.is_lc == special && v.is_klt == (special && s != 0) && v.verified, "grid cell");
        }
    const auto d = classify_hypersurface({1, 0, 1, 1}, Rational(0), Rational(1));
    o.require(d.charts[1].verdict == ChartVerdict::A1, "A1 at P1");
    o.require(d.charts[2].verdict == ChartVerdict::Smooth, "smooth at P2");
    o.require(d.charts[0].multiplicity == 2 && d.charts[0].quadratic_rank == 1, "corank 2 at P0");
    for (const auto& [s, t] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}}) {
        const auto v = classify_hypersurface({1, 0, 1, 1}, Rational(s), Rational(t));
        for (const auto& n : v.node_only) o.require(n.status == NodeCertificate::Certified, "node certificate");
        o.require(v.node_only.size() == 3, "three charts");
    }
    o.require(seconds_since(t0) < 30.0, "runtime");
    return o;
}

Outcome c9() {
    Outcome o;
    const auto h = hilbert_series(weights_6_11_25_43(), 86, 20000);
    const Rational ratio(Integer(2 * h.back()), Integer(Integer(20000) * 20000));
    o.require((ratio - Rational(1, 825)).abs() < Rational(1, 100) * Rational(1, 825), "asymptotic ratio");
    return o;
}

Outcome c10() {
    Outcome o;
    std::mt19937 rng(testsupport::kSeed);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = build_from_recipe(testsupport::random_recipe(rng, 6));
        QDivisor d;
        for (const auto& l : m.labels()) d[l] = Rational(testsupport::uniform(rng, 0, 6), 3);
        const auto z = zariski(m, LogDivisor::curves(d));
        o.require(m.product(z.positive_class, m.class_of(z.negative)).is_zero(), "orthogonality");
        for (const auto& l : m.labels()) o.require(m.product(z.positive_class, m.class_of(l)).sign() >= 0, "nef");
        o.require(is_effective(z.negative), "effective");
        o.require(z.support.empty() || is_negative_definite(m.gram(z.support)), "negative definite");
        auto order = m.labels();
        std::shuffle(order.begin(), order.end(), rng);
        ZariskiOptions opts;
        opts.processing_order = order;
        o.require(zariski(m, LogDivisor::curves(d), opts).positive_class == z.positive_class, "order independence");
    }
    int trees = 0;
    while (trees < 200) {
        const auto n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 8));
        DualGraph g;
        for (std::size_t i = 0; i < n; ++i) g.add_vertex({"E" + std::to_string(i), testsupport::uniform(rng, -5, -2)});
        for (std::size_t i = 1; i < n; ++i)
            g.add_edge("E" + std::to_string(testsupport::uniform(rng, 0, static_cast<std::int64_t>(i) - 1)),
                       "E" + std::to_string(i));
        const QMatrix mat = intersection_matrix(g);
        if (!is_negative_definite(mat)) continue;
        ++trees;
        const auto b = solve_discrepancies(g);
        for (std::size_t i = 0; i < n; ++i) {
            Rational r = Rational(-2) - Rational(static_cast<long long>(g.vertices()[i].self_int));
            for (std::size_t j = 0; j < n; ++j) r += b.at(g.vertices()[j].label) * mat(i, j);
            o.require(r.is_zero(), "discrepancy residual");
        }
    }
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> chain(static_cast<std::size_t>(testsupport::uniform(rng, 1, 10)));
        for (auto& e : chain) e = testsupport::uniform(rng, -5, -2);
        o.require(cyclic_type(chain).n == graph_determinant(make_chain(chain)), "chain determinant");
    }
    for (int trial = 0; trial < 100; ++trial) {
        std::array<Rational, 6> a;
        for (auto& c : a)
            c = testsupport::uniform(rng, 0, 3) == 0
                    ? Rational(0)
                    : Rational(testsupport::uniform(rng, -9, 9), testsupport::uniform(rng, 1, 5));
        if (std::all_of(a.begin(), a.end(), [](const Rational& c) { return c.is_zero(); })) a[0] = 1;
        o.require(verify_normal_form(a, normal_form(a)), "normal form round trip");
    }
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = static_cast<std::size_t>(testsupport::uniform(rng, 1, 4));
        const auto n = static_cast<std::size_t>(testsupport::uniform(rng, 1, 6));
        QMatrix a(m, n);
        QVector b(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(testsupport::uniform(rng, -3, 3));
            b[i] = Rational(testsupport::uniform(rng, -4, 4));
        }
        o.require(verify_feasibility(a, b, lp_feasible(a, b)), "lp certificate");
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"ex-825 volume, positive part and log pullback", c1},
        {"ex-825 contraction report", c2},
        {"ex-462 volume, positive part and boundary germ", c3},
        {"pseudo-effective threshold 10/11 on ex-462", c4},
        {"nef threshold 24/25 and quadratic minima", c5},
        {"fork enumeration and residue search", c6},
        {"adjunction degrees and identity chain", c7},
        {"weighted hypersurface volumes, basis and classification grid", c8},
        {"Hilbert function asymptotics", c9},
        {"randomized property suites", c10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = e.what();
        }
        std::cout << "criterion " << (i + 1) << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first;
        if (!o.ok) std::cout << " (" << o.detail << ")";
        std::cout << "\n";
        if (!o.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
