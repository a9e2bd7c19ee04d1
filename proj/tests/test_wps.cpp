#include "doctest.h"

#include "logsurf/error.hpp"
#include "logsurf/wps.hpp"
#include "logsurf/wps_io.hpp"
#include "support.hpp"

#include <random>

using namespace logsurf;

namespace {

Poly x(std::size_t i) { return Poly::variable(4, i); }

/// Number of monomials of weighted degree n, by direct enumeration.
Integer count_monomials(const Weights& w, std::int64_t n) {
    if (n < 0) return 0;
    Integer c = 0;
    for (std::int64_t a = 0; a * w[3] <= n; ++a)
        for (std::int64_t b = 0; a * w[3] + b * w[2] <= n; ++b)
            for (std::int64_t e = 0; a * w[3] + b * w[2] + e * w[1] <= n; ++e)
                if ((n - a * w[3] - b * w[2] - e * w[1]) % w[0] == 0) ++c;
    return c;
}

Rational random_rational(std::mt19937& rng) {
    return Rational(testsupport::uniform(rng, -9, 9), testsupport::uniform(rng, 1, 5));
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const Poly p = pow(x(0) + x(1), 2);
    CHECK(p.coeff({1, 1, 0, 0}) == Rational(2));
    CHECK(p.total_degree() == 2);
    CHECK(p.derivative(0) == Rational(2) * x(0) + Rational(2) * x(1));
    CHECK(p.substitute(1, x(0)) == Rational(4) * x(0) * x(0));
    CHECK(p.specialize(0, Rational(1)).nvars() == 3);
    CHECK(p.evaluate({Rational(1), Rational(2), Rational(0), Rational(0)}) == Rational(9));
    CHECK(parse_human_poly("x0^2 + 2*x0*x1 + x1^2") == p);
    CHECK(parse_human_poly("- 1/2*x3 + 3") == Rational(-1, 2) * x(3) + Poly::constant(4, Rational(3)));
    CHECK_THROWS_AS(parse_human_poly("x4"), Error);
    CHECK_THROWS_AS(parse_human_poly("x0 x1"), Error);
    CHECK_THROWS_AS(parse_human_poly(""), Error);
}

TEST_CASE("resultants and univariate gcds") {
    const Poly a = Poly::variable(2, 0) - Poly::variable(2, 1);
    const Poly b = Poly::variable(2, 0) * Poly::variable(2, 0) - Poly::constant(2, Rational(2));
    const UPoly r = resultant(a, b, 0);
    // Res_x(x - y, x^2 - 2) = y^2 - 2.
    CHECK(r == UPoly{Rational(-2), Rational(0), Rational(1)});
    CHECK(gcd(UPoly{Rational(-1), Rational(0), Rational(1)}, UPoly{Rational(1), Rational(1)}) ==
          UPoly{Rational(1), Rational(1)});
    CHECK(is_monomial(UPoly{Rational(0), Rational(0), Rational(3)}));
}

TEST_CASE("weighted degrees and volumes") {
    const auto& w = weights_6_11_25_43();
    CHECK(wps_volume(w, 86) == Rational(1, 825));
    CHECK(wps_volume({6, 11, 14, 21}, 42, 11) == Rational(1, 462));
    const auto basis = monomial_basis(w, 86);
    CHECK(std::set<Exponent>(basis.begin(), basis.end()) ==
          std::set<Exponent>(degree86_monomials().begin(), degree86_monomials().end()));
    CHECK(basis.size() == 6);
    CHECK_THROWS_AS(check_weights({6, 12, 25, 43}), Error);
    CHECK_THROWS_AS(check_homogeneous(x(0) + x(1), w), Error);
    std::mt19937 rng(testsupport::kSeed + 5);
    for (int trial = 0; trial < 50; ++trial) {
        Weights ww(4);
        for (auto& v : ww) v = testsupport::uniform(rng, 1, 30);
        const auto d = testsupport::uniform(rng, 1, 200);
        Integer prod = 1, sum = 0;
        for (auto v : ww) {
            prod *= v;
            sum += v;
        }
        const Integer diff = Integer(d) - sum;
        CHECK(wps_volume(ww, d, 0) * Rational(prod) == Rational(Integer(diff * diff * d)));
    }
}

TEST_CASE("Hilbert function against direct counts") {
    const auto& w = weights_6_11_25_43();
    const auto h = hilbert_series(w, 86, 400);
    for (std::int64_t n = 0; n <= 400; ++n)
        CHECK(h[static_cast<std::size_t>(n)] == count_monomials(w, n) - count_monomials(w, n - 86));
    CHECK(h[6] == 1);
    const auto big = hilbert_series(w, 86, 20000);
    CHECK(big.back() == Integer(242412));
    // |2 h(n)/n^2 - 1/825| < 1/100 * 1/825, exactly.
    const Rational ratio(Integer(2 * big.back()), Integer(Integer(20000) * 20000));
    CHECK((ratio - Rational(1, 825)).abs() < Rational(1, 82500));
}

TEST_CASE("classification grid") {
    int cells = 0;
    const std::vector<std::pair<int, int>> params = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (const auto& eps : legal_epsilons()) {
        for (const auto& [s, t] : params) {
            const auto v = classify_hypersurface(eps, Rational(s), Rational(t));
            const bool special = eps == Epsilon{1, 0, 1, 1} && (s != 0 || t != 0);
            CHECK(v.is_lc == special);
            CHECK(v.is_klt == (special && s != 0));
            CHECK(v.verified);
            ++cells;
        }
    }
    CHECK(cells == 48);
    CHECK_THROWS_AS(classify_hypersurface({1, 1, 0, 0}, Rational(0), Rational(0)), Error);
}

TEST_CASE("chart dossiers for the lc, not klt member") {
    const auto v = classify_hypersurface({1, 0, 1, 1}, Rational(0), Rational(1));
    REQUIRE(v.charts.size() == 4);
    CHECK(v.charts[0].multiplicity == 2);
    CHECK(v.charts[0].quadratic_rank == 1);
    CHECK(v.charts[1].verdict == ChartVerdict::A1);
    CHECK(v.charts[2].verdict == ChartVerdict::Smooth);
    CHECK_FALSE(v.charts[3].on_surface);
    CHECK_FALSE(v.cited_facts.empty());
    for (const auto& [s, t] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}}) {
        const auto k = classify_hypersurface({1, 0, 1, 1}, Rational(s), Rational(t));
        REQUIRE(k.node_only.size() == 3);
        for (const auto& n : k.node_only) CHECK(n.status == NodeCertificate::Certified);
        REQUIRE(k.charts[0].ak);
        CHECK(*k.charts[0].ak == (t == 0 ? 9 : 3));
    }
    const Poly xy = Poly::monomial({2, 2}, Rational(1));
    CHECK(node_only_branch(xy).status == NodeCertificate::Failed);
}

TEST_CASE("normal form round trip on random coefficients") {
    std::mt19937 rng(testsupport::kSeed + 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::array<Rational, 6> a;
        for (auto& c : a) c = testsupport::uniform(rng, 0, 3) == 0 ? Rational(0) : random_rational(rng);
        if (std::all_of(a.begin(), a.end(), [](const Rational& c) { return c.is_zero(); })) a[0] = 1;
        const auto nf = normal_form(a);
        CHECK(verify_normal_form(a, nf));
        CHECK(nf.eps[0] * nf.eps[1] == 0);
        for (int e : nf.eps) CHECK((e == 0 || e == 1));
        // Pointwise: H(x) = lambda H_nf(z) with z_i = x_i / c_i and the shear on x3.
        const Poly h = degree86_poly(a);
        const Poly hn = normal_form_poly(nf.eps, nf.s, nf.t);
        const auto& tr = nf.transform;
        std::vector<Rational> pt(4);
        for (auto& p : pt) p = random_rational(rng);
        std::vector<Rational> z(4);
        for (std::size_t i = 0; i < 3; ++i) z[i] = pt[i] / tr.c[i];
        z[3] = (pt[3] + tr.shear * pt[2] * pow(pt[0], 3)) / tr.c[3];
        CHECK(h.evaluate(pt) == tr.lambda * hn.evaluate(z));
    }
    CHECK_THROWS_AS(normal_form({}), Error);
    const auto nf = normal_form({1, 2, 1, 0, 1, 1});
    CHECK(nf.s == Rational(-1));
    CHECK(nf.t == Rational(1));
    CHECK(projective_equivalence(Rational(1), Rational(2), Rational(2), Rational(4)));
    CHECK_FALSE(projective_equivalence(Rational(1), Rational(2), Rational(2), Rational(3)));
    CHECK_THROWS_AS(projective_equivalence(Rational(0), Rational(0), Rational(1), Rational(1)), Error);
}

TEST_CASE("polynomial files") {
    const auto p = read_weighted_poly_file(std::string(LOGSURF_DATA_DIR) + "/polys/lc-not-klt.poly");
    CHECK(p.degree == 86);
    CHECK(p.poly == normal_form_poly({1, 0, 1, 1}, Rational(0), Rational(1)));
    CHECK(parse_weighted_poly(format_weighted_poly(p)).poly == p.poly);
    CHECK(coordinate_membership(p) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(read_weighted_poly_file(std::string(LOGSURF_DATA_DIR) + "/polys/not-homogeneous.poly"), Error);
    CHECK_THROWS_AS(parse_weighted_poly("1 0 0 0 2\n"), Error);
    try {
        parse_weighted_poly("weights 6 11 25 43\n1 0 0 0\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}
