#include "logsurf/wps.hpp"

#include "logsurf/error.hpp"
#include "logsurf/exact.hpp"

#include <algorithm>
#include <numeric>

namespace logsurf {

void check_weights(const Weights& w) {
    if (w.size() != 4) throw Error(ErrorKind::InvalidArgument, "expected four weights");
    for (auto x : w)
        if (x <= 0) throw Error(ErrorKind::InvalidArgument, "weights must be positive");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (std::gcd(w[i], w[j]) != 1)
                throw Error(ErrorKind::InvalidArgument, "weights must be pairwise coprime");
}

std::int64_t check_homogeneous(const Poly& p, const Weights& w) {
    if (p.nvars() != w.size()) throw Error(ErrorKind::DimensionMismatch, "one weight per variable");
    if (p.is_zero()) throw Error(ErrorKind::AllZero, "zero polynomial has no degree");
    std::optional<std::int64_t> degree;
    for (const auto& [e, c] : p.terms()) {
        std::int64_t d = 0;
        for (std::size_t i = 0; i < w.size(); ++i) d += e[i] * w[i];
        if (degree && *degree != d)
            throw Error(ErrorKind::NotHomogeneous,
                        "terms of degrees " + std::to_string(*degree) + " and " + std::to_string(d));
        degree = d;
    }
    return *degree;
}

WeightedPoly make_weighted(const Poly& p, const Weights& w) {
    check_weights(w);
    return {w, check_homogeneous(p, w), p};
}

std::vector<Exponent> monomial_basis(const Weights& w, std::int64_t d) {
    std::vector<Exponent> out;
    if (d < 0) return out;
    Exponent e(w.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i + 1 == w.size()) {
            if (left % w[i] == 0) {
                e[i] = static_cast<int>(left / w[i]);
                out.push_back(e);
            }
            return;
        }
        for (std::int64_t k = 0; k * w[i] <= left; ++k) {
            e[i] = static_cast<int>(k);
            self(self, i + 1, left - k * w[i]);
        }
    };
    rec(rec, 0, d);
    return out;
}

const std::array<Exponent, 6>& degree86_monomials() {
    static const std::array<Exponent, 6> m = {Exponent{0, 0, 0, 2}, Exponent{3, 0, 1, 1}, Exponent{0, 1, 3, 0},
                                              Exponent{6, 0, 2, 0}, Exponent{1, 5, 1, 0}, Exponent{7, 4, 0, 0}};
    return m;
}

const Weights& weights_6_11_25_43() {
    static const Weights w = {6, 11, 25, 43};
    return w;
}

Poly degree86_poly(const std::array<Rational, 6>& a) {
    Poly p(4);
    for (std::size_t i = 0; i < 6; ++i) p.add_term(degree86_monomials()[i], a[i]);
    return p;
}

Poly normal_form_poly(const Epsilon& eps, const Rational& s, const Rational& t) {
    return degree86_poly({Rational(eps[0]), Rational(eps[1]), Rational(eps[2]), s, Rational(eps[3]), t});
}

NormalForm normal_form(const std::array<Rational, 6>& a0) {
    if (std::all_of(a0.begin(), a0.end(), [](const Rational& x) { return x.is_zero(); }))
        throw Error(ErrorKind::AllZero, "all coefficients are zero");
    std::array<Rational, 6> a = a0;
    NormalForm nf;
    auto& tr = nf.transform;
    if (!a[0].is_zero()) {
        tr.shear = a[1] / (2 * a[0]);
        a[3] -= a[1] * a[1] / (4 * a[0]);
        a[1] = 0;
    }
    tr.lambda = a[0].is_zero() ? Rational(1) : a[0];
    const Rational& lambda = tr.lambda;
    auto& c = tr.c;
    c[2] = 1;
    c[1] = a[2].is_zero() ? Rational(1) : lambda / a[2];
    c[0] = a[4].is_zero() ? Rational(1) : lambda / (a[4] * pow(c[1], 5));
    c[3] = !a[0].is_zero() || a[1].is_zero() ? Rational(1) : lambda / (a[1] * pow(c[0], 3));
    nf.eps = {!a[0].is_zero(), !a[1].is_zero(), !a[2].is_zero(), !a[4].is_zero()};
    nf.s = a[3] * pow(c[0], 6) / lambda;
    nf.t = a[5] * pow(c[1], 4) * pow(c[0], 7) / lambda;
    return nf;
}

bool verify_normal_form(const std::array<Rational, 6>& a, const NormalForm& nf) {
    Poly p = normal_form_poly(nf.eps, nf.s, nf.t);
    for (std::size_t i = 0; i < 4; ++i)
        p = p.substitute(i, nf.transform.c[i].inverse() * Poly::variable(4, i));
    const Poly shear = nf.transform.shear * Poly::monomial({3, 0, 1, 0}, Rational(1));
    p = p.substitute(3, Poly::variable(4, 3) + shear);
    return nf.transform.lambda * p == degree86_poly(a);
}

Poly chart_poly(const WeightedPoly& p, int i) {
    if (i < 0 || i > 3) throw Error(ErrorKind::InvalidArgument, "chart index must be 0..3");
    return p.poly.specialize(static_cast<std::size_t>(i), Rational(1));
}

std::vector<std::string> chart_variable_names(int i) {
    std::vector<std::string> names;
    for (int j = 0; j < 4; ++j)
        if (j != i) names.push_back("x" + std::to_string(j));
    return names;
}

std::string to_string(ChartVerdict v) {
    switch (v) {
        case ChartVerdict::NotOnSurface: return "not on surface";
        case ChartVerdict::Smooth: return "smooth";
        case ChartVerdict::A1: return "A1";
        case ChartVerdict::Ak: return "A_k";
        case ChartVerdict::NotLcMultiplicity: return "not lc (multiplicity >= 4)";
        case ChartVerdict::NotLcNewton: return "not lc (Newton polyhedron)";
        case ChartVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, std::size_t n) {
    Series out(n + 1);
    for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// g(u0(w), u1(w), w) mod w^(n+1).
Series eval_series(const Poly& g, const Series& u0, const Series& u1, std::size_t n) {
    std::map<int, Series> p0, p1;
    auto power = [&](std::map<int, Series>& cache, const Series& base, int k) -> const Series& {
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        Series r(n + 1);
        r[0] = 1;
        for (int i = 0; i < k; ++i) r = series_mul(r, base, n);
        return cache.emplace(k, r).first->second;
    };
    Series out(n + 1);
    for (const auto& [e, c] : g.terms()) {
        if (static_cast<std::size_t>(e[2]) > n) continue;
        Series term = series_mul(power(p0, u0, e[0]), power(p1, u1, e[1]), n);
        for (std::size_t i = 0; i + e[2] <= n; ++i) out[i + e[2]] += c * term[i];
    }
    return out;
}

/// p(images) for a 3-variable p.
Poly compose(const Poly& p, const std::array<Poly, 3>& images) {
    Poly out(3);
    for (const auto& [e, c] : p.terms()) {
        Poly t = Poly::constant(3, c);
        for (std::size_t i = 0; i < 3; ++i) t = t * pow(images[i], e[i]);
        out += t;
    }
    return out;
}

QVector cross(const QVector& a, const QVector& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Splitting lemma for a corank-one 2-jet: returns k with the germ of type A_k,
/// or nothing if the reduced one-variable function vanishes to order > n.
std::optional<int> corank_one_type(const Poly& p, const QMatrix& q) {
    QVector v;
    for (std::size_t i = 0; i < 3 && v.empty(); ++i)
        for (std::size_t j = i + 1; j < 3 && v.empty(); ++j) {
            QVector r1{q(i, 0), q(i, 1), q(i, 2)}, r2{q(j, 0), q(j, 1), q(j, 2)};
            QVector c = cross(r1, r2);
            if (std::any_of(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); })) v = c;
        }
    if (v.empty()) return std::nullopt;
    std::size_t cidx = 0;
    while (v[cidx].is_zero()) ++cidx;
    std::array<Poly, 3> images;
    const Poly w = Poly::variable(3, 2);
    std::size_t next = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == cidx) {
            images[i] = v[i] * w;
        } else {
            images[i] = Poly::variable(3, next++) + v[i] * w;
        }
    }
    const Poly g = compose(p, images);
    QMatrix a(2, 2);
    a(0, 0) = 2 * g.coeff({2, 0, 0});
    a(1, 1) = 2 * g.coeff({0, 2, 0});
    a(0, 1) = a(1, 0) = g.coeff({1, 1, 0});
    if (determinant(a).is_zero()) return std::nullopt;
    Poly quad(3);
    quad.add_term({2, 0, 0}, g.coeff({2, 0, 0}));
    quad.add_term({0, 2, 0}, g.coeff({0, 2, 0}));
    quad.add_term({1, 1, 0}, g.coeff({1, 1, 0}));
    const Poly r = g - quad;
    const Poly r0 = r.derivative(0), r1 = r.derivative(1);
    constexpr std::size_t n = 48;
    Series u0(n + 1), u1(n + 1);
    for (std::size_t iter = 0; iter <= n; ++iter) {
        const Series g0 = eval_series(r0, u0, u1, n), g1 = eval_series(r1, u0, u1, n);
        Series n0(n + 1), n1(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            const QVector sol = solve_linear(a, {-g0[k], -g1[k]});
            n0[k] = sol[0];
            n1[k] = sol[1];
        }
        if (n0 == u0 && n1 == u1) break;
        u0 = std::move(n0);
        u1 = std::move(n1);
    }
    const Series h = eval_series(g, u0, u1, n);
    for (std::size_t k = 0; k <= n; ++k)
        if (!h[k].is_zero()) return static_cast<int>(k) - 1;
    return std::nullopt;
}

/// (1,1,1) outside conv(exponents) + R_{>=0}^3 bounds the log canonical
/// threshold of p below 1.
bool newton_excludes_diagonal(const Poly& p) {
    const std::size_t n = p.terms().size();
    QMatrix a(4, n + 3);
    std::size_t j = 0;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < 3; ++i) a(i, j) = e[i];
        a(3, j) = 1;
        ++j;
    }
    for (std::size_t i = 0; i < 3; ++i) a(i, n + i) = 1;
    const auto result = lp_feasible(a, {Rational(1), Rational(1), Rational(1), Rational(1)});
    return std::holds_alternative<Infeasible>(result);
}

}  // namespace

ChartDossier analyze_origin(const Poly& p3) {
    if (p3.nvars() != 3) throw Error(ErrorKind::DimensionMismatch, "chart polynomial must have 3 variables");
    ChartDossier d;
    if (p3.is_zero()) {
        d.inconclusive = true;
        return d;
    }
    d.multiplicity = p3.order();
    if (d.multiplicity == 0) {
        d.on_surface = false;
        d.verdict = ChartVerdict::NotOnSurface;
        return d;
    }
    if (d.multiplicity == 1) {
        d.smooth = true;
        d.verdict = ChartVerdict::Smooth;
        return d;
    }
    if (d.multiplicity == 2) {
        const Poly q2 = p3.homogeneous_part(2);
        QMatrix q(3, 3);
        for (const auto& [e, c] : q2.terms()) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < 3; ++i)
                for (int k = 0; k < e[i]; ++k) idx.push_back(i);
            if (idx[0] == idx[1]) {
                q(idx[0], idx[0]) = c;
            } else {
                q(idx[0], idx[1]) = q(idx[1], idx[0]) = c / 2;
            }
        }
        d.quadratic_rank = static_cast<int>(rank(q));
        if (*d.quadratic_rank == 3) {
            d.a1 = true;
            d.ak = 1;
            d.verdict = ChartVerdict::A1;
            return d;
        }
        if (*d.quadratic_rank == 2) {
            if (auto k = corank_one_type(p3, q)) {
                d.ak = *k;
                d.verdict = ChartVerdict::Ak;
                return d;
            }
        }
    }
    if (d.multiplicity >= 4) {
        d.mult_ge_4_not_lc = true;
        d.newton_not_lc = newton_excludes_diagonal(p3);
        d.verdict = ChartVerdict::NotLcMultiplicity;
        return d;
    }
    if (newton_excludes_diagonal(p3)) {
        d.newton_not_lc = true;
        d.verdict = ChartVerdict::NotLcNewton;
        return d;
    }
    d.inconclusive = true;
    d.verdict = ChartVerdict::Inconclusive;
    return d;
}

std::string to_string(NodeCertificate c) {
    switch (c) {
        case NodeCertificate::Certified: return "certified";
        case NodeCertificate::Inconclusive: return "inconclusive";
        case NodeCertificate::Failed: return "failed";
    }
    return "?";
}

NodeOnlyResult node_only_branch(const Poly& f) {
    if (f.nvars() != 2) throw Error(ErrorKind::DimensionMismatch, "branch curve must be bivariate");
    const Poly fx = f.derivative(0), fy = f.derivative(1);
    const Poly hess = fx.derivative(0) * fy.derivative(1) - fx.derivative(1) * fx.derivative(1);
    const std::array<Poly, 4> ideal = {f, fx, fy, hess};
    const char* names[2] = {"x", "y"};

    for (std::size_t v = 0; v < 2; ++v) {
        UPoly g;
        bool any = false;
        for (const auto& p : ideal) {
            const UPoly r = upoly_from(p.specialize(v, Rational(0)));
            if (degree(r) < 0) continue;
            g = any ? gcd(g, r) : gcd(r, {});
            any = true;
        }
        if (!any)
            return {NodeCertificate::Failed, std::string("the axis ") + names[v] + " = 0 lies in the common zeros"};
        if (!is_monomial(g))
            return {NodeCertificate::Failed,
                    std::string("common zero on the axis ") + names[v] + " = 0 away from the origin"};
    }
    for (std::size_t v = 0; v < 2; ++v) {
        UPoly g;
        bool any = false;
        for (std::size_t i = 0; i < ideal.size(); ++i)
            for (std::size_t j = i + 1; j < ideal.size(); ++j) {
                if (ideal[i].is_zero() || ideal[j].is_zero()) continue;
                const UPoly r = resultant(ideal[i], ideal[j], v);
                if (degree(r) < 0) continue;
                g = any ? gcd(g, r) : gcd(r, {});
                any = true;
            }
        if (!any) return {NodeCertificate::Inconclusive, std::string("all resultants in ") + names[v] + " vanish"};
        if (!is_monomial(g))
            return {NodeCertificate::Inconclusive,
                    std::string("eliminating ") + names[v] + " leaves a factor vanishing off the axis"};
    }
    return {NodeCertificate::Certified, "common zeros contained in the origin"};
}

NodeOnlyResult node_only_certificate(const WeightedPoly& p, int i) {
    if (i < 0 || i > 2) throw Error(ErrorKind::InvalidArgument, "node-only certificate needs chart 0, 1 or 2");
    return node_only_branch(chart_poly(p, i).specialize(2, Rational(0)));
}

Rational wps_volume(const Weights& w, std::int64_t d, std::int64_t twist) {
    if (d <= 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
    std::int64_t m = d + twist;
    Integer prod = 1;
    for (auto x : w) {
        m -= x;
        prod *= x;
    }
    return Rational(Integer(m) * Integer(m) * Integer(d), prod);
}

std::vector<Integer> hilbert_series(const Weights& w, std::int64_t d, std::int64_t n_max) {
    if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be non-negative");
    std::vector<Integer> count(static_cast<std::size_t>(n_max) + 1, 0);
    count[0] = 1;
    for (auto x : w)
        for (std::int64_t n = x; n <= n_max; ++n) count[n] += count[n - x];
    std::vector<Integer> h(count.size());
    for (std::int64_t n = 0; n <= n_max; ++n) h[n] = count[n] - (n >= d ? count[n - d] : Integer(0));
    return h;
}

std::vector<int> coordinate_membership(const WeightedPoly& p) {
    std::vector<int> out;
    for (int i = 0; i < 4; ++i) {
        bool pure = false;
        for (const auto& [e, c] : p.poly.terms()) {
            bool only_i = true;
            for (int j = 0; j < 4; ++j)
                if (j != i && e[j] != 0) only_i = false;
            if (only_i) pure = true;
        }
        if (!pure) out.push_back(i);
    }
    return out;
}

HypersurfaceVerdict classify_hypersurface(const Epsilon& eps, const Rational& s, const Rational& t) {
    for (int e : eps)
        if (e != 0 && e != 1) throw Error(ErrorKind::InvalidArgument, "eps entries must be 0 or 1");
    if (eps[0] && eps[1]) throw Error(ErrorKind::InvalidArgument, "eps1 eps2 must vanish");
    HypersurfaceVerdict v;
    v.eps = eps;
    v.s = s;
    v.t = t;
    const bool st_zero = s.is_zero() && t.is_zero();
    v.is_lc = eps[0] == 1 && eps[1] == 0 && eps[2] == 1 && eps[3] == 1 && !st_zero;
    v.is_klt = v.is_lc && !s.is_zero();

    const Poly h = normal_form_poly(eps, s, t);
    if (h.is_zero()) {
        v.notes.push_back("zero polynomial: not a hypersurface");
        v.verified = !v.is_lc;
        return v;
    }
    WeightedPoly wp{weights_6_11_25_43(), 86, h};
    for (int i = 0; i < 4; ++i) {
        ChartDossier d = analyze_origin(chart_poly(wp, i));
        d.chart = i;
        v.charts.push_back(d);
    }
    auto not_lc = [](const ChartDossier& d) {
        return d.verdict == ChartVerdict::NotLcMultiplicity || d.verdict == ChartVerdict::NotLcNewton;
    };
    if (!v.is_lc) {
        v.verified = std::any_of(v.charts.begin(), v.charts.end(), not_lc);
        if (!v.verified) v.cited_facts.push_back("failure of lc at a coordinate point");
        return v;
    }
    bool ok = !v.charts[3].on_surface && v.charts[2].verdict == ChartVerdict::Smooth &&
              v.charts[1].verdict == ChartVerdict::A1;
    const auto& p0 = v.charts[0];
    if (!s.is_zero()) {
        ok = ok && p0.ak.has_value();
    } else {
        ok = ok && p0.multiplicity == 2 && p0.quadratic_rank == 1;
        v.cited_facts.push_back("P0 cover is an elliptic singularity of type E7~ (lc, not klt)");
    }
    for (int i = 0; i < 3; ++i) v.node_only.push_back(node_only_certificate(wp, i));
    const bool nodes = std::all_of(v.node_only.begin(), v.node_only.end(), [](const NodeOnlyResult& r) {
        return r.status == NodeCertificate::Certified;
    });
    if (!nodes) {
        if (!s.is_zero()) ok = false;
        v.cited_facts.push_back("no singularities beyond A1 away from the coordinate points");
    }
    v.verified = ok;
    return v;
}

bool projective_equivalence(const Rational& s, const Rational& t, const Rational& s2, const Rational& t2) {
    if ((s.is_zero() && t.is_zero()) || (s2.is_zero() && t2.is_zero()))
        throw Error(ErrorKind::InvalidArgument, "parameters must not both vanish");
    return s * t2 == s2 * t;
}

std::vector<Epsilon> legal_epsilons() {
    std::vector<Epsilon> out;
    for (int bits = 0; bits < 16; ++bits) {
        Epsilon e = {(bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1};
        if (e[0] && e[1]) continue;
        out.push_back(e);
    }
    return out;
}

}  // namespace logsurf
