#include "logsurf/positivity.hpp"

#include "logsurf/error.hpp"

#include <algorithm>
#include <set>

namespace logsurf {

namespace {

QMatrix visible_matrix(const SurfaceModel& m) {
    const auto& labels = m.labels();
    QMatrix a(m.rank(), labels.size());
    for (std::size_t j = 0; j < labels.size(); ++j) {
        const auto& c = m.class_of(labels[j]);
        for (std::size_t i = 0; i < m.rank(); ++i) a(i, j) = c[i];
    }
    return a;
}

QDivisor representative(const SurfaceModel& m, const QVector& x) {
    QDivisor d;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (!x[j].is_zero()) d[m.labels()[j]] = x[j];
    return d;
}

LatticeClass add_scaled(const LatticeClass& a, const Rational& s, const LatticeClass& b) {
    LatticeClass out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
    return out;
}

bool is_zero_class(const LatticeClass& c) {
    return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_zero(); });
}

/// Solves sum_j x_j (C_j . C_i) = rhs_i over `labels`.
QVector solve_on(const SurfaceModel& m, const std::vector<std::string>& labels, const QVector& rhs,
                 ErrorKind on_failure) {
    const QMatrix g = m.gram(labels);
    if (!is_negative_definite(g))
        throw Error(on_failure, "intersection matrix of the support is not negative definite");
    return solve_linear(g, rhs);
}

/// Smallest-denominator rational in the half-open interval (lo, hi], lo >= 0.
Rational simplest_in(const Rational& lo, const Rational& hi) {
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    while (true) {
        const Integer pm = p0 + p1, qm = q0 + q1;
        const Rational mid(pm, qm);
        if (mid <= lo) {
            // largest k with (p0 + k p1)/(q0 + k q1) <= lo
            const Rational num = lo * Rational(q0) - Rational(p0);
            const Rational den = Rational(p1) - lo * Rational(q1);
            const Integer k = floor_div(num / den).num();
            p0 += k * p1;
            q0 += k * q1;
            if (Rational(p0 + p1, q0 + q1) <= lo) {
                p0 += p1;
                q0 += q1;
            }
        } else if (mid > hi) {
            // largest k with (k p0 + p1)/(k q0 + q1) > hi
            const Rational num = Rational(p1) - hi * Rational(q1);
            const Rational den = hi * Rational(q0) - Rational(p0);
            Integer k = ceil(num / den).num() - 1;
            if (k < 1) k = 1;
            p1 += k * p0;
            q1 += k * q0;
        } else {
            return mid;
        }
    }
}

}  // namespace

ZariskiResult zariski(const SurfaceModel& m, const LogDivisor& d, const ZariskiOptions& opts) {
    const LatticeClass dc = m.class_of(d);
    const auto& labels = opts.processing_order ? *opts.processing_order : m.labels();
    std::vector<std::string> support;
    QVector x;
    LatticeClass p = dc;
    while (true) {
        std::vector<std::string> negatives;
        for (const auto& c : labels) {
            if (std::find(support.begin(), support.end(), c) != support.end()) continue;
            if (m.product(p, m.class_of(c)).sign() < 0) {
                negatives.push_back(c);
                if (opts.processing_order) break;
            }
        }
        if (negatives.empty()) break;
        support.insert(support.end(), negatives.begin(), negatives.end());
        QVector rhs;
        for (const auto& c : support) rhs.push_back(m.product(dc, m.class_of(c)));
        x = solve_on(m, support, rhs, ErrorKind::NotNegativeDefinite);
        p = dc;
        for (std::size_t j = 0; j < support.size(); ++j) p = add_scaled(p, -x[j], m.class_of(support[j]));
    }
    ZariskiResult out;
    out.support = support;
    out.support_gram = m.gram(support);
    for (std::size_t j = 0; j < support.size(); ++j) {
        if (x[j].sign() < 0)
            throw Error(ErrorKind::NegativeCoefficient, "negative part has coefficient " + x[j].str() +
                                                            " on " + support[j]);
        if (!x[j].is_zero()) out.negative[support[j]] = x[j];
    }
    out.positive = d - LogDivisor::curves(out.negative);
    out.positive_class = p;
    return out;
}

NefCertificate nef_certificate(const SurfaceModel& m, const LatticeClass& c) {
    const auto result = lp_feasible(visible_matrix(m), c);
    const auto* feasible = std::get_if<Feasible>(&result);
    if (!feasible)
        throw Error(ErrorKind::NoEffectiveRepresentative, "class is not an effective combination of visible curves");
    NefCertificate cert;
    cert.effective_rep = representative(m, feasible->x);
    for (const auto& label : m.labels()) {
        const Rational v = m.product(c, m.class_of(label));
        if (v.sign() < 0)
            throw Error(ErrorKind::NegativeIntersection, "negative on " + label + " (" + v.str() + ")");
        cert.visible_intersections[label] = v;
    }
    return cert;
}

NefCertificate nef_certificate(const SurfaceModel& m, const LogDivisor& d) {
    return nef_certificate(m, m.class_of(d));
}

bool verify(const SurfaceModel& m, const LatticeClass& c, const NefCertificate& cert) {
    if (!is_effective(cert.effective_rep) || m.class_of(cert.effective_rep) != c) return false;
    for (const auto& label : m.labels()) {
        auto it = cert.visible_intersections.find(label);
        if (it == cert.visible_intersections.end() || it->second.sign() < 0) return false;
        if (it->second != m.product(c, m.class_of(label))) return false;
    }
    return true;
}

PsefResult psef_test(const SurfaceModel& m, const LatticeClass& c) {
    PsefResult out;
    const auto result = lp_feasible(visible_matrix(m), c);
    if (const auto* f = std::get_if<Feasible>(&result)) {
        out.psef = true;
        out.witness = representative(m, f->x);
    } else {
        out.farkas = std::get<Infeasible>(result).certificate;
    }
    return out;
}

ThresholdResult nef_threshold(const SurfaceModel& m, const LogDivisor& base, const LogDivisor& ray,
                              const std::vector<std::string>& constraints) {
    const auto& curves = constraints.empty() ? m.labels() : constraints;
    const LatticeClass b0 = m.class_of(base), b1 = m.class_of(ray);
    Rational lo(0);
    std::optional<Rational> hi;
    bool empty = false;
    auto upper = [&](const Rational& v) {
        if (!hi || v < *hi) hi = v;
    };
    for (const auto& c : curves) {
        const auto& cc = m.class_of(c);
        const Rational alpha = m.product(b0, cc), beta = m.product(b1, cc);
        if (beta.sign() > 0) {
            lo = std::max(lo, -alpha / beta);
        } else if (beta.sign() < 0) {
            upper(-alpha / beta);
        } else if (alpha.sign() < 0) {
            empty = true;
        }
    }
    std::set<std::string> coeff_labels;
    for (const auto& [l, v] : base.boundary) coeff_labels.insert(l);
    for (const auto& [l, v] : ray.boundary) coeff_labels.insert(l);
    for (const auto& l : coeff_labels) {
        const Rational c0 = base.boundary.count(l) ? base.boundary.at(l) : Rational(0);
        const Rational c1 = ray.boundary.count(l) ? ray.boundary.at(l) : Rational(0);
        if (c1.sign() > 0) {
            upper((1 - c0) / c1);
        } else if (c1.sign() < 0) {
            lo = std::max(lo, (1 - c0) / c1);
        } else if (c0 > 1) {
            empty = true;
        }
    }
    if (empty || (hi && *hi < lo)) throw Error(ErrorKind::EmptyInterval, "no parameter satisfies all constraints");
    ThresholdResult out;
    out.value = lo;
    for (const auto& c : curves) {
        const auto& cc = m.class_of(c);
        const Rational beta = m.product(b1, cc);
        if (beta.sign() > 0 && m.product(b0, cc) + lo * beta == 0) out.binding_constraints.push_back(c);
    }
    const LatticeClass at = add_scaled(b0, lo, b1);
    out.zero_class_at_value = is_zero_class(at);
    if (constraints.empty()) {
        try {
            out.nef_cert = nef_certificate(m, at);
        } catch (const Error& e) {
            out.notes.push_back(std::string("no nef certificate at threshold: ") + e.what());
        }
    }
    return out;
}

ThresholdResult pet(const SurfaceModel& m, const LogDivisor& base, const LogDivisor& ray,
                    const Rational& resolution) {
    if (resolution.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "resolution must be positive");
    const LatticeClass b0 = m.class_of(base), b1 = m.class_of(ray);
    auto at = [&](const Rational& t) { return add_scaled(b0, t, b1); };
    ThresholdResult out;
    out.notes.push_back("pseudo-effectivity is relative to the visible curves");
    auto finish = [&](const Rational& v, const PsefResult& r) {
        out.value = v;
        out.exact = true;
        out.psef_witness = r.witness;
        out.zero_class_at_value = is_zero_class(at(v));
        return out;
    };

    Rational lo(0);
    std::optional<Rational> hi_lc;
    std::set<std::string> coeff_labels;
    for (const auto& [l, v] : base.boundary) coeff_labels.insert(l);
    for (const auto& [l, v] : ray.boundary) coeff_labels.insert(l);
    for (const auto& l : coeff_labels) {
        const Rational c0 = base.boundary.count(l) ? base.boundary.at(l) : Rational(0);
        const Rational c1 = ray.boundary.count(l) ? ray.boundary.at(l) : Rational(0);
        if (c1.sign() > 0) {
            const Rational v = (1 - c0) / c1;
            if (!hi_lc || v < *hi_lc) hi_lc = v;
        } else if (c1.sign() < 0) {
            lo = std::max(lo, (1 - c0) / c1);
        } else if (c0 > 1) {
            throw Error(ErrorKind::EmptyInterval, "coefficient of " + l + " exceeds 1");
        }
    }
    if (hi_lc && *hi_lc < lo) throw Error(ErrorKind::EmptyInterval, "coefficient bounds are incompatible");

    PsefResult r_lo = psef_test(m, at(lo));
    if (r_lo.psef) return finish(lo, r_lo);
    if (is_zero_class(b1)) throw Error(ErrorKind::EmptyInterval, "ray class is zero and base is not pseudo-effective");

    Rational hi;
    if (hi_lc) {
        hi = *hi_lc;
        if (!psef_test(m, at(hi)).psef)
            throw Error(ErrorKind::EmptyInterval, "not pseudo-effective anywhere below the coefficient bound");
    } else {
        hi = std::max(Rational(1), 2 * lo);
        int doublings = 0;
        while (!psef_test(m, at(hi)).psef) {
            if (++doublings > 64) throw Error(ErrorKind::EmptyInterval, "never pseudo-effective along the ray");
            hi = 2 * hi;
        }
    }

    LatticeClass y = *r_lo.farkas;
    while (hi - lo > resolution) {
        const Rational mid = (lo + hi) / 2;
        auto r = psef_test(m, at(mid));
        if (r.psef) {
            hi = mid;
        } else {
            lo = mid;
            y = *r.farkas;
        }
    }

    // A Farkas functional y stays positive on at(t) for t below its root, so
    // a root reaching the candidate proves infeasibility on [lo, candidate).
    auto root = [&](const LatticeClass& f) { return -dot(f, b0) / dot(f, b1); };
    for (int attempt = 0; attempt < 256; ++attempt) {
        const Rational v = simplest_in(lo, hi);
        const auto rv = psef_test(m, at(v));
        if (!rv.psef) {
            lo = v;
            y = *rv.farkas;
            continue;
        }
        Rational r = root(y);
        bool moved = false;
        for (int k = 0; k < 256 && r < v; ++k) {
            const Rational t = (r + v) / 2;
            const auto rt = psef_test(m, at(t));
            if (rt.psef) {
                hi = t;
                moved = true;
                break;
            }
            lo = t;
            y = *rt.farkas;
            r = root(y);
        }
        if (moved) continue;
        if (r >= v) return finish(v, rv);
        break;
    }
    out.value = lo;
    out.upper = hi;
    out.exact = false;
    out.notes.push_back("bracket only: no certified rational found");
    return out;
}

Rational volume(const SurfaceModel& m, const LogDivisor& d) {
    const auto z = zariski(m, d);
    const Rational v = m.product(z.positive_class, z.positive_class);
    return v.sign() > 0 ? v : Rational(0);
}

LogDivisor numerical_pullback(const SurfaceModel& m, const LogDivisor& d,
                              const std::vector<std::string>& contracted) {
    if (contracted.empty()) return d;
    const LatticeClass dc = m.class_of(d);
    QVector rhs;
    for (const auto& c : contracted) rhs.push_back(-m.product(dc, m.class_of(c)));
    const QVector x = solve_on(m, contracted, rhs, ErrorKind::NotContractible);
    QDivisor add;
    for (std::size_t j = 0; j < contracted.size(); ++j) add[contracted[j]] = x[j];
    return d + LogDivisor::curves(add);
}

ContractionReport contraction_report(const SurfaceModel& m, const LogDivisor& d) {
    const auto z = zariski(m, d);
    ContractionReport out;
    out.positive = z.positive;
    for (const auto& label : m.labels())
        if (m.product(z.positive_class, m.class_of(label)).is_zero()) out.contracted.push_back(label);
    out.picard_number = m.rank() - out.contracted.size();
    const std::set<std::string> contracted(out.contracted.begin(), out.contracted.end());
    for (auto& cluster : connected_clusters(m, out.contracted)) {
        ClusterReport cr;
        cr.labels = cluster;
        std::vector<std::string> boundary;
        for (const auto& [label, c] : z.positive.boundary) {
            if (contracted.count(label)) continue;
            const bool meets = std::any_of(cluster.begin(), cluster.end(),
                                           [&](const std::string& e) { return m.incident(e, label); });
            if (meets) {
                boundary.push_back(label);
                cr.boundary[label] = c;
            }
        }
        const DualGraph g = germ_of_cluster(m, cluster, boundary);
        cr.germ = classify_germ(g, cr.boundary);
        if (cr.germ.points.size() == 1 && cr.germ.points[0].cyclic)
            cr.cyclic = cr.germ.points[0].cyclic->normalized();
        const DualGraph core = g.induced(cluster);
        const auto sh = shape(core);
        if (sh.forks.size() == 1) {
            cr.fork = sh.forks[0];
            std::set<std::string> others(cluster.begin(), cluster.end());
            others.erase(*cr.fork);
            cr.fork_square = contract_and_square(core, others, *cr.fork);
            try {
                cr.branches = fork_branches(core, *cr.fork);
            } catch (const Error&) {
            }
            cr.table1 = table1_number(core);
        }
        out.clusters.push_back(std::move(cr));
    }
    return out;
}

}  // namespace logsurf
