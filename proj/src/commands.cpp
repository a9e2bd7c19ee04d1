#include "logsurf/commands.hpp"

#include "logsurf/error.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace logsurf {

using nlohmann::json;

namespace {

template <class F>
CheckRecord timed(const std::string& id, const std::string& kind, F&& body) {
    CheckRecord rec;
    rec.id = id;
    rec.kind = kind;
    const auto start = std::chrono::steady_clock::now();
    body(rec);
    rec.elapsed_us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    rec.passed = rec.failures.empty();
    return rec;
}

json eps_json(const Epsilon& e) { return json::array({e[0], e[1], e[2], e[3]}); }

json node_json(const NodeOnlyResult& r) { return {{"status", to_string(r.status)}, {"detail", r.detail}}; }

std::string exponent_name(const Exponent& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace

json germ_json(const GermClassification& g) {
    json points = json::array();
    for (const auto& p : g.points) {
        json pj = {{"labels", p.labels}, {"determinant", p.determinant}};
        if (p.cyclic) pj["cyclic"] = {p.cyclic->n, p.cyclic->q};
        points.push_back(pj);
    }
    json coeffs = json::object();
    for (const auto& [l, b] : g.discrepancy_coeffs) coeffs[l] = b.str();
    json out = {{"lc", g.is_lc}, {"klt", g.is_klt}, {"plt", g.is_plt}, {"points", points}, {"coefficients", coeffs}};
    if (g.order) out["order"] = *g.order;
    if (g.nklt_case) out["case"] = to_string(*g.nklt_case);
    if (!g.lc_places.empty()) out["lc_places"] = g.lc_places;
    if (g.min_log_discrepancy_on_resolution)
        out["min_log_discrepancy_on_resolution"] = g.min_log_discrepancy_on_resolution->str();
    return out;
}

json dossier_json(const ChartDossier& d) {
    json j = {{"chart", d.chart}, {"verdict", to_string(d.verdict)}, {"on_surface", d.on_surface}};
    if (d.on_surface) j["multiplicity"] = d.multiplicity;
    if (d.quadratic_rank) j["quadratic_rank"] = *d.quadratic_rank;
    if (d.ak) j["ak"] = *d.ak;
    return j;
}

json verdict_json(const HypersurfaceVerdict& v) {
    json charts = json::array();
    for (const auto& c : v.charts) charts.push_back(dossier_json(c));
    json nodes = json::array();
    for (const auto& n : v.node_only) nodes.push_back(node_json(n));
    json j = {{"eps", eps_json(v.eps)}, {"s", v.s.str()},       {"t", v.t.str()},
              {"lc", v.is_lc},          {"klt", v.is_klt},      {"charts", charts},
              {"verified", v.verified}};
    if (!nodes.empty()) j["node_only"] = nodes;
    if (!v.cited_facts.empty()) j["cited"] = v.cited_facts;
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

Report germ_report(const GraphFile& file, const std::string& name) {
    Report r{name, "germ", {}};
    r.checks.push_back(timed("classification", "germ", [&](CheckRecord& rec) {
        const auto g = classify_germ(file.graph, file.boundary_coeffs);
        rec.outputs = germ_json(g);
        if (file.boundary_coeffs.empty()) rec.outputs["determinant"] = graph_determinant(file.graph);
        const auto sh = shape(file.graph);
        if (file.boundary_coeffs.empty() && sh.forks.size() == 1) {
            const std::string& fork = sh.forks.front();
            std::set<std::string> others;
            for (const auto& v : file.graph.vertices())
                if (v.is_exceptional && v.label != fork) others.insert(v.label);
            rec.outputs["fork"] = fork;
            rec.outputs["fork_square"] = contract_and_square(file.graph, others, fork).str();
            rec.outputs["fork_is_lc_place"] =
                std::find(g.lc_places.begin(), g.lc_places.end(), fork) != g.lc_places.end();
            json br = json::array();
            for (const auto& b : fork_branches(file.graph, fork)) br.push_back({b.n, b.q});
            rec.outputs["branches"] = br;
            if (auto t = table1_number(file.graph)) rec.outputs["special_fork"] = *t;
        }
    }));
    return r;
}

Report wps_analyze_report(const Epsilon& eps, const Rational& s, const Rational& t) {
    Report r{"eps=" + std::to_string(eps[0]) + std::to_string(eps[1]) + std::to_string(eps[2]) +
                 std::to_string(eps[3]) + " s=" + s.str() + " t=" + t.str(),
             "wps", {}};
    r.checks.push_back(timed("classification", "wps-analyze", [&](CheckRecord& rec) {
        rec.inputs = {{"eps", eps_json(eps)}, {"s", s.str()}, {"t", t.str()}};
        const auto v = classify_hypersurface(eps, s, t);
        rec.outputs = verdict_json(v);
        if (!v.verified) rec.failures.push_back("chart evidence does not confirm the verdict");
    }));
    return r;
}

Report wps_analyze_poly_report(const WeightedPoly& p, const std::string& name) {
    Report r{name, "wps", {}};
    r.checks.push_back(timed("charts", "wps-analyze", [&](CheckRecord& rec) {
        json terms = json::object();
        for (const auto& [e, c] : p.poly.terms()) terms[exponent_name(e)] = c.str();
        rec.inputs = {{"weights", p.weights}, {"degree", p.degree}, {"terms", terms}};
        json charts = json::array();
        for (int i = 0; i < 4; ++i) {
            ChartDossier d = analyze_origin(chart_poly(p, i));
            d.chart = i;
            json j = dossier_json(d);
            if (i < 3 && d.on_surface) j["node_only"] = node_json(node_only_certificate(p, i));
            charts.push_back(j);
        }
        rec.outputs["charts"] = charts;
        rec.outputs["coordinate_points_on_surface"] = coordinate_membership(p);
    }));
    return r;
}

Report wps_normal_form_report(const std::array<Rational, 6>& a) {
    Report r{"normal-form", "wps", {}};
    r.checks.push_back(timed("normal-form", "wps-normal-form", [&](CheckRecord& rec) {
        json in = json::array();
        for (const auto& x : a) in.push_back(x.str());
        rec.inputs["coeffs"] = in;
        const auto nf = normal_form(a);
        json c = json::array();
        for (const auto& x : nf.transform.c) c.push_back(x.str());
        rec.outputs = {{"eps", eps_json(nf.eps)},
                       {"s", nf.s.str()},
                       {"t", nf.t.str()},
                       {"shear", nf.transform.shear.str()},
                       {"scaling", c},
                       {"lambda", nf.transform.lambda.str()}};
        const bool ok = verify_normal_form(a, nf);
        rec.outputs["verified"] = ok;
        if (!ok) rec.failures.push_back("transformed normal form differs from the input");
    }));
    return r;
}

Report wps_hilbert_report(const Weights& w, std::int64_t d, std::int64_t n) {
    Report r{"hilbert", "wps", {}};
    r.checks.push_back(timed("hilbert", "wps-hilbert", [&](CheckRecord& rec) {
        check_weights(w);
        if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be non-negative");
        rec.inputs = {{"weights", w}, {"degree", d}, {"n", n}};
        const auto h = hilbert_series(w, d, n);
        rec.outputs["h(n)"] = h.back().get_str();
        if (n > 0) {
            Integer prod = 1;
            for (auto x : w) prod *= x;
            const Rational ratio(Integer(2 * h.back() * prod), Integer(Integer(d) * n * n));
            const double dev = std::fabs((ratio - 1).to_double());
            std::ostringstream rs, es;
            rs << std::setprecision(9) << ratio.to_double();
            es << std::setprecision(3) << std::scientific << dev;
            rec.outputs["ratio"] = rs.str();
            rec.outputs["ratio_minus_one"] = es.str();
            rec.outputs["ratio_exact"] = ratio.str();
        }
    }));
    return r;
}

Report wps_volume_report(const Weights& w, std::int64_t d, std::int64_t twist) {
    Report r{"volume", "wps", {}};
    r.checks.push_back(timed("volume", "wps-volume", [&](CheckRecord& rec) {
        rec.inputs = {{"weights", w}, {"degree", d}, {"twist", twist}};
        rec.outputs["volume"] = wps_volume(w, d, twist).str();
    }));
    return r;
}

Report enumerate_lemma22_report() {
    Report r{"lemma22", "enumerate", {}};
    r.checks.push_back(timed("fork-configurations", "enumerate", [&](CheckRecord& rec) {
        json rows = json::array();
        for (const auto& t : enumerate_lemma22()) {
            json br = json::array();
            for (int i = 0; i < 3; ++i) br.push_back({t.n[i], t.q[i]});
            rows.push_back({{"branches", br}, {"e0_square", t.e0_square}, {"square", lemma22_square(t).str()}});
        }
        rec.outputs["tuples"] = rows;
    }));
    return r;
}

Report enumerate_lemma34_report(const Rational& target, const std::vector<std::int64_t>& moduli,
                                std::int64_t max_order, std::size_t max_length) {
    Report r{"lemma34", "enumerate", {}};
    r.checks.push_back(timed("residues", "enumerate", [&](CheckRecord& rec) {
        rec.inputs = {{"target", target.str()}, {"moduli", moduli}};
        json hits = json::array();
        for (const auto& h : residue_search(target, moduli)) hits.push_back({{"q", h.q}, {"value", h.value.str()}});
        rec.outputs["hits"] = hits;
        rec.outputs["adjunction_degree"] = adjunction_degree(moduli).str();
    }));
    r.checks.push_back(timed("adjunction-minimum", "enumerate", [&](CheckRecord& rec) {
        rec.inputs = {{"max_order", max_order}, {"max_length", max_length}};
        if (auto m = min_positive_adjunction(max_order, max_length)) {
            rec.outputs["value"] = m->value.str();
            rec.outputs["orders"] = m->orders;
        } else {
            rec.outputs["value"] = nullptr;
        }
    }));
    return r;
}

Report quadmin_report(const QuadraticForm1D& f) {
    Report r{"quadmin", "quadmin", {}};
    r.checks.push_back(timed("minimum", "quadmin", [&](CheckRecord& rec) {
        rec.inputs = {{"a", f.a.str()}, {"b", f.b.str()}, {"c", f.c.str()}};
        const auto m = minimize_quadratic(f);
        rec.outputs = {{"t_star", m.t_star.str()}, {"f_min", m.f_min.str()}};
    }));
    return r;
}

}  // namespace logsurf
