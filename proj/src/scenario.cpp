#include "logsurf/scenario.hpp"

#include "logsurf/commands.hpp"
#include "logsurf/dualgraph.hpp"
#include "logsurf/error.hpp"
#include "logsurf/positivity.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

namespace logsurf {

using nlohmann::json;

std::uint32_t fnv1a(std::string_view text) {
    std::uint32_t h = 2166136261u;
    for (unsigned char c : text) {
        h ^= c;
        h *= 16777619u;
    }
    return h;
}

Scenario scenario_from_json(const json& j) {
    Scenario s;
    s.recipe = recipe_from_json(j);
    try {
        s.name = j.value("name", std::string("unnamed"));
        s.title = j.value("title", std::string());
        const json sets = j.value("sets", json::object());
        for (const auto& [name, labels] : sets.items()) s.sets[name] = labels.get<std::vector<std::string>>();
        s.checks = j.value("checks", json::array());
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("scenario: ") + e.what());
    }
    for (const auto& c : s.checks)
        if (!c.is_object() || !c.contains("kind"))
            throw Error(ErrorKind::ParseError, "scenario: every check needs a kind");
    return s;
}

Scenario parse_scenario(std::string_view text) { return scenario_from_json(parse_json_text(text)); }

Scenario load_scenario(const std::string& name_or_path) {
    if (auto text = builtin_scenario_text(name_or_path)) return parse_scenario(*text);
    std::ifstream in(name_or_path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "no built-in scenario or readable file named '" + name_or_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

namespace {

/// Failures that point at the scenario file rather than the mathematics.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Context {
    const Scenario& s;
    const SurfaceModel& m;

    LogDivisor divisor(const json& c, const char* key) const {
        if (!c.contains(key)) throw InputError(std::string("missing field '") + key + "'");
        try {
            return parse_divisor_expr(c.at(key).get<std::string>(), s.recipe.divisors, m);
        } catch (const Error& e) {
            throw InputError(e.what());
        }
    }

    std::vector<std::string> labels(const json& v) const {
        std::vector<std::string> out;
        if (v.is_string()) {
            auto it = s.sets.find(v.get<std::string>());
            if (it == s.sets.end()) throw InputError("unknown label set " + v.get<std::string>());
            out = it->second;
        } else {
            out = v.get<std::vector<std::string>>();
        }
        for (const auto& l : out)
            if (!m.is_visible(l)) throw InputError("unknown curve " + l);
        return out;
    }
};

json coeffs_json(const SurfaceModel& m, const QDivisor& d) {
    json out = json::object();
    for (const auto& l : m.labels()) {
        auto it = d.find(l);
        out[l] = (it == d.end() ? Rational(0) : it->second).str();
    }
    return out;
}

json class_json(const LatticeClass& c) {
    json out = json::array();
    for (const auto& x : c) out.push_back(x.str());
    return out;
}

Rational lookup(const QDivisor& d, const std::string& l) {
    auto it = d.find(l);
    return it == d.end() ? Rational(0) : it->second;
}

void expect_value(CheckRecord& rec, const json& expected, const Rational& actual, const std::string& what) {
    const Rational e = rational_from_json(expected);
    if (e != actual) rec.failures.push_back(what + ": expected " + e.str() + ", got " + actual.str());
}

/// Table entries {"curve": label, "value": "p/q", "note": where the value sits in the drawing}.
void expect_table(CheckRecord& rec, const json& table, const QDivisor& actual, const std::string& what,
                  const SurfaceModel& m) {
    for (const auto& entry : table) {
        const std::string curve = entry.at("curve").get<std::string>();
        if (!m.is_visible(curve)) throw InputError("unknown curve " + curve);
        expect_value(rec, entry.at("value"), lookup(actual, curve), what + " " + curve);
    }
}

void expect_bool(CheckRecord& rec, const json& expect, const char* key, bool actual) {
    if (expect.contains(key) && expect.at(key).get<bool>() != actual)
        rec.failures.push_back(std::string(key) + ": expected " + (actual ? "false" : "true") + ", got " +
                               (actual ? "true" : "false"));
}

template <class T>
void expect_eq(CheckRecord& rec, const json& expect, const char* key, const T& actual) {
    if (!expect.contains(key)) return;
    const T e = expect.at(key).get<T>();
    if (!(e == actual))
        rec.failures.push_back(std::string(key) + ": expected " + json(e).dump() + ", got " + json(actual).dump());
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void run_self_intersections(const Context& cx, const json& c, CheckRecord& rec) {
    json squares = json::object();
    QDivisor actual;
    for (const auto& l : cx.m.labels()) {
        actual[l] = cx.m.self_intersection(l);
        squares[l] = actual[l].str();
    }
    rec.outputs["rank"] = cx.m.rank();
    rec.outputs["squares"] = squares;
    const Rational kk = cx.m.product(cx.m.canonical_class(), cx.m.canonical_class());
    rec.outputs["K^2"] = kk.str();
    if (kk != Rational(9 - static_cast<long long>(cx.m.rank() - 1)))
        rec.failures.push_back("K^2 differs from 9 - number of blow-ups");
    const json& e = c.value("expect", json::object());
    expect_eq(rec, e, "rank", cx.m.rank());
    if (e.contains("squares")) expect_table(rec, e.at("squares"), actual, "square of", cx.m);
}

void run_log_pullback(const Context& cx, const json& c, CheckRecord& rec) {
    std::vector<Rational> coeffs;
    for (const auto& x : c.at("line_coeffs")) coeffs.push_back(rational_from_json(x));
    rec.inputs["line_coeffs"] = c.at("line_coeffs");
    const auto lp = log_pullback(cx.m, coeffs);
    const bool zero = std::all_of(lp.log_class.begin(), lp.log_class.end(), [](const Rational& x) { return x.is_zero(); });
    rec.outputs["coeffs"] = coeffs_json(cx.m, lp.coeffs);
    rec.outputs["class_of_K_plus"] = class_json(lp.log_class);
    rec.outputs["class_zero"] = zero;
    for (std::size_t k = 1; k < cx.m.rank(); ++k)
        if (!cx.m.product(lp.log_class, cx.m.exceptional_basis(k)).is_zero())
            rec.failures.push_back("K + D' is not orthogonal to exceptional class " + std::to_string(k));
    const json& e = c.value("expect", json::object());
    if (e.contains("coeffs")) expect_table(rec, e.at("coeffs"), lp.coeffs, "coefficient of", cx.m);
    expect_bool(rec, e, "class_zero", zero);
}

void run_zariski(const Context& cx, const json& c, CheckRecord& rec) {
    const LogDivisor d = cx.divisor(c, "divisor");
    rec.inputs["divisor"] = c.at("divisor");
    const auto z = zariski(cx.m, d);
    const Rational p2 = cx.m.product(z.positive_class, z.positive_class);
    rec.outputs["positive_canonical"] = z.positive.canonical.str();
    rec.outputs["positive"] = coeffs_json(cx.m, z.positive.boundary);
    json neg = json::object();
    for (const auto& [l, v] : z.negative) neg[l] = v.str();
    rec.outputs["negative"] = neg;
    rec.outputs["P^2"] = p2.str();
    // Invariants of the decomposition, re-checked from scratch.
    const LatticeClass n = cx.m.class_of(z.negative);
    if (!cx.m.product(z.positive_class, n).is_zero()) rec.failures.push_back("P.N is not zero");
    for (const auto& l : cx.m.labels())
        if (cx.m.product(z.positive_class, cx.m.class_of(l)).sign() < 0) rec.failures.push_back("P.C < 0 for " + l);
    if (!is_effective(z.negative)) rec.failures.push_back("N is not effective");
    if (!z.support.empty() && !is_negative_definite(z.support_gram))
        rec.failures.push_back("support of N is not negative definite");
    const json& e = c.value("expect", json::object());
    if (e.contains("positive")) expect_table(rec, e.at("positive"), z.positive.boundary, "P coefficient of", cx.m);
    if (e.contains("P^2")) expect_value(rec, e.at("P^2"), p2, "P^2");
}

void run_volume(const Context& cx, const json& c, CheckRecord& rec) {
    rec.inputs["divisor"] = c.at("divisor");
    const Rational v = volume(cx.m, cx.divisor(c, "divisor"));
    rec.outputs["volume"] = v.str();
    const json& e = c.value("expect", json::object());
    if (e.contains("volume")) expect_value(rec, e.at("volume"), v, "volume");
}

void run_intersection(const Context& cx, const json& c, CheckRecord& rec) {
    rec.inputs["left"] = c.at("left");
    rec.inputs["right"] = c.at("right");
    const Rational v = intersection(cx.m, cx.divisor(c, "left"), cx.divisor(c, "right"));
    rec.outputs["value"] = v.str();
    const json& e = c.value("expect", json::object());
    if (e.contains("value")) expect_value(rec, e.at("value"), v, "intersection");
}

void run_nef_certificate(const Context& cx, const json& c, CheckRecord& rec) {
    rec.inputs["divisor"] = c.at("divisor");
    const LatticeClass cls = cx.m.class_of(cx.divisor(c, "divisor"));
    bool certified = false;
    try {
        const auto cert = nef_certificate(cx.m, cls);
        certified = verify(cx.m, cls, cert);
        json rep = json::object();
        for (const auto& [l, v] : cert.effective_rep) rep[l] = v.str();
        rec.outputs["effective_rep"] = rep;
        json inter = json::object();
        for (const auto& [l, v] : cert.visible_intersections)
            if (!v.is_zero()) inter[l] = v.str();
        rec.outputs["positive_intersections"] = inter;
        rec.outputs["square"] = cx.m.product(cls, cls).str();
    } catch (const Error& e) {
        rec.outputs["error"] = e.what();
    }
    rec.outputs["certified"] = certified;
    const json& e = c.value("expect", json::object());
    expect_bool(rec, e, "certified", certified);
    if (e.contains("square")) expect_value(rec, e.at("square"), cx.m.product(cls, cls), "square");
}

json cluster_json(const ClusterReport& cr) {
    json j = {{"labels", cr.labels}, {"germ", germ_json(cr.germ)}};
    if (!cr.boundary.empty()) {
        json b = json::object();
        for (const auto& [l, v] : cr.boundary) b[l] = v.str();
        j["boundary"] = b;
    }
    if (cr.cyclic) j["cyclic"] = {cr.cyclic->n, cr.cyclic->q};
    if (cr.fork) j["fork"] = *cr.fork;
    if (cr.fork_square) j["fork_square"] = cr.fork_square->str();
    if (!cr.branches.empty()) {
        json br = json::array();
        for (const auto& b : cr.branches) br.push_back({b.n, b.q});
        j["branches"] = br;
    }
    if (cr.table1) j["table1"] = *cr.table1;
    return j;
}

void expect_cluster(CheckRecord& rec, const json& e, const ClusterReport& cr) {
    const std::string tag = "cluster of " + e.at("contains").get<std::string>() + ": ";
    const auto& g = cr.germ;
    auto flag = [&](const char* key, bool actual) {
        if (e.contains(key) && e.at(key).get<bool>() != actual)
            rec.failures.push_back(tag + key + " is " + (actual ? "true" : "false"));
    };
    flag("lc", g.is_lc);
    flag("klt", g.is_klt);
    flag("plt", g.is_plt);
    if (e.contains("size") && e.at("size").get<std::size_t>() != cr.labels.size())
        rec.failures.push_back(tag + "has " + std::to_string(cr.labels.size()) + " curves");
    if (e.contains("order") && (!g.order || *g.order != e.at("order").get<std::int64_t>()))
        rec.failures.push_back(tag + "order mismatch");
    if (e.contains("cyclic")) {
        const auto want = e.at("cyclic").get<std::vector<std::int64_t>>();
        if (!cr.cyclic || cr.cyclic->n != want.at(0) || cr.cyclic->q != want.at(1))
            rec.failures.push_back(tag + "cyclic type mismatch");
    }
    if (e.contains("table1") && (!cr.table1 || *cr.table1 != e.at("table1").get<int>()))
        rec.failures.push_back(tag + "not the expected special fork graph");
    if (e.contains("fork")) {
        if (!cr.fork || *cr.fork != e.at("fork").get<std::string>()) rec.failures.push_back(tag + "fork mismatch");
    }
    if (e.contains("fork_square")) {
        if (!cr.fork_square) rec.failures.push_back(tag + "no fork");
        else expect_value(rec, e.at("fork_square"), *cr.fork_square, tag + "fork square");
    }
    if (e.contains("fork_coeff")) {
        if (!cr.fork) {
            rec.failures.push_back(tag + "no fork");
        } else {
            auto it = g.discrepancy_coeffs.find(*cr.fork);
            expect_value(rec, e.at("fork_coeff"), it == g.discrepancy_coeffs.end() ? Rational(0) : it->second,
                         tag + "fork coefficient");
        }
    }
    if (e.contains("case") && (!g.nklt_case || to_string(*g.nklt_case) != e.at("case").get<std::string>()))
        rec.failures.push_back(tag + "non-klt case mismatch");
}

void run_contraction(const Context& cx, const json& c, CheckRecord& rec) {
    rec.inputs["divisor"] = c.at("divisor");
    const LogDivisor d = cx.divisor(c, "divisor");
    const auto report = contraction_report(cx.m, d);
    rec.outputs["contracted"] = report.contracted;
    rec.outputs["picard_number"] = report.picard_number;
    json clusters = json::array();
    for (const auto& cr : report.clusters) clusters.push_back(cluster_json(cr));
    rec.outputs["clusters"] = clusters;
    // The germ discrepancies must reproduce the positive part on each cluster.
    for (const auto& cr : report.clusters)
        for (const auto& l : cr.labels)
            if (cr.germ.discrepancy_coeffs.at(l) != lookup(report.positive.boundary, l))
                rec.failures.push_back("germ coefficient of " + l + " differs from the positive part");
    const json& e = c.value("expect", json::object());
    if (e.contains("contracted")) {
        const auto want = sorted(cx.labels(e.at("contracted")));
        if (want != sorted(report.contracted))
            rec.failures.push_back("contracted set differs: got " + json(report.contracted).dump());
    }
    if (e.contains("not_contracted")) {
        for (const auto& l : cx.labels(e.at("not_contracted")))
            if (std::find(report.contracted.begin(), report.contracted.end(), l) != report.contracted.end())
                rec.failures.push_back(l + " is contracted");
    }
    expect_eq(rec, e, "picard_number", report.picard_number);
    if (e.contains("cluster_count") && e.at("cluster_count").get<std::size_t>() != report.clusters.size())
        rec.failures.push_back("cluster count is " + std::to_string(report.clusters.size()));
    const json cluster_expectations = e.value("clusters", json::array());
    for (const auto& ce : cluster_expectations) {
        const std::string member = ce.at("contains").get<std::string>();
        auto it = std::find_if(report.clusters.begin(), report.clusters.end(), [&](const ClusterReport& cr) {
            return std::find(cr.labels.begin(), cr.labels.end(), member) != cr.labels.end();
        });
        if (it == report.clusters.end()) {
            rec.failures.push_back("no cluster contains " + member);
            continue;
        }
        expect_cluster(rec, ce, *it);
    }
}

void run_germ(const Context& cx, const json& c, CheckRecord& rec) {
    const auto cluster = cx.labels(c.at("cluster"));
    std::map<std::string, Rational> boundary;
    std::vector<std::string> boundary_labels;
    const json given = c.value("boundary", json::object());
    for (const auto& [l, v] : given.items()) {
        if (!cx.m.is_visible(l)) throw InputError("unknown curve " + l);
        boundary[l] = rational_from_json(v);
        boundary_labels.push_back(l);
    }
    rec.inputs["cluster"] = c.at("cluster");
    rec.inputs["boundary"] = c.value("boundary", json::object());
    const DualGraph g = germ_of_cluster(cx.m, cluster, boundary_labels);
    const auto cls = classify_germ(g, boundary);
    rec.outputs["germ"] = germ_json(cls);
    std::vector<std::int64_t> orders;
    for (const auto& p : cls.points) orders.push_back(p.determinant);
    std::sort(orders.begin(), orders.end());
    rec.outputs["orders"] = orders;
    json squares = json::object();
    for (const auto& l : boundary_labels) squares[l] = std::to_string(g.vertex(l).self_int);
    rec.outputs["boundary_squares"] = squares;
    // Round trip: the exported graph has the lattice Gram matrix.
    std::vector<std::string> all = cluster;
    all.insert(all.end(), boundary_labels.begin(), boundary_labels.end());
    const QMatrix gm = cx.m.gram(all);
    const QMatrix im = intersection_matrix(g);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i >= cluster.size() && j >= cluster.size() && i != j) continue;
            if (gm(i, j) != im(g.index_of(all[i]), g.index_of(all[j])))
                rec.failures.push_back("graph export differs from lattice at " + all[i] + "." + all[j]);
        }
    const json& e = c.value("expect", json::object());
    expect_bool(rec, e, "lc", cls.is_lc);
    expect_bool(rec, e, "plt", cls.is_plt);
    expect_bool(rec, e, "klt", cls.is_klt);
    expect_eq(rec, e, "orders", orders);
    const json squares_expected = e.value("boundary_squares", json::object());
    for (const auto& [l, v] : squares_expected.items()) {
        if (!g.contains(l)) throw InputError("unknown boundary curve " + l);
        expect_value(rec, v, Rational(static_cast<long long>(g.vertex(l).self_int)), "square of " + l);
    }
}

std::pair<LogDivisor, LogDivisor> pencil(const Context& cx, const json& c, CheckRecord& rec) {
    LogDivisor base = cx.divisor(c, "base"), ray = cx.divisor(c, "ray");
    rec.inputs["base"] = c.at("base");
    rec.inputs["ray"] = c.at("ray");
    if (c.contains("contract")) {
        const auto contracted = cx.labels(c.at("contract"));
        rec.inputs["contract"] = contracted;
        base = numerical_pullback(cx.m, base, contracted);
        ray = numerical_pullback(cx.m, ray, contracted);
        // Parametric pullback is affine: check the midpoint against a direct solve.
        const Rational half(1, 2);
        const LogDivisor direct = numerical_pullback(cx.m, cx.divisor(c, "base") + half * cx.divisor(c, "ray"),
                                                     contracted);
        if (cx.m.class_of(direct) != cx.m.class_of(base + half * ray))
            rec.failures.push_back("pullback is not affine in the parameter");
    }
    return {base, ray};
}

void run_nef_threshold(const Context& cx, const json& c, CheckRecord& rec) {
    const auto [base, ray] = pencil(cx, c, rec);
    const auto r = nef_threshold(cx.m, base, ray);
    rec.outputs["value"] = r.value.str();
    rec.outputs["binding"] = r.binding_constraints;
    rec.outputs["certified"] = r.nef_cert.has_value();
    if (!r.notes.empty()) rec.outputs["notes"] = r.notes;
    if (r.nef_cert && !verify(cx.m, cx.m.class_of(base + r.value * ray), *r.nef_cert))
        rec.failures.push_back("nef certificate does not re-verify");
    const json& e = c.value("expect", json::object());
    if (e.contains("value")) expect_value(rec, e.at("value"), r.value, "threshold");
    if (e.contains("binding") && sorted(e.at("binding").get<std::vector<std::string>>()) != sorted(r.binding_constraints))
        rec.failures.push_back("binding constraints differ");
    expect_bool(rec, e, "certified", r.nef_cert.has_value());
}

void run_pet(const Context& cx, const json& c, CheckRecord& rec) {
    const auto [base, ray] = pencil(cx, c, rec);
    const Rational res = rational_from_json(c.value("resolution", json("1/1000000")));
    rec.inputs["resolution"] = res.str();
    const auto r = pet(cx.m, base, ray, res);
    rec.outputs["value"] = r.value.str();
    rec.outputs["exact"] = r.exact;
    if (r.upper) rec.outputs["upper"] = r.upper->str();
    rec.outputs["zero_class_at_value"] = r.zero_class_at_value;
    rec.outputs["notes"] = r.notes;
    const json& e = c.value("expect", json::object());
    if (e.contains("value")) expect_value(rec, e.at("value"), r.value, "pet");
    expect_bool(rec, e, "exact", r.exact);
    expect_bool(rec, e, "zero_class", r.zero_class_at_value);
    if (e.contains("outside_open")) {
        const Rational lo = rational_from_json(e.at("outside_open").at(0));
        const Rational hi = rational_from_json(e.at("outside_open").at(1));
        const bool inside = lo < r.value && r.value < hi;
        rec.outputs["in_forbidden_interval"] = inside;
        if (inside) rec.failures.push_back("pet lies in the open interval (" + lo.str() + ", " + hi.str() + ")");
    }
}

void run_identity_chain(const Context& cx, const json& c, CheckRecord& rec) {
    const auto [base, ray] = pencil(cx, c, rec);
    const Rational cc = rational_from_json(c.at("c"));
    rec.inputs["c"] = cc.str();
    const LogDivisor p = base + ray;
    const Rational kb2 = intersection(cx.m, p, p);
    const Rational kb_kcb = intersection(cx.m, p, base + cc * ray);
    const Rational kb_b = intersection(cx.m, p, ray);
    const Rational tail = (1 - cc) * kb_b;
    rec.outputs["(K+B)^2"] = kb2.str();
    rec.outputs["(K+B).(K+cB)"] = kb_kcb.str();
    rec.outputs["(K+B).B"] = kb_b.str();
    rec.outputs["(1-c)(K+B).B"] = tail.str();
    if (kb2 != kb_kcb + tail) rec.failures.push_back("(K+B)^2 != (K+B).(K+cB) + (1-c)(K+B).B");
    const json& e = c.value("expect", json::object());
    if (e.contains("adjunction_orders")) {
        const Rational adj = adjunction_degree(e.at("adjunction_orders").get<std::vector<std::int64_t>>());
        rec.outputs["adjunction_degree"] = adj.str();
        if (adj != kb_b) rec.failures.push_back("(K+B).B differs from the adjunction degree " + adj.str());
    }
    if (e.contains("(K+B)^2")) expect_value(rec, e.at("(K+B)^2"), kb2, "(K+B)^2");
    if (e.contains("(K+B).(K+cB)")) expect_value(rec, e.at("(K+B).(K+cB)"), kb_kcb, "(K+B).(K+cB)");
    if (e.contains("(K+B).B")) expect_value(rec, e.at("(K+B).B"), kb_b, "(K+B).B");
    if (e.contains("(1-c)(K+B).B")) expect_value(rec, e.at("(1-c)(K+B).B"), tail, "(1-c)(K+B).B");
}

void run_quadmin(const Context&, const json& c, CheckRecord& rec) {
    QuadraticForm1D f;
    if (c.contains("composite")) {
        const auto& k = c.at("composite");
        f = QuadraticForm1D::composite(rational_from_json(k.at("alpha")), rational_from_json(k.at("beta")),
                                       rational_from_json(k.at("gamma")), rational_from_json(k.at("delta")));
        rec.inputs["composite"] = k;
    } else {
        f = {rational_from_json(c.at("a")), rational_from_json(c.at("b")), rational_from_json(c.at("c"))};
    }
    rec.inputs["a"] = f.a.str();
    rec.inputs["b"] = f.b.str();
    rec.inputs["c"] = f.c.str();
    const auto r = minimize_quadratic(f);
    rec.outputs["t_star"] = r.t_star.str();
    rec.outputs["f_min"] = r.f_min.str();
    const json& e = c.value("expect", json::object());
    if (e.contains("t_star")) expect_value(rec, e.at("t_star"), r.t_star, "t_star");
    if (e.contains("f_min")) expect_value(rec, e.at("f_min"), r.f_min, "f_min");
}

using Runner = void (*)(const Context&, const json&, CheckRecord&);

const std::map<std::string, Runner>& runners() {
    static const std::map<std::string, Runner> r = {
        {"self_intersections", run_self_intersections},
        {"log_pullback", run_log_pullback},
        {"zariski", run_zariski},
        {"volume", run_volume},
        {"intersection", run_intersection},
        {"nef_certificate", run_nef_certificate},
        {"contraction", run_contraction},
        {"germ", run_germ},
        {"nef_threshold", run_nef_threshold},
        {"pet", run_pet},
        {"identity_chain", run_identity_chain},
        {"quadmin", run_quadmin},
    };
    return r;
}

}  // namespace

Report run_scenario(const Scenario& s) {
    const SurfaceModel m = build_from_recipe(s.recipe.recipe);
    for (const auto& [name, d] : s.recipe.divisors)
        for (const auto& [label, v] : d)
            if (!m.is_visible(label))
                throw Error(ErrorKind::UnknownLabel, "divisor " + name + " uses unknown curve " + label);
    for (const auto& [name, labels] : s.sets)
        for (const auto& label : labels)
            if (!m.is_visible(label))
                throw Error(ErrorKind::UnknownLabel, "set " + name + " uses unknown curve " + label);
    const Context cx{s, m};
    Report report;
    report.name = s.name;
    report.kind = "scenario";
    std::size_t index = 0;
    for (const auto& c : s.checks) {
        ++index;
        CheckRecord rec;
        rec.kind = c.at("kind").get<std::string>();
        rec.id = c.value("id", rec.kind + "#" + std::to_string(index));
        auto it = runners().find(rec.kind);
        if (it == runners().end()) throw Error(ErrorKind::ParseError, "check " + rec.id + ": unknown kind " + rec.kind);
        const auto start = std::chrono::steady_clock::now();
        try {
            it->second(cx, c, rec);
        } catch (const InputError& e) {
            throw Error(ErrorKind::ParseError, "check " + rec.id + ": " + e.what());
        } catch (const json::exception& e) {
            throw Error(ErrorKind::ParseError, "check " + rec.id + ": " + e.what());
        } catch (const Error& e) {
            rec.failures.push_back(std::string("error: ") + e.what());
        }
        rec.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start)
                             .count();
        rec.passed = rec.failures.empty();
        report.checks.push_back(std::move(rec));
    }
    return report;
}

}  // namespace logsurf
