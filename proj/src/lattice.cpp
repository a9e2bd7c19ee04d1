#include "logsurf/lattice.hpp"

#include "logsurf/error.hpp"

#include <algorithm>
#include <sstream>

namespace logsurf {

QDivisor operator+(const QDivisor& a, const QDivisor& b) {
    QDivisor out = a;
    for (const auto& [label, c] : b) out[label] += c;
    return normalized(out);
}

QDivisor operator-(const QDivisor& a, const QDivisor& b) {
    QDivisor out = a;
    for (const auto& [label, c] : b) out[label] -= c;
    return normalized(out);
}

QDivisor operator*(const Rational& s, const QDivisor& d) {
    QDivisor out;
    for (const auto& [label, c] : d) out[label] = s * c;
    return normalized(out);
}

QDivisor normalized(const QDivisor& d) {
    QDivisor out;
    for (const auto& [label, c] : d)
        if (!c.is_zero()) out.emplace(label, c);
    return out;
}

bool is_effective(const QDivisor& d) {
    return std::all_of(d.begin(), d.end(), [](const auto& kv) { return kv.second.sign() >= 0; });
}

std::string to_string(const QDivisor& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, c] : d) {
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << c.str() << " " << label;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

LogDivisor operator+(const LogDivisor& a, const LogDivisor& b) {
    return {a.canonical + b.canonical, a.boundary + b.boundary};
}

LogDivisor operator-(const LogDivisor& a, const LogDivisor& b) {
    return {a.canonical - b.canonical, a.boundary - b.boundary};
}

LogDivisor operator*(const Rational& s, const LogDivisor& d) {
    return {s * d.canonical, s * d.boundary};
}

std::string to_string(const LogDivisor& d) {
    std::ostringstream os;
    if (!d.canonical.is_zero()) os << d.canonical.str() << " K + ";
    os << to_string(d.boundary);
    return os.str();
}

namespace {

std::pair<std::string, std::string> point_key(const std::string& a, const std::string& b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

const LatticeClass& SurfaceModel::class_of(const std::string& label) const {
    auto it = classes_.find(label);
    if (it == classes_.end()) throw Error(ErrorKind::UnknownLabel, "unknown curve: " + label);
    return it->second;
}

bool SurfaceModel::incident(const std::string& a, const std::string& b) const {
    return incidence_.count(point_key(a, b)) > 0;
}

LatticeClass SurfaceModel::canonical_class() const {
    LatticeClass k(rank(), Rational(1));
    k[0] = -3;
    return k;
}

LatticeClass SurfaceModel::hyperplane_class() const {
    LatticeClass h(rank());
    h[0] = 1;
    return h;
}

LatticeClass SurfaceModel::exceptional_basis(std::size_t k) const {
    if (k == 0 || k > steps_) throw Error(ErrorKind::InvalidArgument, "no such blow-up step");
    LatticeClass e(rank());
    e[k] = 1;
    return e;
}

Rational SurfaceModel::product(const LatticeClass& a, const LatticeClass& b) const {
    if (a.size() != rank() || b.size() != rank())
        throw Error(ErrorKind::DimensionMismatch, "class has wrong rank");
    Rational s = a[0] * b[0];
    for (std::size_t i = 1; i < rank(); ++i) s -= a[i] * b[i];
    return s;
}

Rational SurfaceModel::self_intersection(const std::string& label) const {
    const auto& c = class_of(label);
    return product(c, c);
}

LatticeClass SurfaceModel::class_of(const QDivisor& d) const {
    LatticeClass out(rank());
    for (const auto& [label, c] : d) {
        const auto& v = class_of(label);
        for (std::size_t i = 0; i < rank(); ++i) out[i] += c * v[i];
    }
    return out;
}

LatticeClass SurfaceModel::class_of(const LogDivisor& d) const {
    LatticeClass out = class_of(d.boundary);
    const auto k = canonical_class();
    for (std::size_t i = 0; i < rank(); ++i) out[i] += d.canonical * k[i];
    return out;
}

QMatrix SurfaceModel::gram(const std::vector<std::string>& labels) const {
    QMatrix g(labels.size(), labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i; j < labels.size(); ++j)
            g(i, j) = g(j, i) = product(class_of(labels[i]), class_of(labels[j]));
    return g;
}

SurfaceModel build_from_recipe(const BlowupRecipe& r) {
    if (r.num_lines < 1) throw Error(ErrorKind::InvalidArgument, "need at least one line");
    SurfaceModel m;
    m.recipe_ = r;
    m.steps_ = r.steps.size();
    const std::size_t rank = 1 + m.steps_;
    for (int i = 0; i < r.num_lines; ++i) {
        const std::string label = "L" + std::to_string(i);
        LatticeClass h(rank);
        h[0] = 1;
        m.labels_.push_back(label);
        m.classes_.emplace(label, h);
        for (int j = 0; j < i; ++j) m.incidence_.insert(point_key("L" + std::to_string(j), label));
    }
    for (std::size_t k = 1; k <= m.steps_; ++k) {
        const auto& step = r.steps[k - 1];
        for (const auto* l : {&step.a, &step.b})
            if (!m.classes_.count(*l))
                throw Error(ErrorKind::UnknownLabel, "step " + std::to_string(k) + ": unknown curve " + *l);
        if (step.a == step.b || !m.incidence_.count(point_key(step.a, step.b)))
            throw Error(ErrorKind::PairNotIncident,
                        "step " + std::to_string(k) + ": " + step.a + " and " + step.b + " do not meet");
        const std::string name = step.name.empty() ? "E" + std::to_string(k) : step.name;
        if (m.classes_.count(name))
            throw Error(ErrorKind::InvalidArgument, "step " + std::to_string(k) + ": duplicate label " + name);
        m.classes_[step.a][k] -= 1;
        m.classes_[step.b][k] -= 1;
        LatticeClass e(rank);
        e[k] = 1;
        m.classes_.emplace(name, e);
        m.labels_.push_back(name);
        m.incidence_.erase(point_key(step.a, step.b));
        m.incidence_.insert(point_key(name, step.a));
        m.incidence_.insert(point_key(name, step.b));
    }
    return m;
}

Rational intersection(const SurfaceModel& m, const LatticeClass& a, const LatticeClass& b) {
    return m.product(a, b);
}

Rational intersection(const SurfaceModel& m, const LogDivisor& a, const LogDivisor& b) {
    return m.product(m.class_of(a), m.class_of(b));
}

LatticeClass divisor_class(const SurfaceModel& m, const QDivisor& d) { return m.class_of(d); }

LogPullback log_pullback(const SurfaceModel& m, const std::vector<Rational>& line_coeffs) {
    const auto& r = m.recipe();
    if (line_coeffs.size() != static_cast<std::size_t>(r.num_lines))
        throw Error(ErrorKind::DimensionMismatch, "one coefficient per line required");
    QDivisor b;
    for (int i = 0; i < r.num_lines; ++i) b["L" + std::to_string(i)] = line_coeffs[i];
    const auto& labels = m.labels();
    for (std::size_t k = 0; k < r.steps.size(); ++k) {
        const auto& step = r.steps[k];
        b[labels[r.num_lines + k]] = b[step.a] + b[step.b] - 1;
    }
    LogPullback out;
    out.coeffs = b;
    out.log_class = m.class_of(LogDivisor::k_plus(b));
    return out;
}

DualGraph germ_of_cluster(const SurfaceModel& m, const std::vector<std::string>& cluster,
                          const std::vector<std::string>& boundary) {
    if (!is_negative_definite(m.gram(cluster)))
        throw Error(ErrorKind::NotContractible, "cluster intersection matrix is not negative definite");
    DualGraph g;
    auto add = [&](const std::string& label, bool exceptional) {
        const Rational s = m.self_intersection(label);
        g.add_vertex({label, static_cast<std::int64_t>(s.num().get_si()), 0, 0, exceptional});
    };
    for (const auto& l : cluster) add(l, true);
    for (const auto& l : boundary) add(l, false);
    std::vector<std::string> all = cluster;
    all.insert(all.end(), boundary.begin(), boundary.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (i >= cluster.size() && j >= cluster.size()) continue;
            const Rational p = m.product(m.class_of(all[i]), m.class_of(all[j]));
            if (p.sign() > 0) g.add_edge(all[i], all[j], static_cast<int>(p.num().get_si()));
        }
    return g;
}

std::vector<std::vector<std::string>> connected_clusters(const SurfaceModel& m,
                                                         const std::vector<std::string>& labels) {
    std::vector<std::vector<std::string>> out;
    std::set<std::string> seen;
    for (const auto& start : labels) {
        if (seen.count(start)) continue;
        std::vector<std::string> comp{start};
        seen.insert(start);
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (const auto& other : labels)
                if (!seen.count(other) && m.incident(comp[i], other)) {
                    seen.insert(other);
                    comp.push_back(other);
                }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace logsurf
