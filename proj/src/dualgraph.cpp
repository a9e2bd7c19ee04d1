#include "logsurf/dualgraph.hpp"

#include "logsurf/error.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace logsurf {

void DualGraph::add_vertex(GraphVertex v) {
    if (index_.count(v.label)) throw Error(ErrorKind::InvalidArgument, "duplicate vertex label '" + v.label + "'");
    index_[v.label] = vertices_.size();
    vertices_.push_back(std::move(v));
}

void DualGraph::add_edge(const std::string& a, const std::string& b, int multiplicity) {
    if (a == b) throw Error(ErrorKind::InvalidArgument, "self-loop at '" + a + "' (use node_count)");
    index_of(a);
    index_of(b);
    if (multiplicity <= 0) throw Error(ErrorKind::InvalidArgument, "edge multiplicity must be positive");
    for (auto& e : edges_) {
        if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) {
            e.multiplicity += multiplicity;
            return;
        }
    }
    edges_.push_back({a, b, multiplicity});
}

std::size_t DualGraph::index_of(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) throw Error(ErrorKind::UnknownLabel, "no vertex '" + label + "'");
    return it->second;
}

int DualGraph::intersection(const std::string& a, const std::string& b) const {
    if (a == b) return static_cast<int>(vertex(a).self_int);
    for (const auto& e : edges_)
        if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.multiplicity;
    return 0;
}

std::vector<std::string> DualGraph::exceptional_labels() const {
    std::vector<std::string> out;
    for (const auto& v : vertices_)
        if (v.is_exceptional) out.push_back(v.label);
    return out;
}

DualGraph DualGraph::induced(const std::vector<std::string>& labels) const {
    DualGraph g;
    for (const auto& l : labels) g.add_vertex(vertex(l));
    for (const auto& e : edges_)
        if (g.contains(e.a) && g.contains(e.b)) g.add_edge(e.a, e.b, e.multiplicity);
    return g;
}

std::vector<std::vector<std::string>> DualGraph::components(const std::vector<std::string>& labels) const {
    std::set<std::string> remaining(labels.begin(), labels.end());
    std::vector<std::vector<std::string>> out;
    for (const auto& start : labels) {
        if (!remaining.count(start)) continue;
        std::vector<std::string> comp{start};
        remaining.erase(start);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (const auto& e : edges_) {
                const std::string* other = nullptr;
                if (e.a == comp[i]) other = &e.b;
                else if (e.b == comp[i]) other = &e.a;
                if (other && remaining.count(*other)) {
                    remaining.erase(*other);
                    comp.push_back(*other);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

DualGraph make_chain(const std::vector<std::int64_t>& self_ints, const std::string& prefix) {
    DualGraph g;
    for (std::size_t i = 0; i < self_ints.size(); ++i) {
        g.add_vertex({prefix + std::to_string(i), self_ints[i]});
        if (i) g.add_edge(prefix + std::to_string(i - 1), prefix + std::to_string(i));
    }
    return g;
}

CyclicType CyclicType::normalized() const {
    if (n <= 1) return *this;
    std::int64_t inv = 1;
    while ((inv * q) % n != 1) ++inv;
    return {n, std::min(q, inv)};
}

std::string to_string(NkltCase c) {
    switch (c) {
    case NkltCase::a: return "a";
    case NkltCase::b: return "b";
    case NkltCase::c: return "c";
    case NkltCase::d: return "d";
    }
    return "?";
}

QMatrix intersection_matrix(const DualGraph& g) {
    const auto& vs = g.vertices();
    QMatrix m(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) m(i, i) = Rational(static_cast<long long>(vs[i].self_int));
    for (const auto& e : g.edges()) {
        const auto i = g.index_of(e.a), j = g.index_of(e.b);
        m(i, j) = m(j, i) = Rational(e.multiplicity);
    }
    return m;
}

namespace {

std::int64_t to_int64(const Rational& r, const char* what) {
    if (!r.is_integer() || !r.num().fits_slong_p())
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " is not a machine integer: " + r.str());
    return r.num().get_si();
}

QMatrix negated(QMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
    return m;
}

std::vector<std::string> distinct_neighbours(const DualGraph& g, const std::string& label,
                                             const std::set<std::string>* within = nullptr) {
    std::vector<std::string> out;
    for (const auto& e : g.edges()) {
        const std::string* other = nullptr;
        if (e.a == label) other = &e.b;
        else if (e.b == label) other = &e.a;
        if (other && (!within || within->count(*other))) out.push_back(*other);
    }
    return out;
}

// Walks a branch starting at `first` (adjacent to `from`) and returns its
// vertices in order; empty if the branch is not a chain.
std::vector<std::string> walk_chain(const DualGraph& g, const std::string& from, const std::string& first) {
    std::vector<std::string> chain{first};
    std::string prev = from, cur = first;
    for (;;) {
        auto nb = distinct_neighbours(g, cur);
        nb.erase(std::remove(nb.begin(), nb.end(), prev), nb.end());
        if (nb.empty()) return chain;
        if (nb.size() > 1) return {};
        prev = cur;
        cur = nb.front();
        chain.push_back(cur);
    }
}

std::vector<std::int64_t> self_ints_of(const DualGraph& g, const std::vector<std::string>& labels) {
    std::vector<std::int64_t> out;
    for (const auto& l : labels) out.push_back(g.vertex(l).self_int);
    return out;
}

bool all_rational_smooth(const DualGraph& g) {
    return std::all_of(g.vertices().begin(), g.vertices().end(),
                       [](const GraphVertex& v) { return v.arithmetic_genus() == 0; });
}

std::optional<NkltCase> match_case(const DualGraph& g, std::vector<std::int64_t>& branch_dets) {
    const auto& vs = g.vertices();
    if (vs.size() == 1 && vs[0].arithmetic_genus() == 1 && (vs[0].genus == 1 || vs[0].node_count == 1))
        return NkltCase::a;
    if (!all_rational_smooth(g)) return std::nullopt;
    const GraphShape sh = shape(g);
    if (sh.has_cycle) {
        for (const auto& v : vs) {
            int valence = 0;
            for (const auto& e : g.edges())
                if (e.a == v.label || e.b == v.label) valence += e.multiplicity;
            if (valence != 2) return std::nullopt;
        }
        return NkltCase::b;
    }
    if (sh.forks.size() == 1) {
        const std::string& fork = sh.forks.front();
        const auto nb = distinct_neighbours(g, fork);
        if (nb.size() == 3) {
            std::vector<std::int64_t> dets;
            for (const auto& first : nb) {
                const auto chain = walk_chain(g, fork, first);
                if (chain.empty()) return std::nullopt;
                dets.push_back(cyclic_type(self_ints_of(g, chain)).n);
            }
            std::sort(dets.begin(), dets.end());
            const std::vector<std::vector<std::int64_t>> allowed{{2, 3, 6}, {2, 4, 4}, {3, 3, 3}};
            if (std::find(allowed.begin(), allowed.end(), dets) != allowed.end()) {
                branch_dets = dets;
                return NkltCase::d;
            }
            return std::nullopt;
        }
        if (nb.size() == 4) {  // n = 1 instance of case (c)
            for (const auto& t : nb)
                if (g.vertex(t).self_int != -2 || distinct_neighbours(g, t).size() != 1) return std::nullopt;
            return NkltCase::c;
        }
        return std::nullopt;
    }
    if (sh.forks.size() == 2) {
        // Each end of the central chain carries exactly two (-2)-tails.
        std::set<std::string> tails(sh.tails.begin(), sh.tails.end());
        if (tails.size() != 4) return std::nullopt;
        for (const auto& fork : sh.forks) {
            const auto nb = distinct_neighbours(g, fork);
            if (nb.size() != 3) return std::nullopt;
            int leaf_count = 0;
            for (const auto& n : nb)
                if (tails.count(n) && g.vertex(n).self_int == -2) ++leaf_count;
            if (leaf_count != 2) return std::nullopt;
        }
        return NkltCase::c;
    }
    return std::nullopt;
}

// Orders a chain component from one end: a vertex meeting the boundary if any,
// otherwise the first tail in insertion order.
std::vector<std::string> order_chain(const DualGraph& g, const std::vector<std::string>& comp,
                                     const std::set<std::string>& boundary) {
    if (comp.size() == 1) return comp;
    const std::set<std::string> within(comp.begin(), comp.end());
    std::string start;
    for (const auto& l : comp) {
        if (distinct_neighbours(g, l, &within).size() != 1) continue;
        if (start.empty()) start = l;
        if (!distinct_neighbours(g, l, &boundary).empty()) { start = l; break; }
    }
    std::vector<std::string> out{start};
    std::string prev;
    while (out.size() < comp.size()) {
        for (const auto& n : distinct_neighbours(g, out.back(), &within)) {
            if (n != prev) {
                prev = out.back();
                out.push_back(n);
                break;
            }
        }
    }
    return out;
}

}  // namespace

std::int64_t graph_determinant(const DualGraph& g) {
    if (g.empty()) return 1;
    return to_int64(determinant(negated(intersection_matrix(g))), "graph determinant");
}

GraphShape shape(const DualGraph& g) {
    GraphShape sh;
    if (g.empty()) return sh;
    std::vector<std::string> labels;
    for (const auto& v : g.vertices()) labels.push_back(v.label);
    if (g.components(labels).size() != 1) throw Error(ErrorKind::Disconnected, "shape needs a connected graph");
    std::size_t edge_count = 0;
    for (const auto& e : g.edges()) edge_count += static_cast<std::size_t>(e.multiplicity);
    sh.is_tree = edge_count + 1 == g.size();
    sh.has_cycle = !sh.is_tree;
    for (const auto& v : g.vertices()) {
        const auto nb = distinct_neighbours(g, v.label).size();
        if (nb >= 3) sh.forks.push_back(v.label);
        if (nb == 1) sh.tails.push_back(v.label);
    }
    sh.is_chain = sh.is_tree && sh.forks.empty();
    return sh;
}

CyclicType cyclic_type(const std::vector<std::int64_t>& chain) {
    if (chain.empty()) throw Error(ErrorKind::InvalidChain, "empty chain");
    for (auto s : chain)
        if (s > -2) throw Error(ErrorKind::InvalidChain, "entry " + std::to_string(s) + " is not <= -2");
    // det[e_i..e_r] = e_i det[e_{i+1}..] - det[e_{i+2}..]
    std::int64_t next = 1, after = 0;  // det of [e_{i+1}..], det of [e_{i+2}..]
    std::int64_t q = 1;
    for (std::size_t i = chain.size(); i-- > 0;) {
        const std::int64_t cur = -chain[i] * next - after;
        if (i == 0) q = next;
        after = next;
        next = cur;
    }
    return {next, q};
}

std::map<std::string, Rational> solve_discrepancies(const DualGraph& g,
                                                    const std::map<std::string, Rational>& boundary_coeffs) {
    for (const auto& [label, coeff] : boundary_coeffs) {
        if (g.vertex(label).is_exceptional)
            throw Error(ErrorKind::InvalidArgument, "boundary coefficient on exceptional vertex '" + label + "'");
        (void)coeff;
    }
    const auto exc = g.exceptional_labels();
    const QMatrix gram = intersection_matrix(g.induced(exc));
    if (!is_negative_definite(gram))
        throw Error(ErrorKind::NotNegativeDefinite, "exceptional intersection matrix is not negative definite");
    QVector rhs(exc.size());
    for (std::size_t i = 0; i < exc.size(); ++i) {
        const auto& v = g.vertex(exc[i]);
        const Rational k_dot_e = Rational(2 * v.arithmetic_genus() - 2) - Rational(static_cast<long long>(v.self_int));
        rhs[i] = -k_dot_e;
        for (const auto& [label, coeff] : boundary_coeffs) rhs[i] -= coeff * Rational(g.intersection(label, exc[i]));
    }
    const QVector b = solve_linear(gram, rhs);
    std::map<std::string, Rational> out;
    for (std::size_t i = 0; i < exc.size(); ++i) out[exc[i]] = b[i];
    return out;
}

GermClassification classify_germ(const DualGraph& g, const std::map<std::string, Rational>& boundary_coeffs) {
    GermClassification c;
    c.discrepancy_coeffs = solve_discrepancies(g, boundary_coeffs);
    bool boundary_present = false, boundary_ok = true;
    for (const auto& [label, coeff] : boundary_coeffs) {
        if (!coeff.is_zero()) boundary_present = true;
        if (coeff > Rational(1) || coeff.sign() < 0) boundary_ok = false;
    }
    bool all_le_one = true, all_lt_one = true;
    std::optional<Rational> min_ld;
    for (const auto& [label, b] : c.discrepancy_coeffs) {
        if (b > Rational(1)) all_le_one = false;
        if (b >= Rational(1)) all_lt_one = false;
        if (b == Rational(1)) c.lc_places.push_back(label);
        const Rational ld = Rational(1) - b;
        if (!min_ld || ld < *min_ld) min_ld = ld;
    }
    c.min_log_discrepancy_on_resolution = min_ld;
    c.is_lc = all_le_one && boundary_ok;
    c.is_plt = c.is_lc && all_lt_one;
    c.is_klt = c.is_plt && !boundary_present;

    const auto exc = g.exceptional_labels();
    std::set<std::string> boundary;
    for (const auto& v : g.vertices())
        if (!v.is_exceptional) boundary.insert(v.label);
    for (auto& comp : g.components(exc)) {
        GermPoint p;
        const DualGraph sub = g.induced(comp);
        p.determinant = graph_determinant(sub);
        const GraphShape sh = shape(sub);
        if (sh.is_chain && all_rational_smooth(sub)) {
            p.labels = order_chain(g, comp, boundary);
            p.cyclic = cyclic_type(self_ints_of(g, p.labels));
        } else {
            p.labels = comp;
        }
        c.points.push_back(std::move(p));
    }
    if (c.is_klt) c.order = graph_determinant(g.induced(exc));

    if (c.is_lc && !c.is_klt && !boundary_present) {
        const DualGraph sub = g.induced(exc);
        c.nklt_case = match_case(sub, c.branch_determinants);
        if (!c.nklt_case)
            throw Error(ErrorKind::UnclassifiableShape,
                        "lc but not klt, and the graph matches none of the cases (a)-(d)");
    }
    return c;
}

std::vector<CyclicType> fork_branches(const DualGraph& g, const std::string& fork) {
    std::vector<CyclicType> out;
    for (const auto& first : distinct_neighbours(g, fork)) {
        const auto chain = walk_chain(g, fork, first);
        if (chain.empty()) throw Error(ErrorKind::InvalidChain, "branch at " + first + " is not a chain");
        out.push_back(cyclic_type(self_ints_of(g, chain)));
    }
    std::sort(out.begin(), out.end(), [](const CyclicType& a, const CyclicType& b) {
        return std::pair{a.n, a.q} < std::pair{b.n, b.q};
    });
    return out;
}

std::optional<int> table1_number(const DualGraph& g) {
    const DualGraph sub = g.induced(g.exceptional_labels());
    if (!all_rational_smooth(sub)) return std::nullopt;
    const GraphShape sh = shape(sub);
    if (!sh.is_tree || sh.forks.size() != 1) return std::nullopt;
    const std::string& fork = sh.forks.front();
    if (sub.vertex(fork).self_int != -2 || distinct_neighbours(sub, fork).size() != 3) return std::nullopt;
    std::vector<CyclicType> branches;
    try {
        branches = fork_branches(sub, fork);
    } catch (const Error&) {
        return std::nullopt;
    }
    const std::vector<CyclicType> no1{{3, 1}, {3, 2}, {3, 2}}, no2{{2, 1}, {3, 1}, {6, 5}};
    if (branches == no1) return 1;
    if (branches == no2) return 2;
    return std::nullopt;
}

Rational contract_and_square(const DualGraph& g, const std::set<std::string>& contracted, const std::string& f) {
    if (contracted.count(f)) throw Error(ErrorKind::InvalidArgument, "F must not be contracted");
    const auto& fv = g.vertex(f);
    const std::vector<std::string> labels(contracted.begin(), contracted.end());
    const QMatrix gram = intersection_matrix(g.induced(labels));
    if (!is_negative_definite(gram))
        throw Error(ErrorKind::NotNegativeDefinite, "contracted curves are not negative definite");
    QVector rhs(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) rhs[i] = -Rational(g.intersection(f, labels[i]));
    const QVector coeffs = solve_linear(gram, rhs);
    Rational square(static_cast<long long>(fv.self_int));
    for (std::size_t i = 0; i < labels.size(); ++i) square += coeffs[i] * Rational(g.intersection(f, labels[i]));
    return square;
}

Rational lemma22_square(const Lemma22Tuple& t) {
    Rational s(static_cast<long long>(t.e0_square));
    for (int i = 0; i < 3; ++i) s += Rational(t.q[i], t.n[i]);
    return s;
}

std::vector<Lemma22Tuple> enumerate_lemma22() {
    const std::int64_t triples[3][3] = {{3, 3, 3}, {2, 4, 4}, {2, 3, 6}};
    const Rational target(-1, 3);
    std::vector<Lemma22Tuple> out;
    for (const auto& n : triples) {
        for (std::int64_t e0 = -2; e0 >= -12; --e0) {
            for (std::int64_t q0 = 1; q0 < n[0]; ++q0) {
                if (std::gcd(q0, n[0]) != 1) continue;
                for (std::int64_t q1 = 1; q1 < n[1]; ++q1) {
                    if (std::gcd(q1, n[1]) != 1) continue;
                    for (std::int64_t q2 = 1; q2 < n[2]; ++q2) {
                        if (std::gcd(q2, n[2]) != 1) continue;
                        Lemma22Tuple t{{n[0], n[1], n[2]}, {q0, q1, q2}, e0};
                        if (lemma22_square(t) != target) continue;
                        std::array<std::pair<std::int64_t, std::int64_t>, 3> branches{
                            {{n[0], q0}, {n[1], q1}, {n[2], q2}}};
                        std::sort(branches.begin(), branches.end());
                        for (int i = 0; i < 3; ++i) {
                            t.n[i] = branches[i].first;
                            t.q[i] = branches[i].second;
                        }
                        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
                    }
                }
            }
        }
    }
    return out;
}

std::vector<ResidueHit> residue_search(const Rational& target, const std::vector<std::int64_t>& moduli) {
    for (auto n : moduli)
        if (n < 2) throw Error(ErrorKind::InvalidArgument, "moduli must be >= 2");
    std::vector<ResidueHit> hits;
    std::vector<std::int64_t> q(moduli.size(), 0);
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational rest) {
        if (i == moduli.size()) {
            if (rest.is_integer()) hits.push_back({q, rest});
            return;
        }
        for (std::int64_t qi = 1; qi < moduli[i]; ++qi) {
            if (std::gcd(qi, moduli[i]) != 1) continue;
            q[i] = qi;
            rec(i + 1, rest - Rational(qi, moduli[i]));
        }
    };
    rec(0, target);
    return hits;
}

Rational adjunction_degree(const std::vector<std::int64_t>& orders) {
    Rational d(-2);
    for (auto n : orders) {
        if (n < 1) throw Error(ErrorKind::InvalidArgument, "orders must be positive");
        d += Rational(1) - Rational(1, n);
    }
    return d;
}

std::optional<AdjunctionMinimum> min_positive_adjunction(std::int64_t max_order, std::size_t max_length) {
    std::optional<AdjunctionMinimum> best;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t)> rec = [&](std::int64_t lo) {
        if (!cur.empty()) {
            const Rational v = adjunction_degree(cur);
            if (v.sign() > 0 && (!best || v < best->value)) best = AdjunctionMinimum{v, cur};
        }
        if (cur.size() == max_length) return;
        for (std::int64_t n = lo; n <= max_order; ++n) {
            cur.push_back(n);
            rec(n);
            cur.pop_back();
        }
    };
    rec(2);
    return best;
}

}  // namespace logsurf
