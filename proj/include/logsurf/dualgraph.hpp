#pragma once

#include "logsurf/exact.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace logsurf {

/// A curve in a configuration.  `self_int` is C^2 itself (negative for
/// exceptional curves); figures display -C^2 and the text parser negates.
struct GraphVertex {
    std::string label;
    std::int64_t self_int = 0;
    int genus = 0;
    int node_count = 0;  // nodes of an otherwise smooth curve (nodal rational curve: 1)
    bool is_exceptional = true;

    int arithmetic_genus() const { return genus + node_count; }
};

struct GraphEdge {
    std::string a, b;
    int multiplicity = 1;
};

/// Decorated dual graph: vertices with self-intersections, edges weighted by
/// intersection numbers.  Self-loops are not representable; nodal curves use
/// `node_count`.
class DualGraph {
public:
    DualGraph() = default;

    void add_vertex(GraphVertex v);
    /// Adds `multiplicity` to the (a,b) intersection number.
    void add_edge(const std::string& a, const std::string& b, int multiplicity = 1);

    const std::vector<GraphVertex>& vertices() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }

    std::size_t index_of(const std::string& label) const;
    bool contains(const std::string& label) const { return index_.count(label) > 0; }
    const GraphVertex& vertex(const std::string& label) const { return vertices_[index_of(label)]; }
    int intersection(const std::string& a, const std::string& b) const;

    /// Labels of the exceptional (contracted) vertices, in insertion order.
    std::vector<std::string> exceptional_labels() const;
    /// Subgraph induced on `labels` (order as given).
    DualGraph induced(const std::vector<std::string>& labels) const;
    /// Connected components of the subgraph induced on `labels`.
    std::vector<std::vector<std::string>> components(const std::vector<std::string>& labels) const;

private:
    std::vector<GraphVertex> vertices_;
    std::vector<GraphEdge> edges_;
    std::map<std::string, std::size_t> index_;
};

/// Chain of curves with the given self-intersections, labelled prefix0, prefix1, ...
DualGraph make_chain(const std::vector<std::int64_t>& self_ints, const std::string& prefix = "E");

/// Hirzebruch-Jung type 1/n(1,q).
struct CyclicType {
    std::int64_t n = 1;
    std::int64_t q = 0;

    /// Representative with q <= q^{-1} mod n (1/n(1,q) and 1/n(1,q') are the
    /// same singularity when q q' = 1 mod n).
    CyclicType normalized() const;
    friend bool operator==(const CyclicType&, const CyclicType&) = default;
};

struct GraphShape {
    bool is_tree = false;
    bool is_chain = false;
    bool has_cycle = false;
    std::vector<std::string> forks;
    std::vector<std::string> tails;
};

enum class NkltCase { a, b, c, d };
std::string to_string(NkltCase c);

/// One singular point: a connected component of the exceptional locus.
struct GermPoint {
    std::vector<std::string> labels;
    std::int64_t determinant = 1;
    std::optional<CyclicType> cyclic;  // present when the component is a chain
};

struct GermClassification {
    bool is_lc = false;
    bool is_klt = false;
    bool is_plt = false;
    std::optional<std::int64_t> order;
    std::optional<NkltCase> nklt_case;
    std::map<std::string, Rational> discrepancy_coeffs;  // b_i, log discrepancy 1 - b_i
    std::vector<std::string> lc_places;                  // b_i == 1
    /// min over minimal-resolution divisors of (1 - b_i); not the mld in general.
    std::optional<Rational> min_log_discrepancy_on_resolution;
    std::vector<std::int64_t> branch_determinants;  // case (d): sorted, fork branches
    std::vector<GermPoint> points;                  // components of the exceptional locus
};

/// (C_i . C_j) over all vertices.
QMatrix intersection_matrix(const DualGraph& g);

/// det of minus the intersection matrix; 1 for the empty graph.
std::int64_t graph_determinant(const DualGraph& g);

GraphShape shape(const DualGraph& g);

/// Continued fraction n/q = e1 - 1/(e2 - ...) with e_i = -self_int.
CyclicType cyclic_type(const std::vector<std::int64_t>& chain);

/// Solves (K + sum b_j E_j + sum b_B B) . E_i = 0 over exceptional E_i.
std::map<std::string, Rational> solve_discrepancies(const DualGraph& g,
                                                    const std::map<std::string, Rational>& boundary_coeffs = {});

GermClassification classify_germ(const DualGraph& g,
                                 const std::map<std::string, Rational>& boundary_coeffs = {});

/// Cyclic types of the branches at `fork`, each read from the vertex next to
/// the fork outwards, sorted by (n, q).  Throws InvalidChain if a branch is
/// not a chain.
std::vector<CyclicType> fork_branches(const DualGraph& g, const std::string& fork);

/// 1 or 2 when the exceptional part is one of the two special graphs with a
/// (-2)-fork and branches (3,1),(3,2),(3,2) or (2,1),(3,1),(6,5).
std::optional<int> table1_number(const DualGraph& g);

/// Self-intersection of the image of F after contracting `contracted`.
Rational contract_and_square(const DualGraph& g, const std::set<std::string>& contracted,
                             const std::string& f);

struct Lemma22Tuple {
    std::int64_t n[3];
    std::int64_t q[3];
    std::int64_t e0_square;
    friend bool operator==(const Lemma22Tuple&, const Lemma22Tuple&) = default;
};

/// Fork configurations (branch determinants in {(3,3,3),(2,4,4),(2,3,6)}) whose
/// contracted fork has square exactly -1/3, branches sorted by (n, q).
std::vector<Lemma22Tuple> enumerate_lemma22();
/// E0^2 + sum q_i/n_i for a candidate tuple.
Rational lemma22_square(const Lemma22Tuple& t);

struct ResidueHit {
    std::vector<std::int64_t> q;
    Rational value;  // target - sum q_i/n_i, an integer
};

std::vector<ResidueHit> residue_search(const Rational& target, const std::vector<std::int64_t>& moduli);

/// -2 + sum (1 - 1/n_i).
Rational adjunction_degree(const std::vector<std::int64_t>& orders);

struct AdjunctionMinimum {
    Rational value;
    std::vector<std::int64_t> orders;
};

/// Smallest positive adjunction_degree over sorted order lists with entries in
/// [2, max_order] and length <= max_length.
std::optional<AdjunctionMinimum> min_positive_adjunction(std::int64_t max_order, std::size_t max_length);

}  // namespace logsurf
