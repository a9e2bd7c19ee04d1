#pragma once

#include "logsurf/poly.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace logsurf {

using Weights = std::vector<std::int64_t>;

/// Throws InvalidArgument unless there are four pairwise coprime positive weights.
void check_weights(const Weights& w);

/// Polynomial in x0..x3, weighted homogeneous of `degree`.
struct WeightedPoly {
    Weights weights;
    std::int64_t degree = 0;
    Poly poly{4};
};

std::int64_t check_homogeneous(const Poly& p, const Weights& w);
WeightedPoly make_weighted(const Poly& p, const Weights& w);

/// Exponent tuples of weighted degree d, lexicographic.
std::vector<Exponent> monomial_basis(const Weights& w, std::int64_t d);

/// Monomials x3^2, x3 x2 x0^3, x2^3 x1, x2^2 x0^6, x2 x1^5 x0, x1^4 x0^7 of
/// degree 86 in P(6,11,25,43), in this order.
const std::array<Exponent, 6>& degree86_monomials();
const Weights& weights_6_11_25_43();

using Epsilon = std::array<int, 4>;

/// a1 x3^2 + a2 x3 x2 x0^3 + a3 x2^3 x1 + a4 x2^2 x0^6 + a5 x2 x1^5 x0 + a6 x1^4 x0^7.
Poly degree86_poly(const std::array<Rational, 6>& a);
/// H_{eps,(s,t)}.
Poly normal_form_poly(const Epsilon& eps, const Rational& s, const Rational& t);

/// tau: x3 -> x3 - shear x2 x0^3, then sigma: x_i -> c_i x_i, with
/// H o tau o sigma = lambda H_{eps,(s,t)}.
struct NormalFormTransform {
    Rational shear;
    std::array<Rational, 4> c;
    Rational lambda;
};

struct NormalForm {
    Epsilon eps{};
    Rational s, t;
    NormalFormTransform transform;
};

NormalForm normal_form(const std::array<Rational, 6>& a);
/// Substitutes the inverse transform into lambda H_{eps,(s,t)} and compares with the input.
bool verify_normal_form(const std::array<Rational, 6>& a, const NormalForm& nf);

/// Sets x_i = 1; the result has the remaining three variables in index order.
Poly chart_poly(const WeightedPoly& p, int i);
std::vector<std::string> chart_variable_names(int i);

enum class ChartVerdict { NotOnSurface, Smooth, A1, Ak, NotLcMultiplicity, NotLcNewton, Inconclusive };
std::string to_string(ChartVerdict v);

struct ChartDossier {
    int chart = -1;
    bool on_surface = true;
    int multiplicity = 0;
    std::optional<int> quadratic_rank;  // when multiplicity is 2
    std::optional<int> ak;              // A_k type found by the splitting lemma
    bool smooth = false;
    bool a1 = false;
    bool mult_ge_4_not_lc = false;
    bool newton_not_lc = false;          // (1,1,1) outside the Newton polyhedron
    bool inconclusive = false;
    ChartVerdict verdict = ChartVerdict::Inconclusive;
};

ChartDossier analyze_origin(const Poly& p3);

enum class NodeCertificate { Certified, Inconclusive, Failed };
std::string to_string(NodeCertificate c);

struct NodeOnlyResult {
    NodeCertificate status = NodeCertificate::Inconclusive;
    std::string detail;
};

/// Zeros of (f, f_x, f_y, Hess f) lie in {(0,0)} for a bivariate f.
NodeOnlyResult node_only_branch(const Poly& f);
/// Applies node_only_branch to the branch curve chart_poly(p, i)|_{x3=0}, i in 0..2.
NodeOnlyResult node_only_certificate(const WeightedPoly& p, int i);

/// (d - sum w + twist)^2 d / prod w.
Rational wps_volume(const Weights& w, std::int64_t d, std::int64_t twist = 0);

/// Coefficients of (1 - u^d) / prod (1 - u^{w_i}) up to u^{n_max}.
std::vector<Integer> hilbert_series(const Weights& w, std::int64_t d, std::int64_t n_max);

/// Indices i with P_i on the hypersurface (no pure power of x_i occurs).
std::vector<int> coordinate_membership(const WeightedPoly& p);

struct HypersurfaceVerdict {
    Epsilon eps{};
    Rational s, t;
    bool is_lc = false;
    bool is_klt = false;
    std::vector<ChartDossier> charts;                 // charts 0..3
    std::vector<NodeOnlyResult> node_only;            // charts 0..2, lc cases only
    std::vector<std::string> cited_facts;
    bool verified = false;                            // every decidable sub-fact agrees
    std::vector<std::string> notes;
};

/// Requires eps1 eps2 = 0 and entries in {0,1}.
HypersurfaceVerdict classify_hypersurface(const Epsilon& eps, const Rational& s, const Rational& t);

/// V(s,t) and V(s',t') for nonzero parameter pairs.
bool projective_equivalence(const Rational& s, const Rational& t, const Rational& s2, const Rational& t2);

/// All eps with entries in {0,1} and eps1 eps2 = 0.
std::vector<Epsilon> legal_epsilons();

}  // namespace logsurf
