#pragma once

#include "logsurf/dualgraph.hpp"
#include "logsurf/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logsurf {

struct ZariskiResult {
    LogDivisor positive;              // D - N
    QDivisor negative;                // N >= 0
    LatticeClass positive_class;
    std::vector<std::string> support; // supp N in the order it was found
    QMatrix support_gram;
};

struct ZariskiOptions {
    /// When set, each round adds only the first negative curve in this order
    /// instead of all of them at once.
    std::optional<std::vector<std::string>> processing_order;
};

/// Fujita's algorithm over the visible curves.
ZariskiResult zariski(const SurfaceModel& m, const LogDivisor& d, const ZariskiOptions& opts = {});

struct NefCertificate {
    QDivisor effective_rep;
    std::map<std::string, Rational> visible_intersections;
};

NefCertificate nef_certificate(const SurfaceModel& m, const LatticeClass& c);
NefCertificate nef_certificate(const SurfaceModel& m, const LogDivisor& d);
/// Re-checks both halves exactly.
bool verify(const SurfaceModel& m, const LatticeClass& c, const NefCertificate& cert);

struct PsefResult {
    bool psef = false;
    std::optional<QDivisor> witness;             // effective visible representative
    std::optional<LatticeClass> farkas;          // y with y.C_i <= 0 (Euclidean), y.c > 0
};

/// Model-relative pseudo-effectivity: c = sum c_i C_i with c_i >= 0.
PsefResult psef_test(const SurfaceModel& m, const LatticeClass& c);

struct ThresholdResult {
    Rational value;
    bool exact = true;
    std::optional<Rational> upper;            // bracket [value, upper] when not exact
    std::vector<std::string> binding_constraints;
    std::optional<NefCertificate> nef_cert;   // nef_threshold
    std::optional<QDivisor> psef_witness;     // pet
    bool zero_class_at_value = false;
    std::vector<std::string> notes;
};

/// inf { s >= 0 : (base + s ray) . C >= 0 for C in constraints, coefficients <= 1 }.
/// Empty `constraints` means all visible curves.
ThresholdResult nef_threshold(const SurfaceModel& m, const LogDivisor& base, const LogDivisor& ray,
                              const std::vector<std::string>& constraints = {});

/// inf { t >= 0 : base + t ray pseudo-effective, coefficients <= 1 }.
ThresholdResult pet(const SurfaceModel& m, const LogDivisor& base, const LogDivisor& ray,
                    const Rational& resolution);

/// P^2 of the Zariski decomposition.
Rational volume(const SurfaceModel& m, const LogDivisor& d);

/// Adds the combination of `contracted` making the result orthogonal to each
/// of them: the pullback of D's image under the contraction.
LogDivisor numerical_pullback(const SurfaceModel& m, const LogDivisor& d,
                              const std::vector<std::string>& contracted);

struct ClusterReport {
    std::vector<std::string> labels;
    std::map<std::string, Rational> boundary;   // non-contracted curves of D meeting the cluster
    GermClassification germ;
    std::optional<CyclicType> cyclic;           // normalized, for chains
    std::optional<std::string> fork;
    std::optional<Rational> fork_square;        // E^2 after contracting everything but the fork
    std::vector<CyclicType> branches;           // at the fork
    std::optional<int> table1;                  // special fork graph number
};

struct ContractionReport {
    LogDivisor positive;
    std::vector<std::string> contracted;
    std::size_t picard_number = 0;
    std::vector<ClusterReport> clusters;
};

ContractionReport contraction_report(const SurfaceModel& m, const LogDivisor& d);

}  // namespace logsurf
