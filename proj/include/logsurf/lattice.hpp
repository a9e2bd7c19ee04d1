#pragma once

#include "logsurf/dualgraph.hpp"
#include "logsurf/exact.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace logsurf {

/// Coordinates in the basis (H, e_1, ..., e_k) of the Picard lattice of an
/// iterated blow-up of the plane; the form is diag(+1, -1, ..., -1).
using LatticeClass = QVector;

/// Rational coefficients on visible curves; absent labels are zero.
using QDivisor = std::map<std::string, Rational>;

QDivisor operator+(const QDivisor& a, const QDivisor& b);
QDivisor operator-(const QDivisor& a, const QDivisor& b);
QDivisor operator*(const Rational& s, const QDivisor& d);
/// Drops zero coefficients.
QDivisor normalized(const QDivisor& d);
bool is_effective(const QDivisor& d);
std::string to_string(const QDivisor& d);

/// t K + D for a visible-curve divisor D.  Log canonical classes K + B are
/// LogDivisors with canonical = 1.
struct LogDivisor {
    Rational canonical;
    QDivisor boundary;

    static LogDivisor curves(QDivisor d) { return {Rational(0), std::move(d)}; }
    static LogDivisor k_plus(QDivisor d) { return {Rational(1), std::move(d)}; }
};

LogDivisor operator+(const LogDivisor& a, const LogDivisor& b);
LogDivisor operator-(const LogDivisor& a, const LogDivisor& b);
LogDivisor operator*(const Rational& s, const LogDivisor& d);
std::string to_string(const LogDivisor& d);

/// Blow-up of the current transverse intersection point of two visible curves.
struct PointSpec {
    std::string a;
    std::string b;
    std::string name;  // label of the new exceptional curve; empty = "E<step>"
};

/// Lines in general position L0..L(n-1), then blow-ups of nodes in order.
struct BlowupRecipe {
    int num_lines = 0;
    std::vector<PointSpec> steps;
};

class SurfaceModel {
public:
    std::size_t rank() const { return 1 + steps_; }
    const BlowupRecipe& recipe() const { return recipe_; }

    /// Visible curves in creation order (lines first).
    const std::vector<std::string>& labels() const { return labels_; }
    bool is_visible(const std::string& label) const { return classes_.count(label) > 0; }
    const LatticeClass& class_of(const std::string& label) const;
    /// Incidence points, each an ordered (a < b) label pair.
    const std::set<std::pair<std::string, std::string>>& incidence() const { return incidence_; }
    bool incident(const std::string& a, const std::string& b) const;

    LatticeClass canonical_class() const;
    LatticeClass hyperplane_class() const;
    /// Class e_k of the k-th blow-up (1-based).
    LatticeClass exceptional_basis(std::size_t k) const;
    LatticeClass zero_class() const { return LatticeClass(rank()); }

    Rational product(const LatticeClass& a, const LatticeClass& b) const;
    Rational self_intersection(const std::string& label) const;

    LatticeClass class_of(const QDivisor& d) const;
    LatticeClass class_of(const LogDivisor& d) const;

    /// Gram matrix of the given visible curves.
    QMatrix gram(const std::vector<std::string>& labels) const;

private:
    friend SurfaceModel build_from_recipe(const BlowupRecipe& r);

    BlowupRecipe recipe_;
    std::size_t steps_ = 0;
    std::vector<std::string> labels_;
    std::map<std::string, LatticeClass> classes_;
    std::set<std::pair<std::string, std::string>> incidence_;
};

SurfaceModel build_from_recipe(const BlowupRecipe& r);

Rational intersection(const SurfaceModel& m, const LatticeClass& a, const LatticeClass& b);
Rational intersection(const SurfaceModel& m, const LogDivisor& a, const LogDivisor& b);

LatticeClass divisor_class(const SurfaceModel& m, const QDivisor& d);

struct LogPullback {
    QDivisor coeffs;           // on every visible curve
    LatticeClass log_class;    // class of K + coeffs
};

/// Pull back K_P2 + sum b_i L_i through the recipe: the exceptional curve over
/// A cap B gets b_A + b_B - 1.
LogPullback log_pullback(const SurfaceModel& m, const std::vector<Rational>& line_coeffs);

/// Exports visible curves as a dual graph: `cluster` as exceptional vertices,
/// `boundary` as non-exceptional ones.  The cluster must be negative definite.
DualGraph germ_of_cluster(const SurfaceModel& m, const std::vector<std::string>& cluster,
                          const std::vector<std::string>& boundary = {});

/// Connected components of `labels` under visible incidence.
std::vector<std::vector<std::string>> connected_clusters(const SurfaceModel& m,
                                                         const std::vector<std::string>& labels);

}  // namespace logsurf
