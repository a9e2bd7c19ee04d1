#pragma once

#include "logsurf/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <variant>

namespace logsurf {

/// Dense row-major matrix of exact rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QMatrix transpose() const;
    /// Rows/columns restricted to `idx` (principal submatrix).
    QMatrix principal(std::span<const std::size_t> idx) const;
    QVector operator*(const QVector& v) const;
    QMatrix operator*(const QMatrix& other) const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::string to_string(const QMatrix& m);

Rational dot(const QVector& a, const QVector& b);

/// Exact solution of M x = v; throws SingularMatrix when det M = 0.
QVector solve_linear(const QMatrix& m, const QVector& v);

/// 0x0 has determinant 1.
Rational determinant(const QMatrix& m);

/// Leading principal minors alternate in sign starting negative.
bool is_negative_definite(const QMatrix& m);

std::size_t rank(const QMatrix& m);

struct Feasible {
    QVector x;  // x >= 0, A x = b
};

struct Infeasible {
    QVector certificate;  // y with y^T A <= 0 and y^T b > 0
};

using FeasibilityResult = std::variant<Feasible, Infeasible>;

/// Decides {x >= 0 : A x = b} with an exact phase-one simplex (Bland's rule).
FeasibilityResult lp_feasible(const QMatrix& a, const QVector& b);

/// Re-checks a result by direct substitution.
bool verify_feasibility(const QMatrix& a, const QVector& b, const FeasibilityResult& result);

/// f(t) = a t^2 + b t + c.
struct QuadraticForm1D {
    Rational a, b, c;

    /// alpha (beta t - gamma)^2 + delta (1 - t)^2, expanded.
    static QuadraticForm1D composite(const Rational& alpha, const Rational& beta,
                                     const Rational& gamma, const Rational& delta);

    Rational operator()(const Rational& t) const { return (a * t + b) * t + c; }
};

struct QuadraticMinimum {
    Rational t_star;
    Rational f_min;
};

QuadraticMinimum minimize_quadratic(const QuadraticForm1D& f);

}  // namespace logsurf
