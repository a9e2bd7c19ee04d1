#pragma once

#include "logsurf/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace logsurf {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial with rational coefficients.
class Poly {
public:
    explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly variable(std::size_t nvars, std::size_t i);
    static Poly monomial(const Exponent& e, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    int total_degree() const;     // -1 for zero
    int order() const;            // min total degree; -1 for zero
    int degree_in(std::size_t var) const;
    Poly homogeneous_part(int degree) const;
    Poly derivative(std::size_t var) const;

    /// Replaces variable `var` by `value`; keeps the variable count.
    Poly substitute(std::size_t var, const Poly& value) const;
    /// Sets `var` to a constant and removes it from the variable list.
    Poly specialize(std::size_t var, const Rational& value) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::size_t nvars_;
    std::map<Exponent, Rational> terms_;
};

Poly pow(const Poly& p, int exponent);

/// "x3^2 + 2*x2^3*x1 - 1/2*x0"; variables named by `names`.
std::string to_string(const Poly& p, const std::vector<std::string>& names);

/// Dense univariate polynomial, index = degree, no trailing zeros.
using UPoly = std::vector<Rational>;

void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for zero
UPoly upoly_from(const Poly& p);  // p must be univariate in variable 0
/// Monic gcd; zero when both inputs are zero.
UPoly gcd(const UPoly& a, const UPoly& b);
/// c * x^k with c != 0.
bool is_monomial(const UPoly& p);

/// Resultant with respect to `var` of two bivariate polynomials, as a
/// polynomial in the other variable.  Uses the formal degrees in `var`.
UPoly resultant(const Poly& p, const Poly& q, std::size_t var);

}  // namespace logsurf
