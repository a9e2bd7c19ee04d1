#include "logsurf/poly.hpp"

#include "logsurf/error.hpp"
#include "logsurf/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace logsurf {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
    Exponent e(nvars, 0);
    e.at(i) = 1;
    return monomial(e, Rational(1));
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
    Poly p(e.size());
    p.add_term(e, c);
    return p;
}

Rational Poly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "exponent has wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int Poly::order() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        const int s = std::accumulate(e.begin(), e.end(), 0);
        if (d < 0 || s < d) d = s;
    }
    return d;
}

int Poly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

Poly Poly::homogeneous_part(int degree) const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == degree) out.add_term(e, c);
    return out;
}

Poly Poly::derivative(std::size_t var) const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        --f[var];
        out.add_term(f, c * Rational(e[var]));
    }
    return out;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
    if (value.nvars() != nvars_) throw Error(ErrorKind::DimensionMismatch, "substitution arity");
    Poly out(nvars_);
    std::map<int, Poly> powers;
    for (const auto& [e, c] : terms_) {
        Exponent rest = e;
        const int k = rest[var];
        rest[var] = 0;
        auto it = powers.find(k);
        if (it == powers.end()) it = powers.emplace(k, pow(value, k)).first;
        out += monomial(rest, c) * it->second;
    }
    return out;
}

Poly Poly::specialize(std::size_t var, const Rational& value) const {
    Poly out(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        Exponent f;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (i != var) f.push_back(e[i]);
        out.add_term(f, c * pow(value, e[var]));
    }
    return out;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "evaluation arity");
    Rational s(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i) t *= pow(point[i], e[i]);
        s += t;
    }
    return s;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.nvars_ != nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial arity");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.nvars_ != nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial arity");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial arity");
    Poly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(a.nvars_);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly operator*(const Rational& s, const Poly& p) {
    Poly out(p.nvars_);
    for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
    return out;
}

Poly pow(const Poly& p, int exponent) {
    Poly result = Poly::constant(p.nvars(), Rational(1));
    Poly base = p;
    for (int k = exponent; k > 0; k >>= 1) {
        if (k & 1) result = result * base;
        if (k > 1) base = base * base;
    }
    return result;
}

std::string to_string(const Poly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first, then reverse lexicographic on exponents.
    std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    for (const auto& [e, c] : terms) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = e.size(); i-- > 0;) {
            if (e[i] == 0) continue;
            const std::string name = i < names.size() ? names[i] : "x" + std::to_string(i);
            factors.push_back(e[i] == 1 ? name : name + "^" + std::to_string(e[i]));
        }
        if (factors.empty() || mag != 1) factors.insert(factors.begin(), mag.str());
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d].is_zero()) --d;
    return d;
}

UPoly upoly_from(const Poly& p) {
    if (p.nvars() != 1) throw Error(ErrorKind::DimensionMismatch, "expected a univariate polynomial");
    UPoly out(std::max(0, p.total_degree() + 1));
    for (const auto& [e, c] : p.terms()) out[e[0]] = c;
    return out;
}

namespace {

UPoly remainder(UPoly a, const UPoly& b) {
    const int db = degree(b);
    for (int da = degree(a); da >= db && da >= 0; da = degree(a)) {
        const Rational f = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
    }
    trim(a);
    return a;
}

}  // namespace

UPoly gcd(const UPoly& a0, const UPoly& b0) {
    UPoly a = a0, b = b0;
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

bool is_monomial(const UPoly& p) {
    const int d = degree(p);
    if (d < 0) return false;
    for (int i = 0; i < d; ++i)
        if (!p[i].is_zero()) return false;
    return true;
}

UPoly resultant(const Poly& p, const Poly& q, std::size_t var) {
    if (p.nvars() != 2 || q.nvars() != 2) throw Error(ErrorKind::DimensionMismatch, "resultant needs bivariate input");
    const std::size_t other = 1 - var;
    const int dp = std::max(0, p.degree_in(var)), dq = std::max(0, q.degree_in(var));
    const int bound = dp * std::max(0, q.degree_in(other)) + dq * std::max(0, p.degree_in(other));
    auto coeffs_at = [&](const Poly& f, int d, const Rational& y) {
        UPoly c(d + 1);
        for (const auto& [e, v] : f.terms()) c[e[var]] += v * pow(y, e[other]);
        return c;
    };
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= bound; ++k) {
        const Rational y(k);
        const UPoly a = coeffs_at(p, dp, y), b = coeffs_at(q, dq, y);
        const std::size_t n = dp + dq;
        Rational value(1);
        if (n == 0) {
            value = 1;
        } else {
            QMatrix s(n, n);
            for (int r = 0; r < dq; ++r)
                for (int i = 0; i <= dp; ++i) s(r, r + i) = a[dp - i];
            for (int r = 0; r < dp; ++r)
                for (int i = 0; i <= dq; ++i) s(dq + r, r + i) = b[dq - i];
            value = determinant(s);
        }
        xs.push_back(y);
        ys.push_back(value);
    }
    // Newton divided differences, then expand to monomial coefficients.
    const std::size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    UPoly out(1, dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        UPoly next(out.size() + 1);
        for (std::size_t k = 0; k < out.size(); ++k) {
            next[k + 1] += out[k];
            next[k] -= xs[i] * out[k];
        }
        next[0] += dd[i];
        out = std::move(next);
    }
    trim(out);
    return out;
}

}  // namespace logsurf
