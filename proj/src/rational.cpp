#include "logsurf/rational.hpp"

#include "logsurf/error.hpp"

#include <cctype>
#include <ostream>

namespace logsurf {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotStrictlyConvex: return "NotStrictlyConvex";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::UnclassifiableShape: return "UnclassifiableShape";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::PairNotIncident: return "PairNotIncident";
    case ErrorKind::NotContractible: return "NotContractible";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::NoEffectiveRepresentative: return "NoEffectiveRepresentative";
    case ErrorKind::NegativeIntersection: return "NegativeIntersection";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Rational::Rational(long long v) : value_(static_cast<long>(v)) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

Rational Rational::parse(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    const std::string s(text.substr(b, e - b));
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorKind::ParseError, "not a rational: '" + s + "'");
    const Integer n(num[0] == '+' ? num.substr(1) : num);
    const Integer d(den);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    return Rational(n, d);
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    Rational result(1), b = base;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        b *= b;
    }
    return result;
}

Rational floor_div(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return Rational(q);
}

Rational ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return Rational(q);
}

std::string to_string(const QVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

}  // namespace logsurf
