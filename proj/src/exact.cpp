#include "logsurf/exact.hpp"

#include "logsurf/error.hpp"

#include <optional>

namespace logsurf {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool QMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QMatrix QMatrix::principal(std::span<const std::size_t> idx) const {
    QMatrix s(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(idx[i], idx[j]);
    return s;
}

QVector QMatrix::operator*(const QVector& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (other.rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    QMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = (*this)(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += aik * other(k, j);
        }
    return out;
}

std::string to_string(const QMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += m(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

namespace {

// Forward elimination with partial (first non-zero) pivoting.  Returns the
// determinant factor and leaves `m` upper triangular.
Rational eliminate(QMatrix& m, QVector* rhs) {
    const std::size_t n = m.rows();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::optional<std::size_t> pivot;
        for (std::size_t r = col; r < n; ++r)
            if (!m(r, col).is_zero()) { pivot = r; break; }
        if (!pivot) return Rational(0);
        if (*pivot != col) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(col, j), m(*pivot, j));
            if (rhs) std::swap((*rhs)[col], (*rhs)[*pivot]);
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const Rational factor = m(r, col) / m(col, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= factor * m(col, j);
            if (rhs) (*rhs)[r] -= factor * (*rhs)[col];
        }
    }
    return det;
}

}  // namespace

QVector solve_linear(const QMatrix& m, const QVector& v) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquare, "solve_linear needs a square matrix");
    if (v.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
    QMatrix work = m;
    QVector rhs = v;
    if (eliminate(work, &rhs).is_zero()) throw Error(ErrorKind::SingularMatrix, "determinant is zero");
    const std::size_t n = m.rows();
    QVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= work(i, j) * x[j];
        x[i] = s / work(i, i);
    }
    return x;
}

Rational determinant(const QMatrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::NonSquare, "determinant needs a square matrix");
    QMatrix work = m;
    return eliminate(work, nullptr);
}

bool is_negative_definite(const QMatrix& m) {
    if (!m.is_symmetric()) throw Error(ErrorKind::NonSymmetric, "is_negative_definite needs a symmetric matrix");
    // Symmetric Gaussian elimination without pivoting: the k-th pivot is the
    // ratio of consecutive leading minors, so every pivot must be negative.
    QMatrix work = m;
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (work(k, k).sign() >= 0) return false;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (work(r, k).is_zero()) continue;
            const Rational factor = work(r, k) / work(k, k);
            for (std::size_t j = k; j < n; ++j) work(r, j) -= factor * work(k, j);
        }
    }
    return true;
}

std::size_t rank(const QMatrix& m) {
    QMatrix work = m;
    std::size_t r = 0;
    for (std::size_t col = 0; col < work.cols() && r < work.rows(); ++col) {
        std::optional<std::size_t> pivot;
        for (std::size_t i = r; i < work.rows(); ++i)
            if (!work(i, col).is_zero()) { pivot = i; break; }
        if (!pivot) continue;
        for (std::size_t j = 0; j < work.cols(); ++j) std::swap(work(r, j), work(*pivot, j));
        for (std::size_t i = r + 1; i < work.rows(); ++i) {
            if (work(i, col).is_zero()) continue;
            const Rational factor = work(i, col) / work(r, col);
            for (std::size_t j = col; j < work.cols(); ++j) work(i, j) -= factor * work(r, j);
        }
        ++r;
    }
    return r;
}

FeasibilityResult lp_feasible(const QMatrix& a, const QVector& b) {
    if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "lp_feasible: b length != rows");
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t width = n + m;  // structural + artificial columns

    // Phase-one tableau: rows normalised to b >= 0, artificial identity block,
    // objective minimises the sum of artificials.
    QMatrix t(m, width);
    QVector rhs(m);
    std::vector<int> flip(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i].sign() < 0) flip[i] = -1;
        for (std::size_t j = 0; j < n; ++j) t(i, j) = flip[i] < 0 ? -a(i, j) : a(i, j);
        t(i, n + i) = 1;
        rhs[i] = flip[i] < 0 ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    QVector reduced(width);  // c_j - c_B^T B^{-1} A_j
    Rational objective;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) reduced[j] -= t(i, j);
    for (std::size_t i = 0; i < m; ++i) objective += rhs[i];

    for (;;) {
        // Bland: smallest index with negative reduced cost enters.
        std::optional<std::size_t> enter;
        for (std::size_t j = 0; j < width; ++j)
            if (reduced[j].sign() < 0) { enter = j; break; }
        if (!enter) break;
        std::optional<std::size_t> leave;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t(i, *enter).sign() <= 0) continue;
            const Rational ratio = rhs[i] / t(i, *enter);
            if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                leave = i;
                best = ratio;
            }
        }
        // Phase one is bounded below by zero, so an entering column always has
        // a positive entry.
        if (!leave) throw Error(ErrorKind::InvalidArgument, "lp_feasible: unbounded phase one");
        const std::size_t r = *leave, c = *enter;
        const Rational pivot = t(r, c);
        for (std::size_t j = 0; j < width; ++j) t(r, j) /= pivot;
        rhs[r] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || t(i, c).is_zero()) continue;
            const Rational factor = t(i, c);
            for (std::size_t j = 0; j < width; ++j)
                if (!t(r, j).is_zero()) t(i, j) -= factor * t(r, j);
            rhs[i] -= factor * rhs[r];
        }
        if (!reduced[c].is_zero()) {
            const Rational factor = reduced[c];
            for (std::size_t j = 0; j < width; ++j)
                if (!t(r, j).is_zero()) reduced[j] -= factor * t(r, j);
            objective += factor * rhs[r];
        }
        basis[r] = c;
    }

    if (objective.is_zero()) {
        QVector x(n);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) x[basis[i]] = rhs[i];
        return Feasible{std::move(x)};
    }
    // Phase-one duals: reduced cost of artificial i equals 1 - y_i.
    QVector y(m);
    for (std::size_t i = 0; i < m; ++i) {
        y[i] = Rational(1) - reduced[n + i];
        if (flip[i] < 0) y[i] = -y[i];
    }
    return Infeasible{std::move(y)};
}

bool verify_feasibility(const QMatrix& a, const QVector& b, const FeasibilityResult& result) {
    if (const auto* f = std::get_if<Feasible>(&result)) {
        if (f->x.size() != a.cols()) return false;
        for (const auto& xi : f->x)
            if (xi.sign() < 0) return false;
        return a * f->x == b;
    }
    const auto& y = std::get<Infeasible>(result).certificate;
    if (y.size() != a.rows()) return false;
    const QVector ya = a.transpose() * y;
    for (const auto& v : ya)
        if (v.sign() > 0) return false;
    return dot(y, b).sign() > 0;
}

QuadraticForm1D QuadraticForm1D::composite(const Rational& alpha, const Rational& beta,
                                           const Rational& gamma, const Rational& delta) {
    return {alpha * beta * beta + delta, Rational(-2) * (alpha * beta * gamma + delta),
            alpha * gamma * gamma + delta};
}

QuadraticMinimum minimize_quadratic(const QuadraticForm1D& f) {
    if (f.a.sign() <= 0) throw Error(ErrorKind::NotStrictlyConvex, "leading coefficient " + f.a.str());
    const Rational t = -f.b / (Rational(2) * f.a);
    return {t, f(t)};
}

}  // namespace logsurf
