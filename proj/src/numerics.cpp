#include "qfridge/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace qfridge::numerics {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = std::conj(data_[k]);
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& v : data_) v *= scalar;
    return *this;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    double dev = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return dev <= tol * std::max(max_abs(), 1e-300);
}

CVector ComplexMatrix::apply(const CVector& x) const {
    CVector y(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Complex acc = 0;
        const Complex* row = data_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

LuFactor::LuFactor(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw SingularMatrix("LuFactor: matrix not square");
    n_ = a.rows();
    lu_ = a.data();
    pivots_.resize(n_);
    const double scale = a.max_abs();
    const double floor = kPivotTol * std::max(scale, 1e-300);

    for (std::size_t k = 0; k < n_; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu_[k * n_ + k]);
        for (std::size_t i = k + 1; i < n_; ++i) {
            const double v = std::abs(lu_[i * n_ + k]);
            if (v > best) { best = v; piv = i; }
        }
        if (best < floor) throw SingularMatrix("LuFactor: pivot below tolerance");
        pivots_[k] = piv;
        if (piv != k)
            for (std::size_t j = 0; j < n_; ++j) std::swap(lu_[k * n_ + j], lu_[piv * n_ + j]);
        const Complex pivot = lu_[k * n_ + k];
        for (std::size_t i = k + 1; i < n_; ++i) {
            const Complex m = lu_[i * n_ + k] / pivot;
            lu_[i * n_ + k] = m;
            if (m == Complex(0.0)) continue;
            for (std::size_t j = k + 1; j < n_; ++j) lu_[i * n_ + j] -= m * lu_[k * n_ + j];
        }
    }
}

CVector LuFactor::solve(CVector b) const {
    for (std::size_t k = 0; k < n_; ++k)
        if (pivots_[k] != k) std::swap(b[k], b[pivots_[k]]);
    for (std::size_t i = 1; i < n_; ++i) {
        Complex acc = b[i];
        for (std::size_t j = 0; j < i; ++j) acc -= lu_[i * n_ + j] * b[j];
        b[i] = acc;
    }
    for (std::size_t ii = n_; ii-- > 0;) {
        Complex acc = b[ii];
        for (std::size_t j = ii + 1; j < n_; ++j) acc -= lu_[ii * n_ + j] * b[j];
        b[ii] = acc / lu_[ii * n_ + ii];
    }
    return b;
}

CVector LuFactor::solve_adjoint(CVector b) const {
    // A = P^T L U, so A^dag x = b solves as U^dag y = b, L^dag w = y, x = P^T w.
    for (std::size_t i = 0; i < n_; ++i) {
        Complex acc = b[i];
        for (std::size_t j = 0; j < i; ++j) acc -= std::conj(lu_[j * n_ + i]) * b[j];
        b[i] = acc / std::conj(lu_[i * n_ + i]);
    }
    for (std::size_t ii = n_; ii-- > 0;) {
        Complex acc = b[ii];
        for (std::size_t j = ii + 1; j < n_; ++j) acc -= std::conj(lu_[j * n_ + ii]) * b[j];
        b[ii] = acc;
    }
    for (std::size_t kk = n_; kk-- > 0;)
        if (pivots_[kk] != kk) std::swap(b[kk], b[pivots_[kk]]);
    return b;
}

CVector solve_linear(const ComplexMatrix& a, const CVector& b) {
    return LuFactor(a).solve(b);
}

double vector_max_abs(const CVector& v) {
    double m = 0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

double vector_norm(const CVector& v) {
    double s = 0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

double smallest_singular_value_estimate(const LuFactor& lu) {
    const std::size_t n = lu.dim();
    // deterministic pseudo-random start
    std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ (0x100000001b3ULL * n);
    auto next = [&state]() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
    };
    CVector v(n);
    for (auto& x : v) x = Complex(next(), next());
    double nv = vector_norm(v);
    for (auto& x : v) x /= nv;

    double sigma = 0;
    for (int iter = 0; iter < 3; ++iter) {
        CVector u = lu.solve_adjoint(v);
        CVector w = lu.solve(u);       // w = (A^dag A)^{-1} v
        const double nw = vector_norm(w);
        sigma = 1.0 / std::sqrt(nw);
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nw;
    }
    return sigma;
}

namespace {

// One Jacobi rotation on rows/cols (p,q); A must be Hermitian, V accumulates.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const Complex phase = apq / mag;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * mag);
    const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex rpq = s * phase;             // R[p][q]
    const Complex rqp = -s * std::conj(phase); // R[q][p]
    const std::size_t n = a.rows();

    // columns: B = A R
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p), akq = a(k, q);
        a(k, p) = akp * c + akq * rqp;
        a(k, q) = akp * rpq + akq * c;
    }
    // rows: A' = R^dag B
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk + std::conj(rqp) * aqk;
        a(q, k) = std::conj(rpq) * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp * c + vkq * rqp;
        v(k, q) = vkp * rpq + vkq * c;
    }
}

double off_diagonal_max(const ComplexMatrix& a) {
    double m = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

} // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix& h) {
    if (h.rows() != h.cols() || !h.is_hermitian())
        throw NotHermitian("hermitian_eigensystem: input not Hermitian");

    const std::size_t n = h.rows();
    ComplexMatrix a = h;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(h.max_abs(), 1e-300);
    const double tol = 1e-15 * scale;

    for (int sweep = 0; sweep < 100 && off_diagonal_max(a) > tol; ++sweep)
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > tol * 1e-2) jacobi_rotate(a, v, p, q);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&diag](std::size_t i, std::size_t j) { return diag[i] < diag[j]; });

    Eigensystem out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = diag[order[j]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

} // namespace qfridge::numerics
