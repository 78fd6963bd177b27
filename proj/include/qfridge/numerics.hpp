// numerics.hpp — Dense complex matrix algebra for small superoperators (<= 64x64)

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qfridge/errors.hpp"

namespace qfridge::numerics {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

// Tolerance hierarchy, one decade apart so checks cannot cascade into each other.
inline constexpr double kPivotTol = 1e-14;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kResidualTol = 1e-10;

// Row-major dense complex matrix with value semantics.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const CVector& data() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    Complex trace() const;
    double max_abs() const;

    // max|A - A^dag| <= kHermitianTol * max|A|
    bool is_hermitian(double tol = kHermitianTol) const;

    CVector apply(const CVector& x) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    CVector data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);

// Block product: (a (x) b)[(i*rows_b+k),(j*cols_b+l)] = a[i,j]*b[k,l]
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

// LU factorization with partial pivoting. Throws SingularMatrix when a pivot
// falls below kPivotTol * max|a|.
class LuFactor {
  public:
    explicit LuFactor(const ComplexMatrix& a);

    CVector solve(CVector b) const;          // a x = b
    CVector solve_adjoint(CVector b) const;  // a^dag x = b

    std::size_t dim() const { return n_; }

  private:
    std::size_t n_ = 0;
    CVector lu_;
    std::vector<std::size_t> pivots_;
};

CVector solve_linear(const ComplexMatrix& a, const CVector& b);

// Inverse-power estimate of the smallest singular value, used to probe for
// near-singular steady-state systems. Deterministic start vector.
double smallest_singular_value_estimate(const LuFactor& lu);

struct Eigensystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // orthonormal columns, h = V diag(values) V^dag
};

// Cyclic Jacobi diagonalization for Hermitian matrices. Throws NotHermitian
// when the Hermiticity invariant fails.
Eigensystem hermitian_eigensystem(const ComplexMatrix& h);

double vector_max_abs(const CVector& v);
double vector_norm(const CVector& v);

} // namespace qfridge::numerics
