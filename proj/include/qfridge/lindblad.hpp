// lindblad.hpp — LGKS dissipators, Liouvillians, steady states and heat currents

#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "qfridge/baths.hpp"
#include "qfridge/numerics.hpp"

namespace qfridge::models { struct FridgeSpec; }

namespace qfridge::lindblad {

using baths::Bath;
using baths::BathLabel;
using numerics::Complex;
using numerics::ComplexMatrix;
using numerics::CVector;

// Column-major stacking of the density matrix: rho(i,j) sits at index j*n + i.
CVector vectorize(const ComplexMatrix& rho);
ComplexMatrix unvectorize(const CVector& v, std::size_t n);

// One decay channel: [H_wm, A] = -omega A, channels come in +-omega pairs with
// A(-omega) = A(omega)^dag. lambda is nonzero only for a squeezed work bath.
struct JumpChannel {
    BathLabel bath;
    double omega;
    ComplexMatrix op;
    double gamma;
    double lambda;
};

struct Liouvillian {
    std::size_t dim = 0;                       // working-material dimension n
    std::array<ComplexMatrix, 3> bath_blocks;  // n^2 x n^2 generators per bath
    ComplexMatrix total;                       // sum of the blocks
    std::vector<JumpChannel> channels;
};

// Splits a Hermitian coupling operator into eigenoperators of h_wm:
// A(omega) = sum over eigenprojectors Pi(e) C Pi(e + omega). Frequencies are
// grouped with relative tolerance 1e-9 (of the spectral span); channels with
// vanishing operators are dropped. Sum of all returned operators equals the
// coupling.
std::vector<std::pair<double, ComplexMatrix>> eigenoperator_decomposition(
    const ComplexMatrix& h_wm, const ComplexMatrix& coupling);

// Assembles the full generator: thermal LGKS terms for every bath plus the
// squeezed two-photon terms for a work bath with r > 0.
Liouvillian build_liouvillian(const ComplexMatrix& h_wm,
                              const std::array<ComplexMatrix, 3>& couplings,
                              const std::array<Bath, 3>& baths);
Liouvillian build_liouvillian(const models::FridgeSpec& spec,
                              const std::array<Bath, 3>& baths);

// Stationary density matrix: trace-normalized kernel of the total generator.
// The last diagonal row is replaced by the trace constraint (that row is
// linearly dependent on the others by trace preservation) and the residual is
// re-checked against the untouched generator. Throws DegenerateKernel when the
// kernel is not one-dimensional (a machine-level second singular value of the
// constrained system; physically slow channels stay clear of the floor).
ComplexMatrix steady_state(const Liouvillian& l);

// Q_alpha = tr[H_wm (L_alpha rho)] for the steady state rho; NotSteady when the
// total-generator residual on rho exceeds tolerance.
double heat_current(const Liouvillian& l, BathLabel bath, const ComplexMatrix& rho,
                    const ComplexMatrix& h_wm);

// Entropy production -sum_alpha Q_alpha / T_alpha; callers substitute the
// effective work temperature when the work bath is squeezed.
double entropy_production(const std::array<double, 3>& currents,
                          const std::array<double, 3>& temperatures);

// Smallest eigenvalue of any per-frequency-pair Kossakowski matrix, normalized
// by its largest entry. Complete positivity requires this to be >= -1e-10.
// For a squeezed pair the matrix is [[G(+w), 2 Lambda], [2 Lambda, G(-w)]] in
// the basis (A, A^dag); thermal channels contribute their (nonnegative) rates.
double kossakowski_min_eigenvalue(const Liouvillian& l);

// Classical rate-equation shortcut for the steady state, exact whenever the
// spectrum of h_wm is non-degenerate (populations then close on themselves).
// Cross-validated against the full solver in the test suite.
struct KineticsResult {
    std::vector<double> populations;    // in the eigenbasis of h_wm, ascending
    std::array<double, 3> currents;     // per-bath steady heat currents
};

KineticsResult steady_kinetics(const ComplexMatrix& h_wm,
                               const std::array<ComplexMatrix, 3>& couplings,
                               const std::array<Bath, 3>& baths);

} // namespace qfridge::lindblad
