// baths.hpp — Bosonic reservoirs: temperatures, dimensionality, coupling, squeezing

#pragma once

#include <array>
#include <cstddef>

#include "qfridge/errors.hpp"

namespace qfridge::baths {

enum class BathLabel { work = 0, hot = 1, cold = 2 };

inline constexpr std::array<BathLabel, 3> kAllBaths{BathLabel::work, BathLabel::hot,
                                                    BathLabel::cold};

inline constexpr std::size_t index(BathLabel l) { return static_cast<std::size_t>(l); }
const char* name(BathLabel l);

// Equilibrium (or squeezed-thermal, work only) bosonic reservoir with flat
// spectral density. Units hbar = k_B = 1. Immutable after construction.
struct Bath {
    BathLabel label;
    double temperature;  // > 0
    int dimensionality;  // spatial dimension d in {1,2,3}
    double coupling;     // gamma_0 > 0, overall rate prefactor
    double squeezing;    // r >= 0, nonzero only for the work bath

    Bath(BathLabel label, double temperature, int dimensionality, double coupling,
         double squeezing = 0.0);
};

// Weak-coupling admissibility gamma_0 <= 1e-2 * T; throws DomainError.
// Enforced by experiment drivers in strict mode, not by library calls.
void require_weak_coupling(const Bath& bath);

// N(omega) = 1 / (exp(omega/T) - 1); DomainError for omega <= 0.
double planck_occupation(double omega, double temperature);

// Squeezed occupation N^r = N cosh(2r) + sinh^2 r.
double squeezed_occupation(double omega, double temperature, double r);

// One-sided decay rate at signed frequency: gamma_0 |w|^d (N+1) for w > 0,
// gamma_0 |w|^d N for w < 0, with N -> N^r for a squeezed work bath.
// DomainError for omega = 0.
double decay_rate(double omega, const Bath& bath);

// Two-photon cross rate of the squeezed work dissipator:
// Lambda = (1/2) gamma_0 |w|^d sinh(2r) (2N(|w|)+1)/2. Even in the sign of omega.
double squeeze_cross_rate(double omega, const Bath& bath);

// Effective work temperature seen by a two-level contact at gap omega_w:
// T_eff = omega_w / log[(tanh^2 r + e^{w/T}) / (1 + tanh^2 r e^{w/T})] >= T.
double effective_temperature(double omega_w, double temperature, double r);
double effective_temperature(double omega_w, const Bath& bath);

} // namespace qfridge::baths
