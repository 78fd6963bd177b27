// models.hpp — The three fridge designs and their closed-form steady-state results

#pragma once

#include <array>
#include <string>

#include "qfridge/baths.hpp"
#include "qfridge/numerics.hpp"

namespace qfridge::models {

using baths::Bath;
using baths::BathLabel;
using numerics::ComplexMatrix;

enum class Design { ThreeLevel, TwoQubit, ThreeQubit };

const char* name(Design d);
Design design_from_string(const std::string& s);

// Working-material parameters. The resonance constraint omega_h = omega_c + omega_w
// holds for every design (by construction when built from (omega_c, omega_w)).
struct FridgeSpec {
    Design design;
    double omega_c;
    double omega_w;
    double omega_h;
    double g = 0.0;  // three-body interaction strength, ThreeQubit only

    static FridgeSpec make(Design design, double omega_c, double omega_w, double g = 0.0);
    // omega_w derived as omega_h - omega_c; NonPositiveFrequency if <= 0
    static FridgeSpec from_hot(Design design, double omega_h, double omega_c, double g = 0.0);

    void validate() const;  // InvalidSpec / NonPositiveFrequency / ResonanceViolation
};

// Hamiltonian plus the Hermitian contact operator for each bath,
// indexed by baths::index(label). Basis conventions:
//   ThreeLevel: |1>,|2>,|3> ascending energy (0, omega_c, omega_h)
//   TwoQubit:   hot (x) cold,  |n_h n_c>
//   ThreeQubit: work (x) hot (x) cold,  |n_w n_h n_c>
struct WorkingMaterial {
    ComplexMatrix h;
    std::array<ComplexMatrix, 3> couplings;
};

WorkingMaterial build_working_material(const FridgeSpec& spec);

using BathTriple = std::array<Bath, 3>;  // order: work, hot, cold

// Closed-form stationary populations of the three-level fridge (rate-equation
// solution via spanning trees; valid for any per-channel rates, including a
// squeezed work bath).
std::array<double, 3> three_level_steady_populations(const FridgeSpec& spec,
                                                     const BathTriple& baths);

// Stationary cooling power of the three-level fridge. Closed form at r = 0;
// the squeezed case is routed through the numeric Liouvillian.
double three_level_cooling_power(const FridgeSpec& spec, const BathTriple& baths);

// Closed-form-only evaluator used inside optimization loops (no solver).
double three_level_cooling_power_closed(const FridgeSpec& spec, const BathTriple& baths);

// Per-component effective rates of the two elementary three-level masers the
// two-qubit fridge decomposes into, and their cold currents.
struct TwoQubitComponentConstants {
    double z01, z10, alpha, delta;
};

struct TwoQubitBreakup {
    double q1, q2;                            // component fluxes from matrix elements
    double q1_closed, q2_closed;              // same fluxes from the closed forms
    std::array<double, 3> component1;         // (work, hot, cold) currents, closed form
    std::array<double, 3> component2;
    TwoQubitComponentConstants constants1;
    TwoQubitComponentConstants constants2;
};

// Computes both routes (numeric matrix-element extraction and closed forms)
// and verifies they agree to 1e-8 relative; throws SolverFailure otherwise.
TwoQubitBreakup two_qubit_breakup(const FridgeSpec& spec, const BathTriple& baths);

// Closed-form total cooling power omega_c (q1 + q2); no solver involved.
double two_qubit_cooling_power_closed(const FridgeSpec& spec, const BathTriple& baths);

} // namespace qfridge::models
