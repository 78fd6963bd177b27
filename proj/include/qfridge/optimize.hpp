// optimize.hpp — Cooling-power maximization, performance curves and random sampling

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qfridge/models.hpp"
#include "qfridge/thermo.hpp"

namespace qfridge::optimize {

using models::BathTriple;
using models::Design;
using models::FridgeSpec;
using thermo::Temperatures;

enum class FixedFrequency { hot, work };

struct SearchSettings {
    std::size_t coarse_points = 256;  // first-stage grid over the cooling window
    double rel_tol = 1e-6;            // golden-section frequency accuracy
};

struct OptimumPoint {
    double omega_w;     // maximizing frequencies
    double omega_c;
    double power;       // maximum cooling power
    double efficiency;  // efficiency at maximum power
    double ratio;       // efficiency / eps_C(r)
    double x;           // omega_c / omega_c,max
};

// Maximizes Q_c over the cooling window with one frequency held fixed (the
// resonance constraint removes the remaining freedom). Deterministic; two-stage
// coarse grid + golden-section refinement; ties resolve to the smallest
// omega_c. Throws NoCoolingRegion when Q_c <= 0 on the whole coarse grid.
OptimumPoint maximize_cooling_power(Design design, double g, const BathTriple& baths,
                                    FixedFrequency fixed, double fixed_value,
                                    const SearchSettings& settings = {});

struct CharacteristicPoint {
    double omega_c;
    double efficiency;
    double power;
};

struct CharacteristicCurve {
    double r;
    double omega_c_max;
    double carnot;             // eps_C(r) at the window-edge omega_w
    double max_power;
    double efficiency_at_max;  // efficiency where the power peaks
    double max_efficiency;
    std::vector<CharacteristicPoint> points;
};

// Sweeps omega_c across (0, omega_c,max(r)) at fixed omega_h and emits
// (efficiency, cooling power) from the numeric steady state, one curve per r.
std::vector<CharacteristicCurve> performance_characteristic(
    Design design, const Temperatures& temps, double omega_h,
    const std::vector<double>& r_list, int dimension, double gamma0,
    std::size_t points = 400);

// One random fridge of the bound-reproduction experiment. Distributions
// (log-uniform): T_c in [1,10], T_h/T_c and T_w/T_h in [1.5,30],
// omega_h in [0.1 T_c, 5 T_h], g in [3e-4, 0.5] omega_h (ThreeQubit);
// gamma_0 = 1e-3 min(T_c, omega_c,max).
struct SampleDraw {
    Temperatures temps;
    double omega_h;
    double g;
    double gamma0;
};

SampleDraw draw_parameters(Design design, std::uint64_t master_seed, std::uint64_t index);

struct SampleRow {
    std::uint64_t index;
    SampleDraw draw;
    bool cooled;         // false when the draw hit NoCoolingRegion
    OptimumPoint opt;    // valid when cooled
    double carnot;
};

struct SampleConfig {
    Design design = Design::ThreeLevel;
    int dimension = 3;            // shared by all three baths, as in the histograms
    std::size_t count = 1000;
    std::uint64_t seed = 1;
    FixedFrequency fixed = FixedFrequency::hot;
    SearchSettings settings{};
};

// Deterministic at any worker count: every draw derives its own seed and rows
// come back in draw order.
std::vector<SampleRow> run_sampling(const SampleConfig& config, unsigned threads = 1);

// Shared worker-pool helper for embarrassingly parallel index loops.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

} // namespace qfridge::optimize
