// thermo.hpp — Efficiencies, Carnot limits, cooling windows and law checks

#pragma once

#include <array>

#include "qfridge/baths.hpp"

namespace qfridge::thermo {

struct Temperatures {
    double work, hot, cold;
};

enum class Mode { chiller, heater, engine, equilibrium };
const char* name(Mode m);

// Carnot coefficient of performance. r = 0: (T_w - T_h) T_c / ((T_h - T_c) T_w);
// r > 0: (T_c / (T_h - T_c)) (1 - T_h / T_eff(omega_w, r)). Strictly increasing in r.
double carnot_efficiency(const Temperatures& t, double r = 0.0, double omega_w = 0.0);

// Cooling-window edge. Fixed omega_h: omega_c,max = (T_w - T_h) T_c / ((T_w - T_c) T_h) omega_h
// with T_w replaced by T_eff(omega_w = omega_h - omega_c,max, r) self-consistently
// for r > 0. Fixed omega_w: omega_c,max = omega_w * eps_C(r).
double cooling_window_max_fixed_hot(double omega_h, const Temperatures& t, double r = 0.0);
double cooling_window_max_fixed_work(double omega_w, const Temperatures& t, double r = 0.0);

// Model-independent ceiling on the efficiency at maximum power: d_c/(d_c+1) eps_C.
double performance_bound(int d_c, double carnot);

struct HeatReport {
    std::array<double, 3> currents;  // (work, hot, cold), positive into the machine
    double efficiency;               // Q_c / Q_w (0 at equilibrium)
    double sigma;                    // entropy production rate
    double first_law_residual;       // |sum Q| / max|Q|
    Mode mode;
    double omega_w;                  // contact gap used for T_eff / eps_C(r)
    double carnot;                   // eps_C at the stored omega_w and r
    double t_work_effective;
};

// Aggregates steady-state currents into a law-checked report. The work
// temperature is replaced by T_eff(omega_w, r) when r > 0. Throws LawViolation
// when the first law or the second law fails beyond tolerance. current_floor
// is the caller's numerical-noise scale for the currents; anything at or below
// it counts as zero (an equilibrium-grade current).
HeatReport report(const std::array<double, 3>& currents, const Temperatures& t, double r,
                  double omega_w, double current_floor = 0.0);

} // namespace qfridge::thermo
