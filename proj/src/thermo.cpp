#include "qfridge/thermo.hpp"

#include <algorithm>
#include <cmath>

namespace qfridge::thermo {

const char* name(Mode m) {
    switch (m) {
        case Mode::chiller: return "chiller";
        case Mode::heater: return "heater";
        case Mode::engine: return "engine";
        case Mode::equilibrium: return "equilibrium";
    }
    return "?";
}

namespace {

void check_ordering(const Temperatures& t) {
    if (!(t.work > 0 && t.hot > 0 && t.cold > 0))
        throw DomainError("temperatures must be positive");
    if (!(t.work > t.hot) || !(t.hot > t.cold))
        throw DomainError("temperature ordering T_w > T_h > T_c required");
}

} // namespace

double carnot_efficiency(const Temperatures& t, double r, double omega_w) {
    check_ordering(t);
    if (r == 0.0) return (t.work - t.hot) * t.cold / ((t.hot - t.cold) * t.work);
    const double teff = baths::effective_temperature(omega_w, t.work, r);
    return t.cold / (t.hot - t.cold) * (1.0 - t.hot / teff);
}

double cooling_window_max_fixed_hot(double omega_h, const Temperatures& t, double r) {
    if (omega_h <= 0) throw DomainError("cooling_window_max: omega_h must be positive");
    if (!(t.work > 0 && t.hot > 0 && t.cold > 0))
        throw DomainError("temperatures must be positive");
    if (t.work == t.hot && r == 0.0) return 0.0;
    if (t.work < t.hot && r == 0.0)
        throw DomainError("cooling_window_max: T_w > T_h required at r = 0");

    auto edge = [&](double t_work) {
        return (t_work - t.hot) * t.cold / ((t_work - t.cold) * t.hot) * omega_h;
    };
    if (r == 0.0) return edge(t.work);

    // T_eff depends on omega_w = omega_h - omega_c,max; iterate to the fixed point
    double wc = edge(baths::effective_temperature(omega_h, t.work, r));
    for (int iter = 0; iter < 200; ++iter) {
        const double teff = baths::effective_temperature(omega_h - wc, t.work, r);
        const double next = edge(teff);
        if (std::abs(next - wc) <= 1e-14 * omega_h) return next;
        wc = next;
    }
    return wc;
}

double cooling_window_max_fixed_work(double omega_w, const Temperatures& t, double r) {
    if (omega_w <= 0) throw DomainError("cooling_window_max: omega_w must be positive");
    if (t.work == t.hot && r == 0.0) return 0.0;
    if (t.work < t.hot && r == 0.0)
        throw DomainError("cooling_window_max: T_w > T_h required at r = 0");
    return omega_w * carnot_efficiency(t, r, omega_w);
}

double performance_bound(int d_c, double carnot) {
    if (d_c < 1 || d_c > 3) throw DomainError("performance_bound: d_c must be 1, 2 or 3");
    return static_cast<double>(d_c) / (d_c + 1) * carnot;
}

HeatReport report(const std::array<double, 3>& currents, const Temperatures& t, double r,
                  double omega_w, double current_floor) {
    HeatReport rep;
    rep.currents = currents;
    rep.omega_w = omega_w;
    rep.t_work_effective =
        r > 0 ? baths::effective_temperature(omega_w, t.work, r) : t.work;

    const std::array<double, 3> temps{rep.t_work_effective, t.hot, t.cold};
    const double qw = currents[0], qh = currents[1], qc = currents[2];
    const double qmax = std::max({std::abs(qw), std::abs(qh), std::abs(qc)});
    const bool noise_level = qmax <= current_floor;  // all currents count as zero

    rep.first_law_residual = qmax > 0 ? std::abs(qw + qh + qc) / qmax : 0.0;
    if (!noise_level && rep.first_law_residual > 1e-9)
        throw LawViolation("report: first-law residual above 1e-9 of max current");

    rep.sigma = 0.0;
    double sigma_scale = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        rep.sigma -= currents[i] / temps[i];
        sigma_scale += std::abs(currents[i]) / temps[i];
    }
    if (!noise_level && rep.sigma < -1e-9 * std::max(1.0, sigma_scale))
        throw LawViolation("report: negative entropy production beyond tolerance");

    rep.carnot = t.work > t.hot && t.hot > t.cold ? carnot_efficiency(t, r, omega_w) : 0.0;

    // classification: equal effective temperatures mean detailed equilibrium;
    // otherwise sign pattern with a dead band against edge chatter
    const double dead = 1e-12 * qmax;
    const bool temps_equal = std::abs(temps[0] - temps[1]) <= 1e-9 * temps[0] &&
                             std::abs(temps[1] - temps[2]) <= 1e-9 * temps[1];
    if (temps_equal || noise_level) {
        rep.mode = Mode::equilibrium;
        rep.efficiency = 0.0;
        return rep;
    }
    if (qc > dead && qw > dead && qh < -dead)
        rep.mode = Mode::chiller;
    else if (qc < -dead && qh > dead)
        rep.mode = Mode::heater;  // cooling cycle running in reverse
    else
        rep.mode = Mode::engine;
    rep.efficiency = std::abs(qw) > dead ? qc / qw : 0.0;
    return rep;
}

} // namespace qfridge::thermo
