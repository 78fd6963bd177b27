#include "qfridge/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "qfridge/lindblad.hpp"
#include "qfridge/rng.hpp"

namespace qfridge::optimize {

namespace {

using baths::Bath;
using baths::BathLabel;

Temperatures temps_of(const BathTriple& b) {
    return {b[0].temperature, b[1].temperature, b[2].temperature};
}

FridgeSpec spec_at(Design design, double g, double omega_c, FixedFrequency fixed,
                   double fixed_value) {
    const double gg = design == Design::ThreeQubit ? g : 0.0;
    if (fixed == FixedFrequency::hot)
        return FridgeSpec::from_hot(design, fixed_value, omega_c, gg);
    return FridgeSpec::make(design, omega_c, fixed_value, gg);
}

// Cooling power without a dense solve: closed forms for the ideal designs,
// population kinetics for the three-qubit one. The squeezed three-level case
// follows the numeric route inside three_level_cooling_power.
double cooling_power(const FridgeSpec& spec, const BathTriple& b) {
    switch (spec.design) {
        case Design::ThreeLevel: return models::three_level_cooling_power(spec, b);
        case Design::TwoQubit: return models::two_qubit_cooling_power_closed(spec, b);
        case Design::ThreeQubit: {
            const auto wm = models::build_working_material(spec);
            return lindblad::steady_kinetics(wm.h, wm.couplings, b)
                .currents[baths::index(BathLabel::cold)];
        }
    }
    return 0.0;
}

double efficiency_at(const FridgeSpec& spec, const BathTriple& b) {
    if (spec.design != Design::ThreeQubit) return spec.omega_c / spec.omega_w;  // ideal ratio
    const auto wm = models::build_working_material(spec);
    const auto kin = lindblad::steady_kinetics(wm.h, wm.couplings, b);
    return kin.currents[baths::index(BathLabel::cold)] /
           kin.currents[baths::index(BathLabel::work)];
}

} // namespace

OptimumPoint maximize_cooling_power(Design design, double g, const BathTriple& b,
                                    FixedFrequency fixed, double fixed_value,
                                    const SearchSettings& settings) {
    const Temperatures temps = temps_of(b);
    const double r = b[baths::index(BathLabel::work)].squeezing;
    const double wc_max = fixed == FixedFrequency::hot
                              ? thermo::cooling_window_max_fixed_hot(fixed_value, temps, r)
                              : thermo::cooling_window_max_fixed_work(fixed_value, temps, r);
    if (wc_max <= 0) throw NoCoolingRegion("maximize_cooling_power: empty cooling window");

    auto objective = [&](double omega_c) {
        return cooling_power(spec_at(design, g, omega_c, fixed, fixed_value), b);
    };

    // stage 1: coarse grid across the window
    const std::size_t npts = std::max<std::size_t>(settings.coarse_points, 8);
    const double lo_frac = 1e-4, hi_frac = 1.0 - 1e-9;
    std::size_t best = 0;
    double best_val = 0.0;
    bool any_positive = false;
    std::vector<double> grid(npts);
    for (std::size_t k = 0; k < npts; ++k) {
        grid[k] = wc_max * (lo_frac + (hi_frac - lo_frac) * static_cast<double>(k) /
                                          static_cast<double>(npts - 1));
        const double val = objective(grid[k]);
        if (val > best_val) {  // strict: ties keep the smaller omega_c
            best_val = val;
            best = k;
            any_positive = true;
        }
    }
    if (!any_positive)
        throw NoCoolingRegion("maximize_cooling_power: no positive cooling power on grid");

    // stage 2: golden-section refinement inside the bracketing cells
    double a = grid[best > 0 ? best - 1 : 0];
    double bb = grid[std::min(best + 1, npts - 1)];
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = bb - golden * (bb - a), x2 = a + golden * (bb - a);
    double f1 = objective(x1), f2 = objective(x2);
    while (bb - a > settings.rel_tol * wc_max) {
        if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + golden * (bb - a); f2 = objective(x2);
        } else {
            bb = x2; x2 = x1; f2 = f1;
            x1 = bb - golden * (bb - a); f1 = objective(x1);
        }
    }
    const double omega_c = 0.5 * (a + bb);

    OptimumPoint opt;
    opt.omega_c = omega_c;
    opt.omega_w = fixed == FixedFrequency::hot ? fixed_value - omega_c : fixed_value;
    opt.power = objective(omega_c);
    opt.x = omega_c / wc_max;
    const FridgeSpec spec = spec_at(design, g, omega_c, fixed, fixed_value);
    opt.efficiency = efficiency_at(spec, b);
    opt.ratio = opt.efficiency / thermo::carnot_efficiency(temps, r, opt.omega_w);
    return opt;
}

std::vector<CharacteristicCurve> performance_characteristic(
    Design design, const Temperatures& temps, double omega_h,
    const std::vector<double>& r_list, int dimension, double gamma0, std::size_t points) {
    points = std::max<std::size_t>(points, 2);
    std::vector<CharacteristicCurve> curves;
    for (double r : r_list) {
        if (r < 0) throw DomainError("performance_characteristic: r must be nonnegative");
        const BathTriple b{Bath(BathLabel::work, temps.work, dimension, gamma0, r),
                           Bath(BathLabel::hot, temps.hot, dimension, gamma0),
                           Bath(BathLabel::cold, temps.cold, dimension, gamma0)};
        CharacteristicCurve curve;
        curve.r = r;
        curve.omega_c_max = thermo::cooling_window_max_fixed_hot(omega_h, temps, r);
        curve.max_power = 0.0;
        curve.efficiency_at_max = 0.0;
        curve.max_efficiency = 0.0;
        curve.points.reserve(points);

        const double lo = 1.0 / static_cast<double>(points), hi = 1.0 - 1e-6;
        for (std::size_t k = 0; k < points; ++k) {
            const double frac = lo + (hi - lo) * static_cast<double>(k) /
                                         static_cast<double>(points - 1);
            const double omega_c = frac * curve.omega_c_max;
            const FridgeSpec spec = FridgeSpec::from_hot(design, omega_h, omega_c);
            const auto wm = models::build_working_material(spec);
            const auto l = lindblad::build_liouvillian(wm.h, wm.couplings, b);
            const auto rho = lindblad::steady_state(l);
            const double qc = lindblad::heat_current(l, BathLabel::cold, rho, wm.h);
            const double qw = lindblad::heat_current(l, BathLabel::work, rho, wm.h);
            const double eff = qw != 0.0 ? qc / qw : 0.0;
            curve.points.push_back({omega_c, eff, qc});
            if (qc > curve.max_power) {
                curve.max_power = qc;
                curve.efficiency_at_max = eff;
            }
            curve.max_efficiency = std::max(curve.max_efficiency, eff);
        }
        curve.carnot = thermo::carnot_efficiency(temps, r, omega_h - curve.omega_c_max);
        curves.push_back(std::move(curve));
    }
    return curves;
}

SampleDraw draw_parameters(Design design, std::uint64_t master_seed, std::uint64_t index) {
    rng::SplitMix64 gen(rng::derive_seed(master_seed, index));
    auto log_uniform = [&gen](double lo, double hi) {
        return std::exp(gen.uniform(std::log(lo), std::log(hi)));
    };
    SampleDraw d;
    d.temps.cold = log_uniform(1.0, 10.0);
    d.temps.hot = d.temps.cold * log_uniform(1.5, 30.0);
    d.temps.work = d.temps.hot * log_uniform(1.5, 30.0);
    d.omega_h = log_uniform(0.1 * d.temps.cold, 5.0 * d.temps.hot);
    d.g = design == Design::ThreeQubit ? d.omega_h * log_uniform(3e-4, 0.5) : 0.0;
    const double wc_max = thermo::cooling_window_max_fixed_hot(d.omega_h, d.temps);
    d.gamma0 = 1e-3 * std::min(d.temps.cold, wc_max);
    return d;
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= count) return;
                body(i);
            }
        });
    for (auto& th : pool) th.join();
}

std::vector<SampleRow> run_sampling(const SampleConfig& config, unsigned threads) {
    std::vector<SampleRow> rows(config.count);
    parallel_for(config.count, threads, [&](std::size_t i) {
        SampleRow row;
        row.index = i;
        row.draw = draw_parameters(config.design, config.seed, i);
        const int d = config.dimension;
        const BathTriple b{
            Bath(BathLabel::work, row.draw.temps.work, d, row.draw.gamma0),
            Bath(BathLabel::hot, row.draw.temps.hot, d, row.draw.gamma0),
            Bath(BathLabel::cold, row.draw.temps.cold, d, row.draw.gamma0)};
        row.carnot = thermo::carnot_efficiency(row.draw.temps);
        try {
            // the drawn frequency pins whichever dial the mode holds fixed
            row.opt = maximize_cooling_power(config.design, row.draw.g, b, config.fixed,
                                             row.draw.omega_h, config.settings);
            row.cooled = true;
        } catch (const NoCoolingRegion&) {
            row.opt = {};
            row.cooled = false;
        }
        rows[i] = row;
    });
    return rows;
}

} // namespace qfridge::optimize
