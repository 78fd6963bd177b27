#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qfridge/models.hpp"
#include "qfridge/rng.hpp"
#include "qfridge/thermo.hpp"
#include "test_support.hpp"

using namespace qfridge;
using thermo::Temperatures;

TEST_CASE("carnot efficiency: thermal value, squeezed limit, degenerate gradient") {
    const Temperatures bench_temps{170, 80, 30};
    CHECK(thermo::carnot_efficiency(bench_temps) == doctest::Approx(0.3176470588).epsilon(1e-10));

    // saturates to T_c/(T_h - T_c) as r grows
    CHECK(thermo::carnot_efficiency(bench_temps, 30.0, 44.0) == doctest::Approx(0.6).epsilon(1e-9));

    // no gradient to harvest: T_w -> T_h degrades eps_C to zero
    CHECK(thermo::carnot_efficiency({80.0000001, 80, 30}) < 1e-8);
    CHECK_THROWS_AS(thermo::carnot_efficiency({50, 80, 30}), DomainError);
    CHECK_THROWS_AS(thermo::carnot_efficiency({170, 20, 30}), DomainError);
}

TEST_CASE("carnot efficiency strictly increases with squeezing") {
    rng::SplitMix64 gen(51);
    for (int k = 0; k < 100; ++k) {
        const double tc = std::exp(gen.uniform(0, 2));
        const Temperatures t{tc * gen.uniform(3, 30), tc * gen.uniform(1.5, 2.5), tc};
        const double ww = std::exp(gen.uniform(-1, 3));
        double prev = thermo::carnot_efficiency(t);
        for (double r : {0.3, 0.8, 1.5, 2.5}) {
            const double ec = thermo::carnot_efficiency(t, r, ww);
            CHECK(ec > prev);
            prev = ec;
        }
        CHECK(prev < t.cold / (t.hot - t.cold));  // below the power-driven limit
    }
}

TEST_CASE("cooling window edge: benchmark value, degenerate cases, squeezing growth") {
    const Temperatures bench_temps{170, 80, 30};
    CHECK(thermo::cooling_window_max_fixed_hot(50.0, bench_temps) ==
          doctest::Approx(12.0535714286).epsilon(1e-10));
    CHECK(thermo::cooling_window_max_fixed_hot(50.0, {80, 80, 30}) == 0.0);
    CHECK_THROWS_AS(thermo::cooling_window_max_fixed_hot(50.0, {60, 80, 30}), DomainError);

    double prev = thermo::cooling_window_max_fixed_hot(50.0, bench_temps);
    for (double r : {0.5, 1.0, 1.5, 2.0}) {
        const double edge = thermo::cooling_window_max_fixed_hot(50.0, bench_temps, r);
        CHECK(edge > prev);
        prev = edge;
    }

    // fixed-work mode agrees with omega_w * eps_C
    const double ww = 44.0;
    CHECK(thermo::cooling_window_max_fixed_work(ww, bench_temps) ==
          doctest::Approx(ww * thermo::carnot_efficiency(bench_temps)).epsilon(1e-12));
}

TEST_CASE("squeezed window edge is self-consistent: power vanishes there") {
    const Temperatures bench_temps{170, 80, 30};
    const auto spec_edge = [&](double r) {
        const double edge = thermo::cooling_window_max_fixed_hot(50.0, bench_temps, r);
        const auto b = test_support::make_baths(170, 80, 30, 3, 0.03, r);
        const auto spec = models::FridgeSpec::from_hot(models::Design::ThreeLevel, 50.0,
                                                       edge * (1.0 - 1e-9));
        return models::three_level_cooling_power(spec, b);
    };
    const auto b0 = test_support::make_baths(170, 80, 30, 3, 0.03);
    const double mid = models::three_level_cooling_power(
        models::FridgeSpec::from_hot(models::Design::ThreeLevel, 50.0, 6.0), b0);
    for (double r : {0.5, 1.5}) CHECK(std::abs(spec_edge(r)) < 1e-6 * mid);
}

TEST_CASE("performance bound fractions") {
    CHECK(thermo::performance_bound(1, 0.4) == doctest::Approx(0.2));
    CHECK(thermo::performance_bound(2, 0.9) == doctest::Approx(0.6));
    CHECK(thermo::performance_bound(3, 0.4) == doctest::Approx(0.3));
    CHECK(thermo::performance_bound(3, 0.0) == 0.0);
    CHECK_THROWS_AS(thermo::performance_bound(4, 0.4), DomainError);
}

TEST_CASE("report classifies equilibrium, chiller and heater") {
    const auto eq = thermo::report({0.0, 0.0, 0.0}, {50, 50, 50}, 0.0, 5.0);
    CHECK(eq.mode == thermo::Mode::equilibrium);
    CHECK(eq.sigma == 0.0);
    CHECK(eq.efficiency == 0.0);

    // ideal chiller currents: (q_w, q_h, q_c) = F (w_w, -w_h, w_c)
    const double ww = 44, wh = 50, wc = 6, flux = 0.3;
    const auto chill =
        thermo::report({flux * ww, -flux * wh, flux * wc}, {170, 80, 30}, 0.0, ww);
    CHECK(chill.mode == thermo::Mode::chiller);
    CHECK(chill.efficiency == doctest::Approx(wc / ww).epsilon(1e-12));
    CHECK(chill.sigma >= 0);
    CHECK(chill.carnot == doctest::Approx(0.3176470588).epsilon(1e-9));

    // past the window edge the cycle reverses: omega_c = 20 > omega_c,max
    const auto heat =
        thermo::report({-flux * 30, flux * 50, -flux * 20}, {170, 80, 30}, 0.0, 30.0);
    CHECK(heat.mode == thermo::Mode::heater);
    CHECK(heat.sigma > 0);
}

TEST_CASE("report enforces the laws") {
    // first law broken
    CHECK_THROWS_AS(thermo::report({1.0, -0.5, 0.2}, {170, 80, 30}, 0.0, 44.0),
                    LawViolation);
    // second law broken: cooling without any work input
    CHECK_THROWS_AS(thermo::report({0.0, -0.2, 0.2}, {170, 80, 30}, 0.0, 44.0),
                    LawViolation);
}

TEST_CASE("report substitutes the effective work temperature under squeezing") {
    // superefficient currents: efficiency above eps_C(0) yet sigma >= 0 at T_eff
    const double ww = 44, wh = 50, wc = 6, flux = 0.3;
    const double r = 2.0;
    const auto rep =
        thermo::report({flux * ww, -flux * wh, flux * wc}, {170, 80, 30}, r, ww);
    CHECK(rep.t_work_effective > 170.0);
    CHECK(rep.carnot > 0.3176470588);
    CHECK(rep.sigma >= 0.0);
}
