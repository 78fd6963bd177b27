#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qfridge/lindblad.hpp"
#include "qfridge/models.hpp"
#include "qfridge/rng.hpp"
#include "test_support.hpp"

using namespace qfridge;
using models::Design;
using models::FridgeSpec;
using numerics::Complex;
using numerics::ComplexMatrix;
using test_support::make_baths;

TEST_CASE("working material spectra") {
    const auto tl = models::build_working_material(FridgeSpec::make(Design::ThreeLevel, 2, 5));
    auto eig = numerics::hermitian_eigensystem(tl.h);
    CHECK(eig.values[0] == doctest::Approx(0));
    CHECK(eig.values[1] == doctest::Approx(2));
    CHECK(eig.values[2] == doctest::Approx(7));

    const auto tq = models::build_working_material(FridgeSpec::make(Design::TwoQubit, 2, 5));
    eig = numerics::hermitian_eigensystem(tq.h);
    CHECK(eig.values[0] == doctest::Approx(0));
    CHECK(eig.values[1] == doctest::Approx(2));
    CHECK(eig.values[2] == doctest::Approx(7));
    CHECK(eig.values[3] == doctest::Approx(9));
}

TEST_CASE("three-qubit Hamiltonian mixes exactly |010> and |101>") {
    const auto free = models::build_working_material(
        FridgeSpec::make(Design::ThreeQubit, 2, 5, 0.0));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            if (i != j) CHECK(std::abs(free.h(i, j)) == 0.0);

    const double g = 0.4;
    const auto wm = models::build_working_material(
        FridgeSpec::make(Design::ThreeQubit, 2, 5, g));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j) {
            const double expect = (i == 2 && j == 5) ? g : 0.0;  // |010>=2, |101>=5
            CHECK(std::abs(wm.h(i, j) - Complex(expect)) == 0.0);
        }
    // diagonal carries the free gaps
    CHECK(wm.h(2, 2).real() == doctest::Approx(7.0));   // omega_h
    CHECK(wm.h(5, 5).real() == doctest::Approx(7.0));   // omega_w + omega_c
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(FridgeSpec::make(Design::ThreeLevel, -1.0, 2.0), NonPositiveFrequency);
    CHECK_THROWS_AS(FridgeSpec::from_hot(Design::TwoQubit, 2.0, 3.0), NonPositiveFrequency);
    CHECK_THROWS_AS(FridgeSpec::make(Design::ThreeLevel, 1.0, 2.0, 0.5), InvalidSpec);
    FridgeSpec broken{Design::ThreeLevel, 1.0, 2.0, 3.5, 0.0};
    CHECK_THROWS_AS(broken.validate(), ResonanceViolation);
    CHECK_NOTHROW(FridgeSpec::make(Design::ThreeQubit, 1.0, 2.0, 0.5).validate());
}

TEST_CASE("three-level populations: equilibrium, normalization, positivity") {
    const double t = 6.0;
    const auto b = make_baths(t, t, t, 2, 1e-3);
    const auto spec = FridgeSpec::make(Design::ThreeLevel, 1.0, 2.5);
    const auto pops = models::three_level_steady_populations(spec, b);
    // equal temperatures reduce to the Gibbs distribution
    const double z = 1.0 + std::exp(-spec.omega_c / t) + std::exp(-spec.omega_h / t);
    CHECK(pops[0] == doctest::Approx(1.0 / z).epsilon(1e-12));
    CHECK(pops[1] == doctest::Approx(std::exp(-spec.omega_c / t) / z).epsilon(1e-12));
    CHECK(pops[2] == doctest::Approx(std::exp(-spec.omega_h / t) / z).epsilon(1e-12));
    CHECK(pops[0] + pops[1] + pops[2] == doctest::Approx(1.0).epsilon(1e-15));
    for (double p : pops) CHECK(p > 0.0);
}

TEST_CASE("three-level cooling power window structure") {
    const thermo::Temperatures temps{170, 80, 30};
    const auto b = make_baths(temps.work, temps.hot, temps.cold, 3, 0.03);
    const double wc_max = thermo::cooling_window_max_fixed_hot(50.0, temps);

    auto power = [&](double wc) {
        return models::three_level_cooling_power(
            FridgeSpec::from_hot(Design::ThreeLevel, 50.0, wc), b);
    };
    CHECK(power(1e-9 * wc_max) < 1e-6 * power(0.5 * wc_max));
    CHECK(std::abs(power(wc_max)) < 1e-9 * power(0.5 * wc_max));
    CHECK(power(0.5 * wc_max) > 0);
    CHECK(power(1.02 * wc_max) < 0);  // sign flips past the edge

    // equal temperatures: detailed balance kills the cycle flux (up to the
    // roundoff of the cancelling rate products)
    const auto beq = make_baths(80, 80, 80, 3, 0.03);
    CHECK(std::abs(models::three_level_cooling_power(
              FridgeSpec::from_hot(Design::ThreeLevel, 50.0, 5.0), beq)) <
          1e-12 * power(0.5 * wc_max));
}

TEST_CASE("squeezed three-level power routes through the solver and stays consistent") {
    const auto spec = FridgeSpec::from_hot(Design::ThreeLevel, 50.0, 8.0);
    for (double r : {0.5, 1.5}) {
        const auto b = make_baths(170, 80, 30, 3, 0.03, r);
        const double q_model = models::three_level_cooling_power(spec, b);
        const auto l = lindblad::build_liouvillian(spec, b);
        const auto wm = models::build_working_material(spec);
        const auto rho = lindblad::steady_state(l);
        const double q_direct =
            lindblad::heat_current(l, baths::BathLabel::cold, rho, wm.h);
        CHECK(q_model == doctest::Approx(q_direct).epsilon(1e-12));
        CHECK(q_model > 0);
    }
}

TEST_CASE("two-qubit breakup agrees with matrix-element extraction") {
    rng::SplitMix64 gen(43);
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = test_support::random_fridge(gen);
        const int d = 1 + static_cast<int>(gen.uniform(0, 3));
        const auto b = make_baths(f.t_w, f.t_h, f.t_c, d, f.gamma0);
        const auto spec = FridgeSpec::from_hot(Design::TwoQubit, f.omega_h, f.omega_c);
        const auto breakup = models::two_qubit_breakup(spec, b);

        // inside the window both elementary masers pump in the cooling direction
        CHECK(breakup.q1 > 0);
        CHECK(breakup.q2 > 0);
        CHECK(breakup.q1_closed ==
              doctest::Approx(breakup.q1).epsilon(1e-8));
        CHECK(breakup.q2_closed ==
              doctest::Approx(breakup.q2).epsilon(1e-8));

        // component sums reproduce the totals from the dense solver
        const auto wm = models::build_working_material(spec);
        const auto l = lindblad::build_liouvillian(wm.h, wm.couplings, b);
        const auto rho = lindblad::steady_state(l);
        const double qc = lindblad::heat_current(l, baths::BathLabel::cold, rho, wm.h);
        const double qh = lindblad::heat_current(l, baths::BathLabel::hot, rho, wm.h);
        const double qw = lindblad::heat_current(l, baths::BathLabel::work, rho, wm.h);
        CHECK(breakup.component1[2] + breakup.component2[2] ==
              doctest::Approx(qc).epsilon(1e-9));
        CHECK(breakup.component1[1] + breakup.component2[1] ==
              doctest::Approx(qh).epsilon(1e-9));
        CHECK(breakup.component1[0] + breakup.component2[0] ==
              doctest::Approx(qw).epsilon(1e-9));

        // each component is an ideal refrigerator on its own
        for (const auto& comp : {breakup.component1, breakup.component2}) {
            CHECK(std::abs(comp[2] / comp[0]) ==
                  doctest::Approx(spec.omega_c / spec.omega_w).epsilon(1e-10));
            CHECK(std::abs(comp[2] / comp[1]) ==
                  doctest::Approx(spec.omega_c / spec.omega_h).epsilon(1e-10));
        }
    }
}

TEST_CASE("two designs share the same cooling window") {
    const thermo::Temperatures temps{120, 40, 10};
    const auto b = make_baths(temps.work, temps.hot, temps.cold, 2, 1e-3);
    const double omega_h = 9.0;
    const double wc_max = thermo::cooling_window_max_fixed_hot(omega_h, temps);
    for (double frac : {0.3, 0.7, 0.95}) {
        const auto tl = FridgeSpec::from_hot(Design::ThreeLevel, omega_h, frac * wc_max);
        const auto tq = FridgeSpec::from_hot(Design::TwoQubit, omega_h, frac * wc_max);
        CHECK(models::three_level_cooling_power(tl, b) > 0);
        CHECK(models::two_qubit_cooling_power_closed(tq, b) > 0);
    }
    for (double frac : {1.05, 1.3}) {
        const auto tl = FridgeSpec::from_hot(Design::ThreeLevel, omega_h, frac * wc_max);
        const auto tq = FridgeSpec::from_hot(Design::TwoQubit, omega_h, frac * wc_max);
        CHECK(models::three_level_cooling_power(tl, b) < 0);
        CHECK(models::two_qubit_cooling_power_closed(tq, b) < 0);
    }
}

TEST_CASE("factorized power stays positive across the window") {
    rng::SplitMix64 gen(47);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = test_support::random_fridge(gen);
        const int d = 1 + static_cast<int>(gen.uniform(0, 3));
        const auto b = make_baths(f.t_w, f.t_h, f.t_c, d, f.gamma0);
        const double omega_w = f.omega_h - f.omega_c;  // fixed-work parameterization
        const double wc_max = thermo::cooling_window_max_fixed_work(
            omega_w, {f.t_w, f.t_h, f.t_c});
        for (int k = 1; k < 99; ++k) {
            const double x = 0.01 * k;
            const auto spec = FridgeSpec::make(Design::ThreeLevel, x * wc_max, omega_w);
            const double p = models::three_level_cooling_power(spec, b) /
                             (std::pow(x, d) * (1.0 - x));
            CHECK(p > 0.0);
        }
    }
}

TEST_CASE("three-qubit currents approach the ideal ratio law as g -> 0") {
    const thermo::Temperatures temps{170, 80, 30};
    const double omega_h = 50.0;
    const double wc_max = thermo::cooling_window_max_fixed_hot(omega_h, temps);
    const double omega_c = 0.5 * wc_max;
    const auto b = make_baths(temps.work, temps.hot, temps.cold, 3, 0.03);

    auto ratio_deviation = [&](double g) {
        const auto wm = models::build_working_material(
            FridgeSpec::from_hot(Design::ThreeQubit, omega_h, omega_c, g));
        const auto kin = lindblad::steady_kinetics(wm.h, wm.couplings, b);
        const double ideal = omega_c / (omega_h - omega_c);
        return std::abs(std::abs(kin.currents[2] / kin.currents[0]) - ideal) / ideal;
    };
    CHECK(ratio_deviation(1e-2 * omega_h) < 5e-2);
    CHECK(ratio_deviation(1e-3 * omega_h) < 5e-4);
    CHECK(ratio_deviation(1e-4 * omega_h) < 5e-6);
    CHECK(ratio_deviation(0.2 * omega_h) > 0.1);  // strongly non-ideal at large g
}
