#include "qfridge/models.hpp"

#include <cmath>
#include <utility>

#include "qfridge/lindblad.hpp"

namespace qfridge::models {

const char* name(Design d) {
    switch (d) {
        case Design::ThreeLevel: return "three_level";
        case Design::TwoQubit: return "two_qubit";
        case Design::ThreeQubit: return "three_qubit";
    }
    return "?";
}

Design design_from_string(const std::string& s) {
    if (s == "three_level") return Design::ThreeLevel;
    if (s == "two_qubit") return Design::TwoQubit;
    if (s == "three_qubit") return Design::ThreeQubit;
    throw InvalidSpec("unknown design: " + s);
}

FridgeSpec FridgeSpec::make(Design design, double omega_c, double omega_w, double g) {
    FridgeSpec spec{design, omega_c, omega_w, omega_c + omega_w, g};
    spec.validate();
    return spec;
}

FridgeSpec FridgeSpec::from_hot(Design design, double omega_h, double omega_c, double g) {
    if (omega_h <= omega_c)
        throw NonPositiveFrequency("FridgeSpec: omega_h must exceed omega_c");
    return make(design, omega_c, omega_h - omega_c, g);
}

void FridgeSpec::validate() const {
    if (omega_c <= 0 || omega_w <= 0 || omega_h <= 0)
        throw NonPositiveFrequency("FridgeSpec: frequencies must be positive");
    if (std::abs(omega_h - omega_c - omega_w) > 1e-12 * omega_h)
        throw ResonanceViolation("FridgeSpec: omega_h = omega_c + omega_w violated");
    if (g < 0) throw InvalidSpec("FridgeSpec: g must be nonnegative");
    if (g > 0 && design != Design::ThreeQubit)
        throw InvalidSpec("FridgeSpec: interaction strength g applies to ThreeQubit only");
}

namespace {

using numerics::Complex;

ComplexMatrix sigma_x2() {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix number2() {
    ComplexMatrix m(2, 2);
    m(1, 1) = 1.0;
    return m;
}

ComplexMatrix bond(std::size_t n, std::size_t i, std::size_t j) {
    ComplexMatrix m(n, n);
    m(i, j) = 1.0;
    m(j, i) = 1.0;
    return m;
}

} // namespace

WorkingMaterial build_working_material(const FridgeSpec& spec) {
    spec.validate();
    WorkingMaterial wm;
    const std::size_t iw = baths::index(BathLabel::work);
    const std::size_t ih = baths::index(BathLabel::hot);
    const std::size_t ic = baths::index(BathLabel::cold);

    switch (spec.design) {
        case Design::ThreeLevel: {
            wm.h = ComplexMatrix(3, 3);
            wm.h(1, 1) = spec.omega_c;
            wm.h(2, 2) = spec.omega_h;
            wm.couplings[ic] = bond(3, 0, 1);
            wm.couplings[iw] = bond(3, 1, 2);
            wm.couplings[ih] = bond(3, 0, 2);
            break;
        }
        case Design::TwoQubit: {
            const ComplexMatrix id2 = ComplexMatrix::identity(2);
            wm.h = Complex(spec.omega_h) * numerics::kronecker(number2(), id2) +
                   Complex(spec.omega_c) * numerics::kronecker(id2, number2());
            wm.couplings[ic] = numerics::kronecker(id2, sigma_x2());
            wm.couplings[ih] = numerics::kronecker(sigma_x2(), id2);
            wm.couplings[iw] = bond(4, 1, 2);  // |0_h 1_c><1_h 0_c| + h.c.
            break;
        }
        case Design::ThreeQubit: {
            const ComplexMatrix id2 = ComplexMatrix::identity(2);
            const ComplexMatrix id4 = ComplexMatrix::identity(4);
            wm.h = Complex(spec.omega_w) * numerics::kronecker(number2(), id4) +
                   Complex(spec.omega_h) *
                       numerics::kronecker(id2, numerics::kronecker(number2(), id2)) +
                   Complex(spec.omega_c) * numerics::kronecker(id4, number2());
            // H_I = g (|101><010| + h.c.) in the w,h,c ordering
            wm.h(5, 2) += spec.g;
            wm.h(2, 5) += spec.g;
            wm.couplings[iw] = numerics::kronecker(sigma_x2(), id4);
            wm.couplings[ih] = numerics::kronecker(id2, numerics::kronecker(sigma_x2(), id2));
            wm.couplings[ic] = numerics::kronecker(id4, sigma_x2());
            break;
        }
    }
    return wm;
}

namespace {

struct Rates {
    double c_dn, c_up, w_dn, w_up, h_dn, h_up;
};

Rates transition_rates(const FridgeSpec& spec, const BathTriple& b) {
    const Bath& bw = b[baths::index(BathLabel::work)];
    const Bath& bh = b[baths::index(BathLabel::hot)];
    const Bath& bc = b[baths::index(BathLabel::cold)];
    return {baths::decay_rate(spec.omega_c, bc), baths::decay_rate(-spec.omega_c, bc),
            baths::decay_rate(spec.omega_w, bw), baths::decay_rate(-spec.omega_w, bw),
            baths::decay_rate(spec.omega_h, bh), baths::decay_rate(-spec.omega_h, bh)};
}

} // namespace

std::array<double, 3> three_level_steady_populations(const FridgeSpec& spec,
                                                     const BathTriple& b) {
    if (spec.design != Design::ThreeLevel)
        throw InvalidSpec("three_level_steady_populations: wrong design");
    const Rates r = transition_rates(spec, b);
    // spanning-tree solution of the three-state rate equations
    const double p1 = r.c_dn * r.w_dn + r.c_dn * r.h_dn + r.w_up * r.h_dn;
    const double p2 = r.h_up * r.w_dn + r.c_up * r.w_dn + r.c_up * r.h_dn;
    const double p3 = r.h_up * r.c_dn + r.h_up * r.w_up + r.c_up * r.w_up;
    const double delta = p1 + p2 + p3;
    return {p1 / delta, p2 / delta, p3 / delta};
}

double three_level_cooling_power_closed(const FridgeSpec& spec, const BathTriple& b) {
    if (spec.design != Design::ThreeLevel)
        throw InvalidSpec("three_level_cooling_power: wrong design");
    const Rates r = transition_rates(spec, b);
    const double num = r.h_dn * r.w_up * r.c_up - r.h_up * r.w_dn * r.c_dn;
    const double p1 = r.c_dn * r.w_dn + r.c_dn * r.h_dn + r.w_up * r.h_dn;
    const double p2 = r.h_up * r.w_dn + r.c_up * r.w_dn + r.c_up * r.h_dn;
    const double p3 = r.h_up * r.c_dn + r.h_up * r.w_up + r.c_up * r.w_up;
    return spec.omega_c * num / (p1 + p2 + p3);
}

double three_level_cooling_power(const FridgeSpec& spec, const BathTriple& b) {
    const Bath& bw = b[baths::index(BathLabel::work)];
    if (bw.squeezing == 0.0) return three_level_cooling_power_closed(spec, b);
    // squeezed case goes through the assembled generator
    const auto l = lindblad::build_liouvillian(spec, b);
    const auto wm = build_working_material(spec);
    const auto rho = lindblad::steady_state(l);
    return lindblad::heat_current(l, BathLabel::cold, rho, wm.h);
}

namespace {

struct ComponentRates {
    double c_dn, c_up, w_dn, w_up, h_dn, h_up;
    TwoQubitComponentConstants consts;
};

double component_delta(const ComponentRates& t) {
    return t.c_dn * t.w_dn + t.h_up * t.w_dn + t.c_up * t.w_dn +
           t.c_dn * t.h_dn + t.w_up * t.h_dn + t.c_up * t.h_dn +
           t.h_up * t.c_dn + t.h_up * t.w_up + t.c_up * t.w_up;
}

// Effective three-level rates of the two masers sharing the work transition.
std::pair<ComponentRates, ComponentRates> two_qubit_component_rates(const Rates& r) {
    const double alpha1 = 1.0 / (r.h_dn + r.c_dn);
    const double alpha2 = 1.0 / (r.h_up + r.c_up);
    const double z1_01 = (r.h_dn + r.c_dn) / (r.h_dn + r.c_dn + r.h_up);
    const double z1_10 = (r.h_dn + r.c_dn) / (r.h_dn + r.c_dn + r.c_up);
    const double z2_01 = (r.h_up + r.c_up) / (r.h_up + r.c_up + r.h_dn);
    const double z2_10 = (r.h_up + r.c_up) / (r.h_up + r.c_up + r.c_dn);

    ComponentRates t1;
    t1.c_dn = z1_01 * r.c_dn;
    t1.c_up = r.c_up;
    t1.h_dn = z1_10 * r.h_dn;
    t1.h_up = r.h_up;
    t1.w_dn = z1_10 * (r.w_dn + alpha1 * r.h_dn * r.c_up);
    t1.w_up = z1_01 * (r.w_up + alpha1 * r.h_up * r.c_dn);
    t1.consts = {z1_01, z1_10, alpha1, 0.0};

    ComponentRates t2;
    t2.c_dn = z2_01 * r.c_up;
    t2.c_up = r.c_dn;
    t2.h_dn = z2_10 * r.h_up;
    t2.h_up = r.h_dn;
    t2.w_dn = z2_10 * (r.w_up + alpha2 * r.h_up * r.c_dn);
    t2.w_up = z2_01 * (r.w_dn + alpha2 * r.h_dn * r.c_up);
    t2.consts = {z2_01, z2_10, alpha2, 0.0};

    t1.consts.delta = component_delta(t1);
    t2.consts.delta = component_delta(t2);
    return {t1, t2};
}

} // namespace

double two_qubit_cooling_power_closed(const FridgeSpec& spec, const BathTriple& b) {
    if (spec.design != Design::TwoQubit)
        throw InvalidSpec("two_qubit_cooling_power: wrong design");
    const Rates r = transition_rates(spec, b);
    auto [t1, t2] = two_qubit_component_rates(r);
    const double num = r.h_dn * r.w_up * r.c_up - r.h_up * r.w_dn * r.c_dn;
    const double q1 = t1.consts.z01 * t1.consts.z10 * num / t1.consts.delta;
    const double q2 = t2.consts.z01 * t2.consts.z10 * num / t2.consts.delta;
    return spec.omega_c * (q1 + q2);
}

TwoQubitBreakup two_qubit_breakup(const FridgeSpec& spec, const BathTriple& b) {
    if (spec.design != Design::TwoQubit) throw InvalidSpec("two_qubit_breakup: wrong design");
    const Bath& bw = b[baths::index(BathLabel::work)];
    if (bw.squeezing != 0.0)
        throw InvalidSpec("two_qubit_breakup: thermal baths only (r = 0)");

    const Rates r = transition_rates(spec, b);
    auto [t1, t2] = two_qubit_component_rates(r);
    const double num = r.h_dn * r.w_up * r.c_up - r.h_up * r.w_dn * r.c_dn;
    // cancellation scale of the numerator; near equilibrium both routes return
    // pure roundoff and the agreement check must not compare noise against noise
    const double num_scale = r.h_dn * r.w_up * r.c_up + r.h_up * r.w_dn * r.c_dn;

    TwoQubitBreakup out;
    out.q1_closed = t1.consts.z01 * t1.consts.z10 * num / t1.consts.delta;
    out.q2_closed = t2.consts.z01 * t2.consts.z10 * num / t2.consts.delta;
    out.component1 = {spec.omega_w * out.q1_closed, -spec.omega_h * out.q1_closed,
                      spec.omega_c * out.q1_closed};
    out.component2 = {spec.omega_w * out.q2_closed, -spec.omega_h * out.q2_closed,
                      spec.omega_c * out.q2_closed};
    out.constants1 = t1.consts;
    out.constants2 = t2.consts;

    // matrix-element extraction from the numeric steady state:
    // q1 = <01| L_c rho |01>, q2 = <11| L_c rho |11>   (indices 1 and 3)
    const auto l = lindblad::build_liouvillian(spec, b);
    const auto rho = lindblad::steady_state(l);
    const auto lc = lindblad::unvectorize(
        l.bath_blocks[baths::index(BathLabel::cold)].apply(lindblad::vectorize(rho)), 4);
    out.q1 = lc(1, 1).real();
    out.q2 = lc(3, 3).real();

    const double floor = 1e-10 * num_scale / std::min(t1.consts.delta, t2.consts.delta);
    const double scale = std::max({std::abs(out.q1), std::abs(out.q2), floor, 1e-300});
    if (std::abs(out.q1 - out.q1_closed) > 1e-8 * scale ||
        std::abs(out.q2 - out.q2_closed) > 1e-8 * scale)
        throw SolverFailure("two_qubit_breakup: closed forms disagree with extraction");
    return out;
}

} // namespace qfridge::models
