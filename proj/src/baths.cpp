#include "qfridge/baths.hpp"

#include <cmath>

namespace qfridge::baths {

const char* name(BathLabel l) {
    switch (l) {
        case BathLabel::work: return "work";
        case BathLabel::hot: return "hot";
        case BathLabel::cold: return "cold";
    }
    return "?";
}

Bath::Bath(BathLabel label_, double temperature_, int dimensionality_, double coupling_,
           double squeezing_)
    : label(label_), temperature(temperature_), dimensionality(dimensionality_),
      coupling(coupling_), squeezing(squeezing_) {
    if (temperature <= 0) throw DomainError("Bath: temperature must be positive");
    if (coupling <= 0) throw DomainError("Bath: coupling gamma_0 must be positive");
    if (dimensionality < 1 || dimensionality > 3)
        throw DomainError("Bath: dimensionality must be 1, 2 or 3");
    if (squeezing < 0) throw DomainError("Bath: squeezing must be nonnegative");
    if (squeezing > 0 && label != BathLabel::work)
        throw DomainError("Bath: squeezing permitted only for the work bath");
}

void require_weak_coupling(const Bath& bath) {
    if (bath.coupling > 1e-2 * bath.temperature)
        throw DomainError("Bath: weak-coupling condition gamma_0 <= 1e-2 T violated");
}

double planck_occupation(double omega, double temperature) {
    if (omega <= 0) throw DomainError("planck_occupation: omega must be positive");
    if (temperature <= 0) throw DomainError("planck_occupation: temperature must be positive");
    return 1.0 / std::expm1(omega / temperature);
}

double squeezed_occupation(double omega, double temperature, double r) {
    const double n = planck_occupation(omega, temperature);
    return n * std::cosh(2.0 * r) + std::sinh(r) * std::sinh(r);
}

namespace {

double power_d(double x, int d) {
    double p = x;
    for (int k = 1; k < d; ++k) p *= x;
    return p;
}

} // namespace

double decay_rate(double omega, const Bath& bath) {
    if (omega == 0.0) throw DomainError("decay_rate: omega must be nonzero");
    const double aw = std::abs(omega);
    const double n = bath.squeezing > 0
                         ? squeezed_occupation(aw, bath.temperature, bath.squeezing)
                         : planck_occupation(aw, bath.temperature);
    const double base = bath.coupling * power_d(aw, bath.dimensionality);
    return omega > 0 ? base * (1.0 + n) : base * n;
}

double squeeze_cross_rate(double omega, const Bath& bath) {
    if (bath.label != BathLabel::work)
        throw DomainError("squeeze_cross_rate: defined only for the work bath");
    if (omega == 0.0) throw DomainError("squeeze_cross_rate: omega must be nonzero");
    if (bath.squeezing == 0.0) return 0.0;
    const double aw = std::abs(omega);
    const double m = std::sinh(2.0 * bath.squeezing) *
                     (2.0 * planck_occupation(aw, bath.temperature) + 1.0) / 2.0;
    return 0.5 * bath.coupling * power_d(aw, bath.dimensionality) * m;
}

double effective_temperature(double omega_w, double temperature, double r) {
    if (omega_w <= 0) throw DomainError("effective_temperature: omega_w must be positive");
    if (r == 0.0) return temperature;
    const double t2 = std::tanh(r) * std::tanh(r);
    const double x = omega_w / temperature;
    double log_ratio;
    if (x > 300.0) {
        // e^x overflows; ratio tends to 1/tanh^2 r
        log_ratio = -2.0 * std::log(std::tanh(r));
    } else {
        const double ex = std::exp(x);
        log_ratio = std::log(t2 + ex) - std::log1p(t2 * ex);
    }
    return omega_w / log_ratio;
}

double effective_temperature(double omega_w, const Bath& bath) {
    if (bath.label != BathLabel::work)
        throw DomainError("effective_temperature: defined only for the work bath");
    return effective_temperature(omega_w, bath.temperature, bath.squeezing);
}

} // namespace qfridge::baths
