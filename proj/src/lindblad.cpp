#include "qfridge/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qfridge/models.hpp"

namespace qfridge::lindblad {

CVector vectorize(const ComplexMatrix& rho) {
    const std::size_t n = rho.rows();
    CVector v(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) v[j * n + i] = rho(i, j);
    return v;
}

ComplexMatrix unvectorize(const CVector& v, std::size_t n) {
    ComplexMatrix rho(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) rho(i, j) = v[j * n + i];
    return rho;
}

std::vector<std::pair<double, ComplexMatrix>> eigenoperator_decomposition(
    const ComplexMatrix& h_wm, const ComplexMatrix& coupling) {
    if (!coupling.is_hermitian())
        throw NotHermitian("eigenoperator_decomposition: coupling not Hermitian");
    const auto eig = numerics::hermitian_eigensystem(h_wm);  // throws NotHermitian
    const std::size_t n = h_wm.rows();
    const ComplexMatrix& v = eig.vectors;
    const ComplexMatrix ct = v.adjoint() * coupling * v;

    const double span = std::max(eig.values.back() - eig.values.front(), 1e-300);
    const double group_tol = 1e-9 * span;
    const double amp_tol = 1e-12 * std::max(ct.max_abs(), 1e-300);

    struct Pair { double omega; std::size_t i, j; };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(ct(i, j)) > amp_tol)
                pairs.push_back({eig.values[j] - eig.values[i], i, j});
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& a, const Pair& b) { return a.omega < b.omega; });

    std::vector<std::pair<double, ComplexMatrix>> channels;
    std::size_t k = 0;
    while (k < pairs.size()) {
        std::size_t end = k + 1;
        while (end < pairs.size() && pairs[end].omega - pairs[k].omega <= group_tol) ++end;
        double omega = 0;
        for (std::size_t m = k; m < end; ++m) omega += pairs[m].omega;
        omega /= static_cast<double>(end - k);

        // A(omega) = sum |v_i> ct_ij <v_j| over grouped pairs, back in the lab basis
        ComplexMatrix a(n, n);
        for (std::size_t m = k; m < end; ++m) {
            const auto [w, i, j] = pairs[m];
            const Complex amp = ct(i, j);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    a(r, c) += v(r, i) * amp * std::conj(v(c, j));
        }
        if (a.max_abs() > 1e-12 * std::max(coupling.max_abs(), 1e-300))
            channels.emplace_back(omega, std::move(a));
        k = end;
    }
    return channels;
}

namespace {

// vec(A rho B) = (B^T (x) A) vec(rho) under column-major stacking
ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& b) {
    return numerics::kronecker(b.transpose(), a);
}

ComplexMatrix left_mult(const ComplexMatrix& a) {
    return numerics::kronecker(ComplexMatrix::identity(a.rows()), a);
}

ComplexMatrix right_mult(const ComplexMatrix& b) {
    return numerics::kronecker(b.transpose(), ComplexMatrix::identity(b.rows()));
}

void add_thermal_term(ComplexMatrix& block, const ComplexMatrix& a, double gamma) {
    const ComplexMatrix ad = a.adjoint();
    const ComplexMatrix ada = ad * a;
    block += Complex(gamma) * sandwich(a, ad);
    block -= Complex(0.5 * gamma) * left_mult(ada);
    block -= Complex(0.5 * gamma) * right_mult(ada);
}

void add_squeeze_term(ComplexMatrix& block, const ComplexMatrix& a, double lambda) {
    const ComplexMatrix ad = a.adjoint();
    block += Complex(lambda) * sandwich(a, a);
    block += Complex(lambda) * sandwich(ad, ad);
    block -= Complex(lambda) * left_mult(a * a);
    block -= Complex(lambda) * right_mult(ad * ad);
}

} // namespace

Liouvillian build_liouvillian(const ComplexMatrix& h_wm,
                              const std::array<ComplexMatrix, 3>& couplings,
                              const std::array<Bath, 3>& baths_in) {
    Liouvillian l;
    l.dim = h_wm.rows();
    const std::size_t n2 = l.dim * l.dim;
    l.total = ComplexMatrix(n2, n2);

    for (BathLabel label : baths::kAllBaths) {
        const std::size_t bi = baths::index(label);
        const Bath& bath = baths_in[bi];
        ComplexMatrix block(n2, n2);
        for (auto& [omega, a] : eigenoperator_decomposition(h_wm, couplings[bi])) {
            const double gamma = baths::decay_rate(omega, bath);
            const double lambda =
                bath.squeezing > 0 ? baths::squeeze_cross_rate(omega, bath) : 0.0;
            add_thermal_term(block, a, gamma);
            if (lambda != 0.0) add_squeeze_term(block, a, lambda);
            l.channels.push_back({label, omega, std::move(a), gamma, lambda});
        }
        l.total += block;
        l.bath_blocks[bi] = std::move(block);
    }
    return l;
}

Liouvillian build_liouvillian(const models::FridgeSpec& spec,
                              const std::array<Bath, 3>& baths_in) {
    const auto wm = models::build_working_material(spec);
    return build_liouvillian(wm.h, wm.couplings, baths_in);
}

namespace {

double steady_residual(const Liouvillian& l, const CVector& x) {
    const double scale =
        std::max(l.total.max_abs(), 1e-300) * std::max(numerics::vector_max_abs(x), 1e-300);
    return numerics::vector_max_abs(l.total.apply(x)) / scale;
}

} // namespace

ComplexMatrix steady_state(const Liouvillian& l) {
    const std::size_t n = l.dim;
    const std::size_t n2 = n * n;

    // Replace the equation for d rho_{n-1,n-1}/dt (linearly dependent on the
    // other diagonal rows by trace preservation) with tr rho = 1. The trace
    // row is scaled to the generator magnitude so the system stays uniformly
    // scaled for the degeneracy probe below.
    ComplexMatrix m = l.total;
    const double scale = std::max(l.total.max_abs(), 1e-300);
    const std::size_t trace_row = n2 - 1;
    for (std::size_t col = 0; col < n2; ++col) m(trace_row, col) = 0.0;
    for (std::size_t j = 0; j < n; ++j) m(trace_row, j * n + j) = scale;

    CVector rhs(n2, 0.0);
    rhs[trace_row] = scale;

    // A second true steady state shows up as a machine-level singular value of
    // the replaced system. Stiff but healthy generators (rates spanning many
    // decades, routine near the window edges where the cold rate ~ omega_c^d
    // collapses) sit well above this floor.
    CVector x;
    try {
        numerics::LuFactor lu(m);
        const double sigma_min = numerics::smallest_singular_value_estimate(lu);
        if (sigma_min < 1e-10 * std::max(m.max_abs(), 1e-300))
            throw DegenerateKernel("steady_state: second near-null direction detected");
        x = lu.solve(rhs);
        // iterative refinement: stiff generators (rates spanning many decades)
        // need the residual at machine level, or it leaks into the heat
        // currents of strongly suppressed cycles
        for (int pass = 0; pass < 2; ++pass) {
            CVector res = m.apply(x);
            for (std::size_t i = 0; i < n2; ++i) res[i] = rhs[i] - res[i];
            const CVector dx = lu.solve(res);
            for (std::size_t i = 0; i < n2; ++i) x[i] += dx[i];
        }
    } catch (const SingularMatrix&) {
        throw DegenerateKernel("steady_state: generator kernel not one-dimensional");
    }

    if (steady_residual(l, x) > numerics::kResidualTol)
        throw SolverFailure("steady_state: residual above tolerance");

    ComplexMatrix rho = unvectorize(x, n);
    const ComplexMatrix rho_dag = rho.adjoint();
    double asym = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            asym = std::max(asym, std::abs(rho(i, j) - rho_dag(i, j)));
    if (asym > 1e-8) throw SolverFailure("steady_state: result far from Hermitian");
    rho = Complex(0.5) * (rho + rho_dag);

    const Complex tr = rho.trace();
    if (std::abs(tr - Complex(1.0)) > 1e-8)
        throw SolverFailure("steady_state: trace normalization failed");
    rho *= Complex(1.0) / tr;

    const auto eig = numerics::hermitian_eigensystem(rho);
    if (eig.values.front() < -1e-10)
        throw SolverFailure("steady_state: negative population beyond tolerance");
    return rho;
}

double heat_current(const Liouvillian& l, BathLabel bath, const ComplexMatrix& rho,
                    const ComplexMatrix& h_wm) {
    const CVector x = vectorize(rho);
    if (steady_residual(l, x) > numerics::kResidualTol)
        throw NotSteady("heat_current: rho is not a steady state of this Liouvillian");

    const ComplexMatrix lrho = unvectorize(l.bath_blocks[baths::index(bath)].apply(x), l.dim);
    Complex q = 0;
    double mag = 0;
    for (std::size_t i = 0; i < l.dim; ++i)
        for (std::size_t k = 0; k < l.dim; ++k) {
            const Complex term = h_wm(i, k) * lrho(k, i);
            q += term;
            mag += std::abs(term);
        }
    if (std::abs(q.imag()) > 1e-10 * std::max(1.0, mag))
        throw SolverFailure("heat_current: imaginary part above tolerance");
    return q.real();
}

double entropy_production(const std::array<double, 3>& currents,
                          const std::array<double, 3>& temperatures) {
    double sigma = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (temperatures[i] <= 0) throw DomainError("entropy_production: temperatures must be positive");
        sigma -= currents[i] / temperatures[i];
    }
    return sigma;
}

double kossakowski_min_eigenvalue(const Liouvillian& l) {
    if (l.channels.empty()) return 0.0;
    double min_norm = std::numeric_limits<double>::infinity();
    std::vector<char> used(l.channels.size(), 0);
    for (std::size_t i = 0; i < l.channels.size(); ++i) {
        if (used[i]) continue;
        const JumpChannel& ci = l.channels[i];
        // find the -omega partner within the same bath
        std::size_t partner = i;
        for (std::size_t j = i + 1; j < l.channels.size(); ++j) {
            if (used[j] || l.channels[j].bath != ci.bath) continue;
            if (std::abs(l.channels[j].omega + ci.omega) <= 1e-9 * std::abs(ci.omega)) {
                partner = j;
                break;
            }
        }
        double min_eig, scale;
        if (partner == i) {
            min_eig = ci.gamma;
            scale = std::max(ci.gamma, 1e-300);
        } else {
            used[partner] = 1;
            const JumpChannel& cj = l.channels[partner];
            // K = [[G+, 2L], [2L, G-]] in the basis (A, A^dag)
            const double off = ci.lambda + cj.lambda;  // lambda is even in omega
            const double tr = ci.gamma + cj.gamma;
            const double det_disc =
                std::sqrt((ci.gamma - cj.gamma) * (ci.gamma - cj.gamma) + 4.0 * off * off);
            min_eig = 0.5 * (tr - det_disc);
            scale = std::max({ci.gamma, cj.gamma, std::abs(off), 1e-300});
        }
        min_norm = std::min(min_norm, min_eig / scale);
    }
    return min_norm;
}

namespace {

// partial-pivot Gaussian elimination for the small real kinetics system
std::vector<double> solve_real(std::vector<double> a, std::vector<double> b, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i * n + k]) > std::abs(a[piv * n + k])) piv = i;
        if (std::abs(a[piv * n + k]) < 1e-300)
            throw SingularMatrix("steady_kinetics: singular rate matrix");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            std::swap(b[k], b[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = a[i * n + k] / a[k * n + k];
            if (m == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) a[i * n + j] -= m * a[k * n + j];
            b[i] -= m * b[k];
        }
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double acc = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) acc -= a[ii * n + j] * b[j];
        b[ii] = acc / a[ii * n + ii];
    }
    return b;
}

} // namespace

KineticsResult steady_kinetics(const ComplexMatrix& h_wm,
                               const std::array<ComplexMatrix, 3>& couplings,
                               const std::array<Bath, 3>& baths_in) {
    const auto eig = numerics::hermitian_eigensystem(h_wm);
    const std::size_t n = h_wm.rows();
    const ComplexMatrix& v = eig.vectors;

    struct Transition { std::size_t bath, lo, hi; double omega, weight, down, up; };
    std::vector<Transition> trans;
    for (BathLabel label : baths::kAllBaths) {
        const std::size_t bi = baths::index(label);
        const Bath& bath = baths_in[bi];
        const ComplexMatrix ct = v.adjoint() * couplings[bi] * v;
        const double amp_tol = 1e-12 * std::max(ct.max_abs(), 1e-300);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double w = std::abs(ct(i, j));
                if (w <= amp_tol) continue;
                const double omega = eig.values[j] - eig.values[i];
                trans.push_back({bi, i, j, omega, w * w,
                                 baths::decay_rate(omega, bath),
                                 baths::decay_rate(-omega, bath)});
            }
    }

    // generator over populations: G[a][b] = rate b -> a, diagonal = -column sums
    std::vector<double> gmat(n * n, 0.0);
    for (const auto& t : trans) {
        gmat[t.lo * n + t.hi] += t.down * t.weight;
        gmat[t.hi * n + t.hi] -= t.down * t.weight;
        gmat[t.hi * n + t.lo] += t.up * t.weight;
        gmat[t.lo * n + t.lo] -= t.up * t.weight;
    }
    // normalization row replaces the last (dependent) balance equation
    for (std::size_t j = 0; j < n; ++j) gmat[(n - 1) * n + j] = 1.0;
    std::vector<double> rhs(n, 0.0);
    rhs[n - 1] = 1.0;
    std::vector<double> p = solve_real(std::move(gmat), std::move(rhs), n);

    KineticsResult out;
    out.currents = {0.0, 0.0, 0.0};
    for (const auto& t : trans)
        out.currents[t.bath] += t.omega * t.weight * (t.up * p[t.lo] - t.down * p[t.hi]);
    out.populations = std::move(p);
    return out;
}

} // namespace qfridge::lindblad
