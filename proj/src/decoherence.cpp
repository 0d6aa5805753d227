#include "cqed/decoherence.hpp"

#include <array>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "cqed/errors.hpp"
#include "cqed/spectrum.hpp"

namespace cqed {

namespace {

void require_photons(double n) {
    if (!(n >= 0) || !std::isfinite(n)) throw ValidationError("photon number must be finite and >= 0");
}

double sq(double x) { return x * x; }

}  // namespace

RelaxationCoefficients relaxation_coefficients(double n, double lambda1, double lambda2, double gamma1) {
    require_photons(n);
    const double rn = std::sqrt(n);
    const double s1 = std::sqrt(1.0 + 4.0 * lambda1 * lambda1 * n);
    const double s2 = std::sqrt(1.0 + 4.0 * lambda2 * lambda2 * n);
    const double at1 = std::atan(2.0 * lambda1 * rn), at2 = std::atan(2.0 * lambda2 * rn);
    // The last three terms carry arctan(2 lambda_2 n), without the square root.
    const double at2n = std::atan(2.0 * lambda2 * n);
    RelaxationCoefficients c;
    c.gamma1 = gamma1;
    c.sx1 = gamma1 / 2 * sq(at1) / s1;
    c.sx2 = gamma1 / 8 * sq(sq(at2)) / s2;
    c.sz1 = gamma1 * lambda1 * rn / s1;
    c.sz2 = gamma1 / 4 * rn * lambda2 * sq(at2n) / s1;
    c.s1s2 = gamma1 / 2 * at2n;
    c.s2 = -gamma1 / 8 * sq(at2n);
    return c;
}

DephasingCoefficients dephasing_coefficients(double n, double lambda1, double lambda2, double gamma_phi) {
    require_photons(n);
    const double rn = std::sqrt(n);
    const double q1 = 1.0 + 4.0 * lambda1 * lambda1 * n, q2 = 1.0 + 4.0 * lambda2 * lambda2 * n;
    DephasingCoefficients c;
    c.gamma_phi = gamma_phi;
    c.z1 = -gamma_phi * sq(std::atan(2.0 * lambda1 * rn)) / std::sqrt(q1);
    c.z2 = -gamma_phi / 2 * sq(std::atan(2.0 * lambda2 * rn)) / std::sqrt(q2);
    c.x1 = -gamma_phi * 2.0 * lambda1 * rn / q1;
    c.x2 = -gamma_phi * lambda2 * rn / std::sqrt(q2);
    return c;
}

ChannelCoefficients channel_coefficients(double n, double lambda1, double lambda2, double gamma1, double gamma_phi) {
    return {relaxation_coefficients(n, lambda1, lambda2, gamma1), dephasing_coefficients(n, lambda1, lambda2, gamma_phi)};
}

LeakageParams leakage_params(const DeviceSpec& device, std::size_t index, double epsilon_mhz, double delta_c_mhz) {
    validate(device);
    if (index >= device.qubits.size()) throw ValidationError("qubit index out of range");
    const SpectralParams sp = detunings_and_lambdas(device, 3);
    const QubitSpectrum& q = sp.qubits[index];
    const QubitSpec& spec = device.qubits[index];
    LeakageParams p;
    p.epsilon_mhz = epsilon_mhz;
    p.delta_c_mhz = delta_c_mhz;
    p.kappa_mhz = device.cavity.kappa_mhz;
    p.chi1_mhz = q.g_ghz(0) * q.g_ghz(0) / q.delta_ghz(0) * kMHzPerGHz;
    p.chi2_mhz = q.g_ghz(1) * q.g_ghz(1) / q.delta_ghz(1) * kMHzPerGHz;
    p.tilde_omega_mhz = (q.tilde_omega_ghz(0) + q.tilde_omega_ghz(1) / 2) * kMHzPerGHz;
    p.gamma2_mhz = spec.gamma1_mhz + spec.gamma_phi_mhz / 2;
    return p;
}

namespace {

const cplx I{0.0, 1.0};

// Relaxation constants of the two cavity amplitudes: alpha' = -i eps - r alpha.
cplx rate1(const LeakageParams& p) {
    return p.kappa_mhz / 2 + I * (2.0 * (p.chi1_mhz - p.chi2_mhz) + p.delta_c_mhz);
}
cplx rate0(const LeakageParams& p) { return p.kappa_mhz / 2 + I * (p.delta_c_mhz - 2.0 * p.chi1_mhz); }

double phase_coupling(const LeakageParams& p) { return 4.0 * (p.chi1_mhz - p.chi2_mhz / 2); }

void check(const LeakageParams& p) {
    if (!(p.kappa_mhz > 0)) throw ValidationError("kappa must be > 0");
    for (double v : {p.epsilon_mhz, p.delta_c_mhz, p.chi1_mhz, p.chi2_mhz, p.tilde_omega_mhz, p.gamma2_mhz})
        if (!std::isfinite(v)) throw ValidationError("leakage parameters must be finite");
}

}  // namespace

cplx alpha1_steady(const LeakageParams& p) { return -I * p.epsilon_mhz / rate1(p); }
cplx alpha0_steady(const LeakageParams& p) { return -I * p.epsilon_mhz / rate0(p); }

LeakageRate leakage_dephasing_rate(const LeakageParams& p) {
    check(p);
    const double k = p.kappa_mhz, e = p.epsilon_mhz, dc = p.delta_c_mhz, c1 = p.chi1_mhz, c2 = p.chi2_mhz;
    const double base = k * k / 4 + dc * dc + 2 * dc * c2 + 4 * c1 * c1 - 4 * c1 * c2;
    const double closed = 4 * k * e * e * c2 / (base * base + k * k * c2 * c2);
    const double definitional = -phase_coupling(p) * std::imag(alpha1_steady(p) * std::conj(alpha0_steady(p)));
    return {closed * kMHzPerGHz, definitional * kMHzPerGHz};
}

DephasingReport leakage_trajectories(const std::vector<double>& t_grid, const LeakageParams& p,
                                     const LeakageInitial& init) {
    check(p);
    if (t_grid.empty() || t_grid.front() != 0.0) throw ValidationError("time grid must start at 0");
    for (std::size_t k = 1; k < t_grid.size(); ++k)
        if (!(t_grid[k] > t_grid[k - 1])) throw ValidationError("time grid must be strictly increasing");
    if (init.a10 == cplx{0.0, 0.0}) throw ValidationError("initial coherence a10 must be non-zero");

    const cplx r1 = rate1(p), r0 = rate0(p);
    const cplx s1 = alpha1_steady(p), s0 = alpha0_steady(p);
    const double coupling = phase_coupling(p);

    // State: alpha_1, alpha_0, log(a_10 e^{i tilde omega t}) as real/imag pairs.
    using State = std::array<double, 6>;
    auto rhs = [&](const State& x, State& dx, double) {
        const cplx a1{x[0], x[1]}, a0{x[2], x[3]};
        const cplx d1 = -I * p.epsilon_mhz - r1 * a1;
        const cplx d0 = -I * p.epsilon_mhz - r0 * a0;
        const cplx dl = -2.0 * p.gamma2_mhz - I * coupling * a1 * std::conj(a0);
        dx = {d1.real(), d1.imag(), d0.real(), d0.imag(), dl.real(), dl.imag()};
    };
    const cplx log_a10 = std::log(init.a10);
    State x{init.alpha1.real(), init.alpha1.imag(), init.alpha0.real(), init.alpha0.imag(), log_a10.real(),
            log_a10.imag()};

    auto closed1 = [&](double t) { return s1 + std::exp(-r1 * t) * (init.alpha1 - s1); };
    auto closed0 = [&](double t) { return s0 + std::exp(-r0 * t) * (init.alpha0 - s0); };
    auto product = [&](double t) { return closed1(t) * std::conj(closed0(t)); };

    DephasingReport out;
    out.alpha0_s = s0;
    out.alpha1_s = s1;
    out.rate = leakage_dephasing_rate(p);

    namespace odeint = boost::numeric::odeint;
    auto stepper = odeint::make_dense_output(1e-12, 1e-9, odeint::runge_kutta_dopri5<State>());
    cplx phase_integral{0.0, 0.0};
    double previous_t = 0.0;
    auto observe = [&](const State& s, double t) {
        if (t > previous_t) {
            using boost::math::quadrature::gauss_kronrod;
            const double re = gauss_kronrod<double, 31>::integrate([&](double u) { return product(u).real(); },
                                                                   previous_t, t, 15, 1e-12);
            const double im = gauss_kronrod<double, 31>::integrate([&](double u) { return product(u).imag(); },
                                                                   previous_t, t, 15, 1e-12);
            phase_integral += cplx{re, im};
            previous_t = t;
        }
        LeakageSample smp;
        smp.t_us = t;
        smp.alpha1 = {s[0], s[1]};
        smp.alpha0 = {s[2], s[3]};
        const cplx log_rot{s[4], s[5]};
        smp.a10 = std::exp(log_rot - I * p.tilde_omega_mhz * t);
        smp.alpha1_closed = closed1(t);
        smp.alpha0_closed = closed0(t);
        smp.a10_closed = init.a10 * std::exp(-(2.0 * p.gamma2_mhz + I * p.tilde_omega_mhz) * t) *
                         std::exp(-I * coupling * phase_integral);
        // ln|<alpha_1|alpha_0>| = -|alpha_1 - alpha_0|^2 / 2
        smp.log_abs_c10 = log_rot.real() + std::norm(smp.alpha1 - smp.alpha0) / 2;
        smp.abs_c10 = std::exp(smp.log_abs_c10);
        out.samples.push_back(smp);
    };
    try {
        odeint::integrate_times(stepper, rhs, x, t_grid.begin(), t_grid.end(), 1e-3 / (p.kappa_mhz + 1.0),
                                observe);
    } catch (const std::exception& e) {
        throw NumericError(std::string("leakage trajectory integration failed: ") + e.what());
    }
    return out;
}

}  // namespace cqed
