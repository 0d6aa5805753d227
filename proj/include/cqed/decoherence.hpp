#pragma once

#include <complex>
#include <vector>

#include "cqed/model.hpp"

namespace cqed {

// Coefficients of the relaxation and dephasing Lindblad operators after the
// dispersive transformation, as functions of the photon number. Each value is the
// signed prefactor of its operator; the generating rate is kept alongside.
struct RelaxationCoefficients {
    double gamma1;  // sigma_1
    double sx1;     // sigma_{x,1}
    double sx2;     // sigma_{x,2}
    double sz1;     // sigma_{z,1}
    double sz2;     // sigma_{z,2}
    double s1s2;    // sigma_1 sigma_2
    double s2;      // sigma_2
};

struct DephasingCoefficients {
    double gamma_phi;  // sigma_{z,1}
    double z1;         // sigma_{z,1}
    double z2;         // sigma_{z,2}
    double x1;         // sigma_{x,1}
    double x2;         // sigma_{x,2}
};

struct ChannelCoefficients {
    RelaxationCoefficients relaxation;
    DephasingCoefficients dephasing;
};

RelaxationCoefficients relaxation_coefficients(double n, double lambda1, double lambda2, double gamma1_mhz);
DephasingCoefficients dephasing_coefficients(double n, double lambda1, double lambda2, double gamma_phi_mhz);
ChannelCoefficients channel_coefficients(double n, double lambda1, double lambda2, double gamma1_mhz,
                                         double gamma_phi_mhz);

// Drive and qubit parameters of the photon-leakage model, all in MHz. Time is in
// microseconds so that rates in MHz are inverse times.
struct LeakageParams {
    double epsilon_mhz = 0.0;
    double delta_c_mhz = 0.0;
    double kappa_mhz = 1.0;
    double chi1_mhz = 0.0;  // g_1^2 / Delta_1
    double chi2_mhz = 0.0;  // g_2^2 / Delta_2
    double tilde_omega_mhz = 0.0;
    double gamma2_mhz = 0.0;  // gamma_1 + gamma_phi / 2
};

// chi_1, chi_2, tilde omega_1 + tilde omega_2 / 2 and gamma_2 of qubit `index`.
LeakageParams leakage_params(const DeviceSpec& device, std::size_t index, double epsilon_mhz, double delta_c_mhz);

using cplx = std::complex<double>;

// Steady coherent amplitudes of the cavity with the qubits in |0..0> and |1..1>.
cplx alpha0_steady(const LeakageParams& p);
cplx alpha1_steady(const LeakageParams& p);

struct LeakageRate {
    double closed_khz;        // 4 kappa eps^2 chi_2 / [(...)^2 + kappa^2 chi_2^2]
    double definitional_khz;  // -4 (chi_1 - chi_2/2) Im{alpha_1^s alpha_0^s*}
    // The two expressions differ in general; the definitional one is the value
    // the trajectories decay with.
    double magnitude_khz() const { return std::abs(definitional_khz); }
};
LeakageRate leakage_dephasing_rate(const LeakageParams& p);

struct LeakageInitial {
    cplx alpha1{0.0, 0.0};
    cplx alpha0{0.0, 0.0};
    cplx a10{0.5, 0.0};
};

struct LeakageSample {
    double t_us;
    cplx alpha1, alpha0, a10;                       // integrated
    cplx alpha1_closed, alpha0_closed, a10_closed;  // closed forms with the phase integral by quadrature
    double log_abs_c10;                             // ln |c_10|, integrated path
    double abs_c10;
};

struct DephasingReport {
    cplx alpha0_s, alpha1_s;
    LeakageRate rate;
    std::vector<LeakageSample> samples;
};

// Integrates the coupled amplitude equations on `t_grid_us` (increasing, starting
// at 0) with an adaptive Dormand-Prince stepper at relative tolerance 1e-9 and
// evaluates the closed-form solution on the same grid. The coherence a_10 is
// carried as log(a_10 e^{i tilde omega t}): the equation is linear in a_10, the
// fast phase drops out of |c_10|, and the logarithm does not underflow.
DephasingReport leakage_trajectories(const std::vector<double>& t_grid_us, const LeakageParams& p,
                                     const LeakageInitial& init = {});

}  // namespace cqed
