#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "zeno/errors.hpp"

namespace zeno {

// Ohmic spin-boson parameters, hbar = 1. Times are in units of 1/omega_c and
// rates in units of omega_c once omega_c = 1. beta = inf means zero
// temperature. Defaults are the normalized conventions delta^2 = 2,
// omega_c = 1 used by the closed forms.
struct SpinBosonParams {
  double delta = 1.4142135623730951;  // sqrt(2)
  double bias = 0.0;                  // level asymmetry, >= 0
  double eta = 0.05;                  // dimensionless coupling, > 0
  double omega_c = 1.0;               // cutoff, > 0
  double beta = std::numeric_limits<double>::infinity();
};

enum class CrossoverKind { unbiased, biased, none };

// Zeno/anti-Zeno crossover report. tau_analytic is present only when a
// closed form exists (unbiased case); mu only under bias.
struct CrossoverResult {
  CrossoverKind kind = CrossoverKind::none;
  std::optional<double> tau_analytic;
  std::optional<double> tau_numeric;
  std::optional<double> mu;
};

// Survival amplitudes of the undecayed and decayed branches. Ideal decay
// keeps u^2 + v^2 = 1.
struct SurvivalPair {
  double u = 1;
  double v = 0;
};

// Decay-kernel integrand at time t: the cosine phase times the
// cutoff/thermal envelope. kernel_time(0) = 1.
double kernel_time(double t, const SpinBosonParams& p);

// Effective decay rate gamma(tau) = (delta^2/2) * integral of kernel_time
// over [0, tau], adaptive quadrature at 1e-10 absolute tolerance.
double gamma_rate(double tau, const SpinBosonParams& p);

// Closed-form gamma(tau) in normalized conventions (delta^2 = 2, omega_c = 1,
// bias = 0, T = 0). Singular at eta = 1/2; throws EtaSingular there.
double gamma_closed(double tau, double eta);

// Analytic eta = 1/2 limit of gamma_closed.
double gamma_closed_critical(double tau);

// d(gamma)/d(tau) in normalized units, with optional bias in the phase.
double gamma_derivative(double tau, double eta, double bias);

// Smallest tau > 0 where the rate derivative changes sign, i.e. the root of
// bias*tau + 2*eta*arctan(tau) = pi/2 (omega_c = 1, T = 0 conventions).
CrossoverResult crossover_time(const SpinBosonParams& p);

// Measurement filter F_tau(omega - bias) = (tau/2pi) sinc^2((omega-bias)tau/2).
double filter_function(double omega, double tau, double bias);

// One-sided numeric check of the filter normalization: quadrature over
// |omega - bias| <= 400/tau plus the analytic tail of sinc^2. Should be 1
// within 1e-6.
double filter_norm_check(double tau, double bias);

// Kernel samples on a uniform grid, ready for the oscillatory cosine
// transform. truncated marks that the envelope had not decayed below 1e-8 at
// the horizon cap (routine at small eta; the transform is then
// horizon-regularized).
struct SpectrumTable {
  std::vector<double> samples;  // kernel at t = 0, h, 2h, ..., 2n*h
  double half_width = 0;        // h, half of one Simpson panel
  double t_max = 0;
  bool truncated = false;
};

SpectrumTable make_spectrum_table(const SpinBosonParams& p,
                                  bool throw_on_truncation = false);

// Reservoir coupling spectrum K(omega) = 2 Re integral_0^{t_max} e^{i omega t}
// kernel_time(t) dt, evaluated by panel-wise parabolic fits against exact
// oscillatory moments. Diagnostic grade, ~1e-6.
double coupling_spectrum(double omega, const SpectrumTable& table);
double coupling_spectrum(double omega, const SpinBosonParams& p);

// Spectral-overlap route: (delta^2/2) * integral_0^inf K(omega) *
// F_tau(omega - bias) d omega. Diagnostic companion to gamma_rate.
double gamma_overlap(double tau, const SpinBosonParams& p,
                     const SpectrumTable& table);
double gamma_overlap(double tau, const SpinBosonParams& p);

// Survival amplitudes after `repeats` measurement intervals of length tau:
// u^2 = exp(-gamma(tau) * tau * repeats), v^2 = 1 - u^2. Negative rates
// (anti-Zeno regions under bias) clamp u^2 at 1.
SurvivalPair survival(double tau, const SpinBosonParams& p, int repeats = 1);

}  // namespace zeno
