#include "zeno/spinboson.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "zeno/quadrature.hpp"

namespace zeno {

namespace {

constexpr double kPi = std::numbers::pi;

// x / sinh(x), stable at both ends.
double sinhc_ratio(double x) {
  if (x < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - 7.0 * x2 / 60.0);
  }
  if (x > 700.0) return 2.0 * x * std::exp(-x);
  return x / std::sinh(x);
}

// Cutoff/thermal envelope of the kernel (its absolute bound).
double kernel_envelope(double t, const SpinBosonParams& p) {
  const double wt = p.omega_c * t;
  double env = std::pow(1.0 + wt * wt, -p.eta);
  if (std::isfinite(p.beta))
    env *= std::pow(sinhc_ratio(kPi * t / p.beta), 2.0 * p.eta);
  return env;
}

double sinc(double x) {
  if (std::abs(x) < 1e-6) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

struct OscMoments {
  std::complex<double> m0, m1, m2;
};

// Integrals of x^k e^{i theta x} over [-1, 1], k = 0, 1, 2.
OscMoments osc_moments(double theta) {
  if (std::abs(theta) < 1e-3) {
    const double t2 = theta * theta;
    return {{2.0 * (1.0 - t2 / 6.0 + t2 * t2 / 120.0), 0.0},
            {0.0, 2.0 * theta * (1.0 / 3.0 - t2 / 30.0 + t2 * t2 / 840.0)},
            {2.0 * (1.0 / 3.0 - t2 / 10.0 + t2 * t2 / 168.0), 0.0}};
  }
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double t2 = theta * theta;
  return {{2.0 * s / theta, 0.0},
          {0.0, 2.0 * (s - theta * c) / t2},
          {2.0 * ((t2 - 2.0) * s + 2.0 * theta * c) / (t2 * theta), 0.0}};
}

}  // namespace

double kernel_time(double t, const SpinBosonParams& p) {
  if (t == 0.0) return 1.0;
  const double phase = p.bias * t + 2.0 * p.eta * std::atan(p.omega_c * t);
  return std::cos(phase) * kernel_envelope(t, p);
}

double gamma_rate(double tau, const SpinBosonParams& p) {
  if (tau <= 0.0) return 0.0;
  const double integral = integrate(
      [&p](double t) { return kernel_time(t, p); }, 0.0, tau, 1e-10, 10000);
  return 0.5 * p.delta * p.delta * integral;
}

double gamma_closed(double tau, double eta) {
  if (std::abs(eta - 0.5) <= 1e-9)
    throw EtaSingular("gamma_closed singular at eta = 1/2");
  const double at = std::atan(tau);
  return std::pow(1.0 + tau * tau, -eta) *
         (std::sin(2.0 * eta * at) - tau * std::cos(2.0 * eta * at)) /
         (2.0 * eta - 1.0);
}

double gamma_closed_critical(double tau) { return std::atan(tau); }

double gamma_derivative(double tau, double eta, double bias) {
  return std::pow(1.0 + tau * tau, -eta) *
         std::cos(bias * tau + 2.0 * eta * std::atan(tau));
}

CrossoverResult crossover_time(const SpinBosonParams& p) {
  CrossoverResult r;
  const bool biased = p.bias > 0.0;
  if (!biased) {
    if (p.eta <= 0.5) return r;  // phase never reaches pi/2
    r.kind = CrossoverKind::unbiased;
    r.tau_analytic = std::tan(kPi / (4.0 * p.eta));
  } else {
    r.kind = CrossoverKind::biased;
  }

  auto g = [&p](double tau) {
    return p.bias * tau + 2.0 * p.eta * std::atan(tau) - 0.5 * kPi;
  };
  double lo = 0.0;
  double hi = 1.0;
  while (g(hi) < 0.0) {
    hi *= 2.0;
    if (hi > 1e15) {
      r.kind = CrossoverKind::none;
      r.tau_analytic.reset();
      return r;
    }
  }
  for (int i = 0; i < 200 && hi - lo > 1e-10; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  const double tau = 0.5 * (lo + hi);
  r.tau_numeric = tau;
  if (biased) r.mu = (0.5 * kPi - 2.0 * p.eta * std::atan(tau)) / p.bias;
  return r;
}

double filter_function(double omega, double tau, double bias) {
  const double s = sinc(0.5 * (omega - bias) * tau);
  return tau / (2.0 * kPi) * s * s;
}

double filter_norm_check(double tau, double bias) {
  const double half_window = 400.0 / tau;
  const double quad =
      integrate([tau, bias](double w) { return filter_function(w, tau, bias); },
                bias - half_window, bias + half_window, 1e-9, 10000);
  // Tail of sinc^2 beyond the window, per side, in the scaled variable
  // x = (omega - bias) tau / 2 with cutoff Y: 1/(2Y) + sin(2Y)/(4Y^2) + O(Y^-3).
  const double y = 0.5 * half_window * tau;
  const double tail = (1.0 / (2.0 * y) + std::sin(2.0 * y) / (4.0 * y * y)) / kPi;
  return quad + 2.0 * tail;
}

SpectrumTable make_spectrum_table(const SpinBosonParams& p,
                                  bool throw_on_truncation) {
  constexpr double kCap = 400.0;
  constexpr double kDecayTarget = 1e-8;

  SpectrumTable tab;
  tab.t_max = kCap;
  tab.truncated = true;
  for (double t = 0.5; t <= kCap; t += 0.5) {
    if (kernel_envelope(t, p) < kDecayTarget) {
      tab.t_max = t;
      tab.truncated = false;
      break;
    }
  }
  if (tab.truncated && throw_on_truncation)
    throw TruncationWarning("kernel envelope not decayed at horizon cap");

  // The oscillatory factor e^{i omega t} is integrated exactly; the panel
  // width only needs to resolve the kernel's own phase.
  const double h_target = std::min(0.05, 0.25 / std::max(1.0, p.bias));
  const int panels = std::max(1, static_cast<int>(std::ceil(tab.t_max / (2.0 * h_target))));
  tab.half_width = tab.t_max / (2.0 * panels);
  tab.samples.resize(2 * panels + 1);
  for (int i = 0; i < static_cast<int>(tab.samples.size()); ++i)
    tab.samples[i] = kernel_time(i * tab.half_width, p);
  return tab;
}

double coupling_spectrum(double omega, const SpectrumTable& table) {
  const double h = table.half_width;
  const OscMoments mom = osc_moments(omega * h);
  const std::complex<double> step = std::polar(1.0, 2.0 * omega * h);
  std::complex<double> rot = std::polar(1.0, omega * h);
  std::complex<double> acc = 0.0;
  const int panels = (static_cast<int>(table.samples.size()) - 1) / 2;
  for (int k = 0; k < panels; ++k) {
    const double f0 = table.samples[2 * k];
    const double f1 = table.samples[2 * k + 1];
    const double f2 = table.samples[2 * k + 2];
    const double a = f1;
    const double b = 0.5 * (f2 - f0);
    const double c = 0.5 * (f0 + f2) - f1;
    acc += rot * (a * mom.m0 + b * mom.m1 + c * mom.m2);
    rot *= step;
  }
  return 2.0 * h * acc.real();
}

double coupling_spectrum(double omega, const SpinBosonParams& p) {
  return coupling_spectrum(omega, make_spectrum_table(p));
}

double gamma_overlap(double tau, const SpinBosonParams& p,
                     const SpectrumTable& table) {
  auto f = [&table, tau, &p](double w) {
    return coupling_spectrum(w, table) * filter_function(w, tau, p.bias);
  };
  // The spectrum has a horizon-sharpened peak at omega = bias; pinning it to
  // a panel edge keeps the subdivision shallow.
  const double upper = p.bias + std::max(60.0, 40.0 / tau);
  const double marks[] = {0.5 * p.bias, p.bias, p.bias + 2.0 * kPi / tau,
                          p.bias + 10.0};
  std::vector<double> edges{0.0};
  for (double m : marks)
    if (m > edges.back() + 1e-12 && m < upper) edges.push_back(m);
  edges.push_back(upper);

  double total = 0.0;
  for (size_t i = 0; i + 1 < edges.size(); ++i)
    total += integrate(f, edges[i], edges[i + 1], 1e-7, 10000);
  return 0.5 * p.delta * p.delta * total;
}

double gamma_overlap(double tau, const SpinBosonParams& p) {
  return gamma_overlap(tau, p, make_spectrum_table(p));
}

SurvivalPair survival(double tau, const SpinBosonParams& p, int repeats) {
  const double exponent = gamma_rate(tau, p) * tau * repeats;
  const double u2 = std::clamp(std::exp(-exponent), 0.0, 1.0);
  return {std::sqrt(u2), std::sqrt(1.0 - u2)};
}

}  // namespace zeno
