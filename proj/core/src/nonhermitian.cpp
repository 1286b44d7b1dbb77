#include "zeno/nonhermitian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace zeno {

namespace {

// sin(z)/z, stable near zero.
cplx csinc(cplx z) {
  if (std::abs(z) < 1e-4) {
    const cplx z2 = z * z;
    return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0);
  }
  return std::sin(z) / z;
}

double sq(double x) { return x * x; }

}  // namespace

DecayParams decay_params(const PrecisionModel& m) {
  const double denom = 2.0 * m.tau_meas * m.e_r * m.e_r;
  DecayParams d;
  d.lambda1 = sq(m.e1 - m.e_target) / denom;
  d.lambda2 = sq(m.e2 - m.e_target) / denom;
  d.lambda_t = sq(m.e2 - m.e1) / denom;
  d.omega_shift = d.lambda2 - d.lambda1;
  return d;
}

Mat2 propagator(const PrecisionModel& m, double t) {
  const DecayParams d = decay_params(m);
  const cplx q(0.5 * (m.omega - (m.e2 - m.e1)), d.omega_shift);
  const cplx p(m.v0, 0.0);
  const cplx kappa = std::sqrt(q * q + p * p);
  const cplx kt = kappa * t;
  const cplx ck = std::cos(kt);
  const cplx sin_over_kappa = t * csinc(kt);
  const cplx i(0.0, 1.0);
  Mat2 mat;
  mat(0, 0) = ck - i * q * sin_over_kappa;
  mat(0, 1) = -i * p * sin_over_kappa;
  mat(1, 0) = -i * p * sin_over_kappa;
  mat(1, 1) = ck + i * q * sin_over_kappa;
  return mat;
}

OccupationPair occupation_probs(const PrecisionModel& m, double t,
                                ProbMode mode) {
  const DecayParams d = decay_params(m);
  const double decay = std::exp(-d.lambda_t * t);

  if (mode == ProbMode::propagator) {
    const Mat2 mat = propagator(m, t);
    return {std::norm(mat(1, 1)) * decay, std::norm(mat(0, 1)) * decay};
  }

  // Published per-regime forms, reproduced verbatim (including the factor-2
  // mismatch between the Rabi frequency and the exceptional-point limit).
  const double lt = d.lambda_t;
  const double v0 = m.v0;
  switch (regime(m)) {
    case RegimeKind::exceptional:
      return {sq(1.0 - 0.5 * lt * t) * decay, sq(0.5 * lt * t) * decay};
    case RegimeKind::coherent: {
      const double k0 = 2.0 * std::sqrt(v0 * v0 - lt * lt);
      const double p11 =
          sq(std::cos(k0 * t) - lt / k0 * std::sin(k0 * t)) * decay;
      const double p10 = v0 * v0 / (k0 * k0) * sq(std::sin(k0 * t)) * decay;
      return {p11, p10};
    }
    case RegimeKind::incoherent:
    default: {
      const double k0 = 2.0 * std::sqrt(lt * lt - v0 * v0);
      const double p11 =
          sq(std::cosh(k0 * t) - lt / k0 * std::sinh(k0 * t)) * decay;
      const double p10 = v0 * v0 / (k0 * k0) * sq(std::sinh(k0 * t)) * decay;
      return {p11, p10};
    }
  }
}

double occupation_mode_gap(const PrecisionModel& m, double t) {
  const OccupationPair a = occupation_probs(m, t, ProbMode::propagator);
  const OccupationPair b = occupation_probs(m, t, ProbMode::printed);
  return std::max(std::abs(a.p11 - b.p11), std::abs(a.p10 - b.p10));
}

double critical_precision(double delta_e, double tau, double v0) {
  return delta_e / std::sqrt(2.0 * tau * v0);
}

RegimeKind regime(const PrecisionModel& m) {
  const double lt = decay_params(m).lambda_t;
  if (std::abs(m.v0 - lt) <= 1e-12 * std::max(m.v0, lt))
    return RegimeKind::exceptional;
  return m.v0 > lt ? RegimeKind::coherent : RegimeKind::incoherent;
}

CorrelationReport discord_under_measurement(const PrecisionModel& m, double t,
                                            const InitialState& init,
                                            Partition part) {
  CorrelationReport bad;
  bad.status = Status::indeterminate;

  const OccupationPair occ = occupation_probs(m, t, ProbMode::propagator);
  if (!std::isfinite(occ.p11) || !std::isfinite(occ.p10)) {
    bad.reason = "non-finite occupation probability";
    return bad;
  }
  if (occ.p11 > 1 + 1e-9 || occ.p10 > 1 + 1e-9 ||
      occ.p11 + occ.p10 > 1 + 1e-9) {
    bad.reason = "occupation probabilities exceed unit budget";
    return bad;
  }

  const SurvivalPair s{std::sqrt(std::clamp(occ.p11, 0.0, 1.0)),
                       std::sqrt(std::clamp(occ.p10, 0.0, 1.0))};
  const DensityMatrix4 rho = partition_state(init, s, s, part).to_matrix();
  if (validate_state(rho, ValidationMode::lossy).min_eigenvalue < -1e-9) {
    bad.reason = "state not positive semidefinite";
    return bad;
  }
  return discord(rho, Side::A);
}

}  // namespace zeno
