#pragma once

#include "zeno/correlations.hpp"
#include "zeno/dynamics.hpp"
#include "zeno/qstate.hpp"

namespace zeno {

// Two-level system under continuous energy measurement of precision e_r,
// hbar = 1. Defaults are the unit system v0 = delta_e = 1, tau = 2 pi,
// resonant drive, target energy at level 1 (so the level shift equals the
// tunneling decay rate).
struct PrecisionModel {
  double e1 = 0;
  double e2 = 1;
  double e_target = 0;
  double e_r = 1;
  double v0 = 1;
  double omega = 1;
  double tau_meas = 6.283185307179586;  // 2 pi
};

// Measurement-induced decay rates: lambda_i = (E_i - E)^2 / (2 tau E_r^2).
struct DecayParams {
  double lambda1 = 0;
  double lambda2 = 0;
  double lambda_t = 0;      // tunneling rate, from the level splitting
  double omega_shift = 0;   // lambda2 - lambda1
};

enum class RegimeKind { coherent, incoherent, exceptional };

// propagator: probabilities from the 2x2 evolution matrix (internally
// consistent, default everywhere). printed: the published closed forms per
// regime, kept verbatim for regression, factor-2 quirks included.
enum class ProbMode { propagator, printed };

struct OccupationPair {
  double p11 = 1;  // remain in the initial (excited) level
  double p10 = 0;  // found in the other level
};

DecayParams decay_params(const PrecisionModel& m);

// Coefficient evolution matrix at time t, antihermitian part from the
// measurement back-action. Continuous across the exceptional point: only
// even functions of the internal root enter.
Mat2 propagator(const PrecisionModel& m, double t);

OccupationPair occupation_probs(const PrecisionModel& m, double t,
                                ProbMode mode = ProbMode::propagator);

// Diagnostic gap between the two modes: max over p11, p10 of |difference|.
double occupation_mode_gap(const PrecisionModel& m, double t);

// E_r^c = delta_e / sqrt(2 tau v0): measurement sharper than this drives the
// system out of coherent tunneling.
double critical_precision(double delta_e, double tau, double v0);

RegimeKind regime(const PrecisionModel& m);

// Discord of the chosen partition with lossy survival amplitudes
// u^2 = P11, v^2 = P10 (both qubits identically measured). Probability
// overflows, negative eigenvalues, and entropy-domain breakdowns come back
// as indeterminate status, never as NaN.
CorrelationReport discord_under_measurement(const PrecisionModel& m, double t,
                                            const InitialState& init,
                                            Partition part);

}  // namespace zeno
