#pragma once

#include <string>

#include "zeno/qstate.hpp"

namespace zeno {

enum class Side { A, B };  // A = first qubit, B = second

enum class Status { determinate, indeterminate };

// Rank-1 projective measurement direction on the Bloch sphere.
struct MeasurementBasis {
  double theta = 0;  // polar angle in [0, pi]
  double phi = 0;    // azimuth in [0, 2pi)
};

struct CorrelationReport {
  double concurrence = 0;
  double mutual_info = 0;
  double classical_corr = 0;
  double discord = 0;
  Side side = Side::A;
  Status status = Status::determinate;
  std::string reason;  // set when indeterminate
};

// X-state concurrence: 2 max(0, |outer| - sqrt(d2 d3), |inner| - sqrt(d1 d4)).
double concurrence(const XState& x);

// Full Wootters concurrence via the spin-flipped product; oracle for the
// X-state shortcut.
double concurrence_wootters(const DensityMatrix4& m);

// I = S(rho_A) + S(rho_B) - S(rho), in bits.
double mutual_information(const DensityMatrix4& m);

// Conditional entropy of the unmeasured side after a projective measurement
// of `side` along `basis`: sum_k p_k S(rho_other|k).
double conditional_entropy_projective(const DensityMatrix4& m,
                                      const MeasurementBasis& basis, Side side);

// C = S(rho_other) - min over bases of the conditional entropy. Deterministic
// coarse grid plus simplex refinement; ties resolve to the smallest theta,
// then the smallest phi.
double classical_correlation(const DensityMatrix4& m, Side side);

// D = I - C with the full report. Never throws: domain breakdowns (lossy
// states) come back with indeterminate status.
CorrelationReport discord(const DensityMatrix4& m, Side side);
CorrelationReport discord(const XState& x, Side side);

// Symmetric-decay closed forms, regression baselines for the optimizer.
// The phi form matches either measurement side; the psi form matches
// measurement on the second qubit (the sides coincide only when the state
// is swap-symmetric, e.g. equal amplitudes).
double discord_closed_phi(double b2, double u, double v);
double discord_closed_psi(double c2, double u, double v);

// Partition gap D_qq - D_rr = H(b^2 u^2) - H(b^2 v^2) under symmetric decay.
double discord_difference_phi(double b2, double u, double v);

}  // namespace zeno
