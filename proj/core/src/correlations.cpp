#include "zeno/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace zeno {

namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix4 matmul(const DensityMatrix4& a, const DensityMatrix4& b) {
  DensityMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

// Spin flip: (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y). The tensor
// square of sigma_y is the real antidiagonal (-1, 1, 1, -1).
DensityMatrix4 spin_flip(const DensityMatrix4& m) {
  static constexpr double y[4] = {-1, 1, 1, -1};
  DensityMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r(i, j) = y[i] * y[j] * std::conj(m(3 - i, 3 - j));
  return r;
}

DensityMatrix4 hermitian_sqrt(const DensityMatrix4& m) {
  const EigenSystem4 sys = eigensystem_hermitian(m);
  DensityMatrix4 r;
  for (int k = 0; k < 4; ++k) {
    const double s = std::sqrt(std::max(0.0, sys.values[k]));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        r(i, j) += s * sys.vectors[4 * i + k] * std::conj(sys.vectors[4 * j + k]);
  }
  return r;
}

// Post-measurement conditional state of the unmeasured qubit, unnormalized;
// proj is the rank-1 projector applied to `side`.
Mat2 conditional_block(const DensityMatrix4& m, const Mat2& proj, Side side) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      cplx s = 0;
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          s += proj(c, b) * (side == Side::A ? m(2 * b + i, 2 * c + j)
                                             : m(2 * i + b, 2 * j + c));
      r(i, j) = s;
    }
  return r;
}

Mat2 bloch_projector(double theta, double phi) {
  const cplx up = std::cos(0.5 * theta);
  const cplx dn = std::polar(std::sin(0.5 * theta), phi);
  Mat2 p;
  p(0, 0) = up * std::conj(up);
  p(0, 1) = up * std::conj(dn);
  p(1, 0) = dn * std::conj(up);
  p(1, 1) = dn * std::conj(dn);
  return p;
}

double entropy_terms(const double* lam, int n) {
  double s = 0;
  for (int i = 0; i < n; ++i) {
    double x = lam[i];
    if (x < -1e-9 || x > 1 + 1e-9)
      throw IndeterminateEntropy("conditional eigenvalue outside [0,1]");
    x = std::clamp(x, 0.0, 1.0);
    if (x > 0 && x < 1) s -= x * std::log2(x);
  }
  return s;
}

// Nelder-Mead on (theta, phi), deterministic start and tie-breaks.
template <class F>
MeasurementBasis simplex_refine(F& f, MeasurementBasis start, double h_theta,
                                double h_phi) {
  struct Vertex {
    double th, ph, val;
  };
  auto make = [&f](double th, double ph) { return Vertex{th, ph, f(th, ph)}; };
  std::array<Vertex, 3> v = {make(start.theta, start.phi),
                             make(start.theta + h_theta, start.phi),
                             make(start.theta, start.phi + h_phi)};
  auto order = [](const Vertex& a, const Vertex& b) {
    if (a.val != b.val) return a.val < b.val;
    if (a.th != b.th) return a.th < b.th;
    return a.ph < b.ph;
  };
  for (int iter = 0; iter < 400; ++iter) {
    std::sort(v.begin(), v.end(), order);
    const double diam =
        std::max({std::abs(v[0].th - v[1].th), std::abs(v[0].th - v[2].th),
                  std::abs(v[0].ph - v[1].ph), std::abs(v[0].ph - v[2].ph)});
    if (diam < 1e-7) break;
    const double cth = 0.5 * (v[0].th + v[1].th);
    const double cph = 0.5 * (v[0].ph + v[1].ph);
    const Vertex refl = make(2 * cth - v[2].th, 2 * cph - v[2].ph);
    if (order(refl, v[0])) {
      const Vertex expd =
          make(cth + 2 * (cth - v[2].th), cph + 2 * (cph - v[2].ph));
      v[2] = order(expd, refl) ? expd : refl;
    } else if (order(refl, v[1])) {
      v[2] = refl;
    } else {
      const Vertex contr =
          make(cth + 0.5 * (v[2].th - cth), cph + 0.5 * (v[2].ph - cph));
      if (order(contr, v[2])) {
        v[2] = contr;
      } else {
        for (int i = 1; i < 3; ++i)
          v[i] = make(v[0].th + 0.5 * (v[i].th - v[0].th),
                      v[0].ph + 0.5 * (v[i].ph - v[0].ph));
      }
    }
  }
  std::sort(v.begin(), v.end(), order);
  return {v[0].th, v[0].ph};
}

}  // namespace

double concurrence(const XState& x) {
  const double outer_part = std::abs(x.outer) - std::sqrt(std::max(0.0, x.d2 * x.d3));
  const double inner_part = std::abs(x.inner) - std::sqrt(std::max(0.0, x.d1 * x.d4));
  return 2.0 * std::max({0.0, outer_part, inner_part});
}

double concurrence_wootters(const DensityMatrix4& m) {
  // Eigenvalues of rho rho~ equal those of sqrt(rho) rho~ sqrt(rho), which is
  // Hermitian PSD and safe for the Jacobi solver.
  const DensityMatrix4 root = hermitian_sqrt(m);
  const DensityMatrix4 prod = matmul(matmul(root, spin_flip(m)), root);
  auto lam = eigenvalues_hermitian(prod);
  double c = 0;
  for (int i = 0; i < 4; ++i) {
    const double s = std::sqrt(std::max(0.0, lam[i]));
    c += i == 0 ? s : -s;
  }
  return std::max(0.0, c);
}

double mutual_information(const DensityMatrix4& m) {
  return von_neumann_entropy(partial_trace(m, 1)) +
         von_neumann_entropy(partial_trace(m, 2)) - von_neumann_entropy(m);
}

double conditional_entropy_projective(const DensityMatrix4& m,
                                      const MeasurementBasis& basis,
                                      Side side) {
  const Mat2 p0 = bloch_projector(basis.theta, basis.phi);
  Mat2 p1;
  p1(0, 0) = 1.0 - p0(0, 0);
  p1(1, 1) = 1.0 - p0(1, 1);
  p1(0, 1) = -p0(0, 1);
  p1(1, 0) = -p0(1, 0);

  double total = 0;
  const std::array<const Mat2*, 2> projectors{&p0, &p1};
  for (const Mat2* proj : projectors) {
    const Mat2 block = conditional_block(m, *proj, side);
    const double pk = block.trace();
    if (pk < -1e-9)
      throw IndeterminateEntropy("negative measurement branch probability");
    if (pk <= 1e-14) continue;
    const double mean = 0.5 * (block(0, 0).real() + block(1, 1).real()) / pk;
    const double rad = std::hypot(0.5 * (block(0, 0).real() - block(1, 1).real()),
                                  std::abs(block(0, 1))) / pk;
    const double lam[2] = {mean + rad, mean - rad};
    total += pk * entropy_terms(lam, 2);
  }
  return total;
}

double classical_correlation(const DensityMatrix4& m, Side side) {
  const Mat2 other = partial_trace(m, side == Side::A ? 2 : 1);
  const double s_other = von_neumann_entropy(other);

  auto objective = [&m, side](double th, double ph) {
    return conditional_entropy_projective(m, {th, ph}, side);
  };

  constexpr int kThetaPoints = 60;
  constexpr int kPhiPoints = 24;
  const double h_theta = 0.5 * kPi / (kThetaPoints - 1);
  const double h_phi = kPi / kPhiPoints;

  MeasurementBasis best;
  double best_val = objective(0.0, 0.0);
  for (int i = 0; i < kThetaPoints; ++i) {
    const double th = i * h_theta;
    for (int j = 0; j < kPhiPoints; ++j) {
      const double ph = j * h_phi;
      if (i == 0 && j == 0) continue;
      const double val = objective(th, ph);
      if (val < best_val) {
        best_val = val;
        best = {th, ph};
      }
    }
  }

  const MeasurementBasis refined = simplex_refine(objective, best, h_theta, h_phi);
  const double refined_val = objective(refined.theta, refined.phi);
  return s_other - std::min(best_val, refined_val);
}

CorrelationReport discord(const DensityMatrix4& m, Side side) {
  CorrelationReport r;
  r.side = side;
  try {
    r.concurrence = concurrence_wootters(m);
    r.mutual_info = mutual_information(m);
    r.classical_corr = std::max(0.0, classical_correlation(m, side));
    const double d = r.mutual_info - r.classical_corr;
    if (!std::isfinite(d)) {
      r.status = Status::indeterminate;
      r.reason = "non-finite correlation value";
      return r;
    }
    if (d < -1e-6) {
      r.status = Status::indeterminate;
      r.reason = "negative discord beyond tolerance";
      return r;
    }
    r.discord = std::max(0.0, d);
  } catch (const IndeterminateEntropy& e) {
    r.status = Status::indeterminate;
    r.reason = e.what();
  } catch (const DomainError& e) {
    r.status = Status::indeterminate;
    r.reason = e.what();
  } catch (const NonHermitianInput& e) {
    r.status = Status::indeterminate;
    r.reason = e.what();
  }
  return r;
}

CorrelationReport discord(const XState& x, Side side) {
  return discord(x.to_matrix(), side);
}

double discord_closed_phi(double b2, double u, double v) {
  const double radicand = 1.0 - 4.0 * b2 * u * u * v * v;
  if (radicand < -1e-12) throw DomainError("discord_closed_phi radicand < 0");
  const double root = std::sqrt(std::max(0.0, radicand));
  return binary_entropy(b2 * u * u) - binary_entropy(0.5 * (1.0 + root));
}

double discord_closed_psi(double c2, double u, double v) {
  const double d2 = 1.0 - c2;
  const double radicand = 1.0 - 4.0 * d2 * u * u * v * v;
  if (radicand < -1e-12) throw DomainError("discord_closed_psi radicand < 0");
  const double root = std::sqrt(std::max(0.0, radicand));
  return binary_entropy(c2 * u * u) - binary_entropy(u * u) +
         binary_entropy(0.5 * (1.0 + root));
}

double discord_difference_phi(double b2, double u, double v) {
  return binary_entropy(b2 * u * u) - binary_entropy(b2 * v * v);
}

}  // namespace zeno
