#include "zeno/qstate.hpp"

#include <algorithm>
#include <cmath>

namespace zeno {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kEigClamp = 1e-9;
constexpr double kJacobiTol = 1e-13;

double hermiticity_error(const DensityMatrix4& m) {
  double worst = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

void require_hermitian(const DensityMatrix4& m) {
  if (hermiticity_error(m) > kHermTol)
    throw NonHermitianInput("matrix is not Hermitian within 1e-12");
}

bool is_x_form(const DensityMatrix4& m) {
  static constexpr int off[8][2] = {{0, 1}, {0, 2}, {1, 0}, {2, 0},
                                    {1, 3}, {3, 1}, {2, 3}, {3, 2}};
  for (auto& ij : off)
    if (std::abs(m(ij[0], ij[1])) > 1e-15) return false;
  return true;
}

// Eigenvalues of the Hermitian block [[a, c], [conj(c), b]].
std::array<double, 2> block_eigenvalues(double a, double b, cplx c) {
  const double mean = 0.5 * (a + b);
  const double rad = std::hypot(0.5 * (a - b), std::abs(c));
  return {mean + rad, mean - rad};
}

// Cyclic complex Jacobi on a Hermitian 4x4; diagonalizes in place and
// accumulates the rotations into vecs (columns become eigenvectors).
void jacobi_hermitian(std::array<cplx, 16>& a, std::array<cplx, 16>& vecs) {
  auto at = [&a](int i, int j) -> cplx& { return a[4 * i + j]; };
  auto vt = [&vecs](int i, int j) -> cplx& { return vecs[4 * i + j]; };

  vecs.fill(cplx(0));
  for (int i = 0; i < 4; ++i) vt(i, i) = 1;

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) off += std::norm(at(i, j));
    if (std::sqrt(off) < kJacobiTol) return;

    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const double r = std::abs(at(p, q));
        if (r < 1e-300) continue;
        const cplx phase = at(p, q) / r;
        const double alpha = at(p, p).real();
        const double delta = at(q, q).real();
        const double tau = (alpha - delta) / (2 * r);
        const double sgn = tau >= 0 ? 1.0 : -1.0;
        const double t = sgn / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Column update A <- A R with R = [[c, -s*phase],
        //                                  [s*conj(phase), c]] on (p,q).
        for (int k = 0; k < 4; ++k) {
          const cplx akp = at(k, p);
          const cplx akq = at(k, q);
          at(k, p) = c * akp + s * std::conj(phase) * akq;
          at(k, q) = -s * phase * akp + c * akq;
        }
        // Row update A <- R^H A.
        for (int k = 0; k < 4; ++k) {
          const cplx apk = at(p, k);
          const cplx aqk = at(q, k);
          at(p, k) = c * apk + s * phase * aqk;
          at(q, k) = -s * std::conj(phase) * apk + c * aqk;
        }
        // Accumulate V <- V R.
        for (int k = 0; k < 4; ++k) {
          const cplx vkp = vt(k, p);
          const cplx vkq = vt(k, q);
          vt(k, p) = c * vkp + s * std::conj(phase) * vkq;
          vt(k, q) = -s * phase * vkp + c * vkq;
        }
      }
    }
  }
}

double entropy_from_eigenvalues(const double* lam, int n) {
  double s = 0;
  for (int i = 0; i < n; ++i) {
    double x = lam[i];
    if (x < -kEigClamp || x > 1 + kEigClamp)
      throw IndeterminateEntropy("eigenvalue outside [0,1] beyond 1e-9");
    x = std::clamp(x, 0.0, 1.0);
    if (x > 0 && x < 1) s -= x * std::log2(x);
  }
  return s;
}

}  // namespace

std::array<double, 4> eigenvalues_hermitian(const DensityMatrix4& m) {
  require_hermitian(m);
  std::array<double, 4> lam;
  if (is_x_form(m)) {
    const auto o = block_eigenvalues(m(0, 0).real(), m(3, 3).real(), m(0, 3));
    const auto in = block_eigenvalues(m(1, 1).real(), m(2, 2).real(), m(1, 2));
    lam = {o[0], o[1], in[0], in[1]};
  } else {
    auto a = m.e;
    std::array<cplx, 16> vecs;
    jacobi_hermitian(a, vecs);
    for (int i = 0; i < 4; ++i) lam[i] = a[4 * i + i].real();
  }
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return lam;
}

EigenSystem4 eigensystem_hermitian(const DensityMatrix4& m) {
  require_hermitian(m);
  auto a = m.e;
  EigenSystem4 sys;
  jacobi_hermitian(a, sys.vectors);

  std::array<int, 4> order = {0, 1, 2, 3};
  std::array<double, 4> lam;
  for (int i = 0; i < 4; ++i) lam[i] = a[4 * i + i].real();
  std::sort(order.begin(), order.end(),
            [&lam](int i, int j) { return lam[i] > lam[j]; });

  EigenSystem4 out;
  for (int k = 0; k < 4; ++k) {
    out.values[k] = lam[order[k]];
    for (int i = 0; i < 4; ++i) out.vectors[4 * i + k] = sys.vectors[4 * i + order[k]];
  }
  return out;
}

std::array<double, 2> eigenvalues_hermitian(const Mat2& m) {
  double herm = std::abs(m(0, 1) - std::conj(m(1, 0)));
  herm = std::max(herm, std::abs(m(0, 0).imag()));
  herm = std::max(herm, std::abs(m(1, 1).imag()));
  if (herm > kHermTol)
    throw NonHermitianInput("matrix is not Hermitian within 1e-12");
  return block_eigenvalues(m(0, 0).real(), m(1, 1).real(), m(0, 1));
}

double von_neumann_entropy(const DensityMatrix4& m) {
  const auto lam = eigenvalues_hermitian(m);
  return entropy_from_eigenvalues(lam.data(), 4);
}

double von_neumann_entropy(const Mat2& m) {
  const auto lam = eigenvalues_hermitian(m);
  return entropy_from_eigenvalues(lam.data(), 2);
}

double binary_entropy(double x) {
  if (x < -1e-12 || x > 1 + 1e-12)
    throw DomainError("binary_entropy argument outside [0,1]");
  x = std::clamp(x, 0.0, 1.0);
  double s = 0;
  if (x > 0 && x < 1)
    s = -x * std::log2(x) - (1 - x) * std::log2(1 - x);
  return s;
}

Mat2 partial_trace(const DensityMatrix4& m, int keep) {
  require_hermitian(m);
  if (keep != 1 && keep != 2)
    throw DomainError("partial_trace: keep must be 1 or 2");
  Mat2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      cplx s = 0;
      for (int k = 0; k < 2; ++k)
        s += keep == 1 ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
      r(i, j) = s;
    }
  }
  return r;
}

StateReport validate_state(const DensityMatrix4& m, ValidationMode mode) {
  StateReport rep;
  rep.hermiticity_error = hermiticity_error(m);

  // Eigenvalues of the Hermitian part, so the report stays meaningful even
  // for slightly asymmetric inputs.
  DensityMatrix4 h;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  const auto lam = eigenvalues_hermitian(h);
  rep.min_eigenvalue = lam[3];
  rep.trace_deficit = 1.0 - m.trace();

  rep.ok = rep.hermiticity_error <= kHermTol;
  if (rep.min_eigenvalue < -1e-9) rep.ok = false;
  if (mode == ValidationMode::ideal) {
    if (std::abs(rep.trace_deficit) > 1e-9) rep.ok = false;
  } else {
    // loss may only remove weight, never add it
    if (rep.trace_deficit < -1e-9) rep.ok = false;
  }
  return rep;
}

}  // namespace zeno
