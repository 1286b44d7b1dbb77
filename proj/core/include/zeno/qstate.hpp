#pragma once

#include <array>
#include <complex>

#include "zeno/errors.hpp"

namespace zeno {

using cplx = std::complex<double>;

// 2x2 complex matrix, row-major.
struct Mat2 {
  std::array<cplx, 4> e{};

  cplx& operator()(int i, int j) { return e[2 * i + j]; }
  const cplx& operator()(int i, int j) const { return e[2 * i + j]; }

  double trace() const { return (e[0] + e[3]).real(); }

  static Mat2 diagonal(double a, double b) {
    Mat2 m;
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
  }
};

// 4x4 complex matrix, row-major. Represents two-qubit density operators in
// the product basis |00>,|01>,|10>,|11>.
struct DensityMatrix4 {
  std::array<cplx, 16> e{};

  cplx& operator()(int i, int j) { return e[4 * i + j]; }
  const cplx& operator()(int i, int j) const { return e[4 * i + j]; }

  double trace() const {
    return (e[0] + e[5] + e[10] + e[15]).real();
  }

  static DensityMatrix4 diagonal(double a, double b, double c, double d) {
    DensityMatrix4 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
  }
};

// X-form state: diagonal plus one antidiagonal coherence pair each in the
// outer (|00><11|) and inner (|01><10|) blocks, all entries real.
struct XState {
  double d1 = 0, d2 = 0, d3 = 0, d4 = 0;
  double outer = 0;  // positions (0,3) and (3,0)
  double inner = 0;  // positions (1,2) and (2,1)

  DensityMatrix4 to_matrix() const {
    DensityMatrix4 m = DensityMatrix4::diagonal(d1, d2, d3, d4);
    m(0, 3) = outer;
    m(3, 0) = outer;
    m(1, 2) = inner;
    m(2, 1) = inner;
    return m;
  }
};

enum class ValidationMode { ideal, lossy };

struct StateReport {
  bool ok = true;
  double trace_deficit = 0;     // 1 - trace
  double min_eigenvalue = 0;    // most negative eigenvalue
  double hermiticity_error = 0; // max |m(i,j) - conj(m(j,i))|
};

struct EigenSystem4 {
  std::array<double, 4> values{};        // descending
  std::array<cplx, 16> vectors{};        // column k is the k-th eigenvector
};

// Eigenvalues of a Hermitian 4x4, sorted descending. X-form inputs go
// through the two 2x2 blocks analytically; the general path is cyclic
// Jacobi. Throws NonHermitianInput beyond 1e-12 asymmetry.
std::array<double, 4> eigenvalues_hermitian(const DensityMatrix4& m);

// Full eigensystem (values descending, matching eigenvector columns).
EigenSystem4 eigensystem_hermitian(const DensityMatrix4& m);

std::array<double, 2> eigenvalues_hermitian(const Mat2& m);

// Von Neumann entropy in bits. Eigenvalues in [-1e-9, 0) clamp to 0 and
// (1, 1+1e-9] clamp to 1; anything further out signals lossy-regime
// breakdown and throws IndeterminateEntropy.
double von_neumann_entropy(const DensityMatrix4& m);
double von_neumann_entropy(const Mat2& m);

// H(x) = -x log2 x - (1-x) log2(1-x). Clamps 1e-12 of round-off at the
// endpoints; DomainError beyond that.
double binary_entropy(double x);

// Reduce to the kept subsystem (1 = first qubit, 2 = second).
Mat2 partial_trace(const DensityMatrix4& m, int keep);

// Diagnostic check against the mode's trace/positivity requirements.
// Reports, never throws.
StateReport validate_state(const DensityMatrix4& m, ValidationMode mode);

}  // namespace zeno
