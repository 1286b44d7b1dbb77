#include <doctest.h>

#include <cmath>
#include <random>

#include "zeno/errors.hpp"
#include "zeno/qstate.hpp"

using namespace zeno;

namespace {

DensityMatrix4 random_hermitian(std::mt19937& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  DensityMatrix4 m;
  for (int i = 0; i < 4; ++i) {
    m(i, i) = uni(rng);
    for (int j = i + 1; j < 4; ++j) {
      const cplx v(uni(rng), uni(rng));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("eigensystem reproduces the matrix action") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const DensityMatrix4 m = random_hermitian(rng);
    const EigenSystem4 es = eigensystem_hermitian(m);
    double trace = 0;
    for (int k = 0; k < 4; ++k) {
      trace += es.values[k];
      // residual |M v - lambda v| per eigenpair
      for (int i = 0; i < 4; ++i) {
        cplx mv = 0;
        for (int j = 0; j < 4; ++j) mv += m(i, j) * es.vectors[4 * j + k];
        CHECK(std::abs(mv - es.values[k] * es.vectors[4 * i + k]) < 1e-10);
      }
    }
    CHECK(trace == doctest::Approx(m.trace()).epsilon(1e-12));
    CHECK(es.values[0] >= es.values[1]);
    CHECK(es.values[1] >= es.values[2]);
    CHECK(es.values[2] >= es.values[3]);
  }
}

TEST_CASE("X-form fast path agrees with the dense solver") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    XState x;
    double d[4], sum = 0;
    for (double& v : d) sum += (v = uni(rng) + 1e-6);
    x.d1 = d[0] / sum;
    x.d2 = d[1] / sum;
    x.d3 = d[2] / sum;
    x.d4 = d[3] / sum;
    x.outer = (2 * uni(rng) - 1) * std::sqrt(x.d1 * x.d4);
    x.inner = (2 * uni(rng) - 1) * std::sqrt(x.d2 * x.d3);
    const DensityMatrix4 m = x.to_matrix();
    const auto fast = eigenvalues_hermitian(m);
    const auto dense = eigensystem_hermitian(m);
    for (int k = 0; k < 4; ++k)
      CHECK(fast[k] == doctest::Approx(dense.values[k]).epsilon(1e-12));
  }
}

TEST_CASE("entropy of the maximally mixed and pure states") {
  const DensityMatrix4 mixed = DensityMatrix4::diagonal(0.25, 0.25, 0.25, 0.25);
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(2.0).epsilon(1e-13));
  const DensityMatrix4 pure = DensityMatrix4::diagonal(1.0, 0.0, 0.0, 0.0);
  CHECK(von_neumann_entropy(pure) == doctest::Approx(0.0).epsilon(1e-13));
  const Mat2 half = Mat2::diagonal(0.5, 0.5);
  CHECK(von_neumann_entropy(half) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("entropy rejects spectra outside the unit interval") {
  const DensityMatrix4 bad = DensityMatrix4::diagonal(0.6, 0.6, -0.1, -0.1);
  CHECK_THROWS_AS((void)von_neumann_entropy(bad), IndeterminateEntropy);
  const DensityMatrix4 over = DensityMatrix4::diagonal(1.5, 0.0, 0.0, 0.0);
  CHECK_THROWS_AS((void)von_neumann_entropy(over), IndeterminateEntropy);
}

TEST_CASE("binary entropy endpoints and symmetry") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.2) ==
        doctest::Approx(0.7219280948873623).epsilon(1e-14));
  CHECK(binary_entropy(0.2) == doctest::Approx(binary_entropy(0.8)));
  CHECK_THROWS_AS((void)binary_entropy(-0.01), DomainError);
  CHECK_THROWS_AS((void)binary_entropy(1.01), DomainError);
}

TEST_CASE("partial trace of a product state recovers the factors") {
  // diag(p) x diag(q) on the computational basis
  const double p0 = 0.3, q0 = 0.85;
  DensityMatrix4 m = DensityMatrix4::diagonal(
      p0 * q0, p0 * (1 - q0), (1 - p0) * q0, (1 - p0) * (1 - q0));
  const Mat2 first = partial_trace(m, 1);
  const Mat2 second = partial_trace(m, 2);
  CHECK(first(0, 0).real() == doctest::Approx(p0).epsilon(1e-14));
  CHECK(second(0, 0).real() == doctest::Approx(q0).epsilon(1e-14));
  CHECK(std::abs(first(0, 1)) < 1e-15);
  CHECK_THROWS_AS((void)partial_trace(m, 3), DomainError);
}

TEST_CASE("partial trace keeps off-diagonal coherences") {
  // |phi><phi| with phi = a|00> + b|11>: both marginals are diagonal
  const double a = std::sqrt(0.2), b = std::sqrt(0.8);
  DensityMatrix4 m;
  m(0, 0) = a * a;
  m(3, 3) = b * b;
  m(0, 3) = a * b;
  m(3, 0) = a * b;
  const Mat2 first = partial_trace(m, 1);
  CHECK(first(0, 0).real() == doctest::Approx(a * a).epsilon(1e-14));
  CHECK(first(1, 1).real() == doctest::Approx(b * b).epsilon(1e-14));
  CHECK(std::abs(first(0, 1)) < 1e-15);
}

TEST_CASE("state validation distinguishes ideal and lossy modes") {
  const DensityMatrix4 ok = DensityMatrix4::diagonal(0.4, 0.3, 0.2, 0.1);
  CHECK(validate_state(ok, ValidationMode::ideal).ok);

  // trace below one: rejected as ideal, accepted as lossy
  const DensityMatrix4 leaky = DensityMatrix4::diagonal(0.4, 0.3, 0.2, 0.0);
  CHECK_FALSE(validate_state(leaky, ValidationMode::ideal).ok);
  CHECK(validate_state(leaky, ValidationMode::lossy).ok);

  // trace above one fails both
  const DensityMatrix4 over = DensityMatrix4::diagonal(0.5, 0.4, 0.3, 0.2);
  CHECK_FALSE(validate_state(over, ValidationMode::ideal).ok);
  CHECK_FALSE(validate_state(over, ValidationMode::lossy).ok);

  // negative eigenvalue fails both
  const DensityMatrix4 neg = DensityMatrix4::diagonal(0.6, 0.5, -0.1, 0.0);
  const StateReport rep = validate_state(neg, ValidationMode::lossy);
  CHECK_FALSE(rep.ok);
  CHECK(rep.min_eigenvalue < -1e-9);
}

TEST_CASE("validation reports hermiticity violations") {
  DensityMatrix4 m = DensityMatrix4::diagonal(0.5, 0.5, 0.0, 0.0);
  m(0, 1) = cplx(0.1, 0.0);
  m(1, 0) = cplx(0.3, 0.0);
  const StateReport rep = validate_state(m, ValidationMode::ideal);
  CHECK_FALSE(rep.ok);
  CHECK(rep.hermiticity_error > 1e-12);
}
