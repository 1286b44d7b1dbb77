#include <doctest.h>

#include <cmath>
#include <random>

#include "zeno/correlations.hpp"
#include "zeno/dynamics.hpp"
#include "zeno/errors.hpp"
#include "zeno/qstate.hpp"

using namespace zeno;

namespace {

SurvivalPair pair_from_u2(double u2) {
  return {std::sqrt(u2), std::sqrt(1.0 - u2)};
}

XState random_x_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  XState x;
  double d[4], sum = 0;
  for (double& v : d) sum += (v = uni(rng) + 1e-9);
  x.d1 = d[0] / sum;
  x.d2 = d[1] / sum;
  x.d3 = d[2] / sum;
  x.d4 = d[3] / sum;
  x.outer = (2 * uni(rng) - 1) * std::sqrt(x.d1 * x.d4);
  x.inner = (2 * uni(rng) - 1) * std::sqrt(x.d2 * x.d3);
  return x;
}

}  // namespace

TEST_CASE("maximally entangled state saturates every correlation measure") {
  const XState bell = evolve_phi(std::sqrt(0.5), {1, 0}, {1, 0});
  CHECK(concurrence(bell) == doctest::Approx(1.0).epsilon(1e-12));
  const CorrelationReport rep = discord(bell, Side::A);
  REQUIRE(rep.status == Status::determinate);
  CHECK(rep.mutual_info == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(rep.classical_corr == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.discord == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pure unbalanced state: discord equals the entanglement entropy") {
  const XState phi = evolve_phi(std::sqrt(0.2), {1, 0}, {1, 0});
  CHECK(concurrence(phi) == doctest::Approx(0.8).epsilon(1e-12));
  const CorrelationReport rep = discord(phi, Side::A);
  REQUIRE(rep.status == Status::determinate);
  CHECK(std::abs(rep.discord - 0.7219280948873623) < 1e-5);
  CHECK(std::abs(rep.classical_corr - 0.7219280948873623) < 1e-5);
}

TEST_CASE("X concurrence shortcut matches the spin-flip construction") {
  std::mt19937 rng(99);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const XState x = random_x_state(rng);
    worst = std::max(
        worst, std::abs(concurrence(x) - concurrence_wootters(x.to_matrix())));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("spin-flip concurrence handles non-X input") {
  // |W>-ish superposition with coherences off the antidiagonal
  DensityMatrix4 m;
  const double n = 1.0 / 3.0;
  const int idx[3] = {1, 2, 3};
  for (int i : idx)
    for (int j : idx) m(i, j) = n;
  // three-fold degenerate zero eigenvalues: sqrt amplifies solver residual
  // to ~1e-9, so the bound is looser than in the full-rank comparisons
  CHECK(concurrence_wootters(m) == doctest::Approx(2.0 / 3.0).epsilon(1e-7));
}

TEST_CASE("diagonal states carry no discord") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    double d[4], sum = 0;
    for (double& v : d) sum += (v = uni(rng) + 1e-9);
    const DensityMatrix4 m =
        DensityMatrix4::diagonal(d[0] / sum, d[1] / sum, d[2] / sum, d[3] / sum);
    const CorrelationReport rep = discord(m, Side::A);
    REQUIRE(rep.status == Status::determinate);
    CHECK(rep.discord <= 1e-6);
  }
}

TEST_CASE("product states carry no correlations at all") {
  const double p = 0.3, q = 0.8;
  const DensityMatrix4 m = DensityMatrix4::diagonal(
      p * q, p * (1 - q), (1 - p) * q, (1 - p) * (1 - q));
  const CorrelationReport rep = discord(m, Side::A);
  REQUIRE(rep.status == Status::determinate);
  CHECK(rep.mutual_info < 1e-10);
  CHECK(rep.classical_corr < 1e-8);
  CHECK(rep.discord < 1e-8);
}

TEST_CASE("symmetric decay closed form matches the optimizer") {
  const double b2 = 0.8;
  const double u = std::sqrt(0.5), v = std::sqrt(0.5);
  CHECK(discord_closed_phi(b2, u, v) ==
        doctest::Approx(0.12046096935250694).epsilon(1e-12));

  const XState x = evolve_phi(std::sqrt(1 - b2), {u, v}, {u, v});
  const CorrelationReport rep = discord(x, Side::A);
  REQUIRE(rep.status == Status::determinate);
  CHECK(std::abs(rep.discord - discord_closed_phi(b2, u, v)) < 1e-4);
}

TEST_CASE("closed form tracks the optimizer across the phi family") {
  for (double b2 : {0.2, 0.5, 0.8}) {
    for (double u2 : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const double u = std::sqrt(u2), v = std::sqrt(1 - u2);
      const XState x = evolve_phi(std::sqrt(1 - b2), {u, v}, {u, v});
      const CorrelationReport rep = discord(x, Side::A);
      REQUIRE(rep.status == Status::determinate);
      CHECK(std::abs(rep.discord - discord_closed_phi(b2, u, v)) < 1e-4);
    }
  }
}

TEST_CASE("partition difference identity for the phi family") {
  // discord(qubit pair) - discord(reservoir pair) collapses to a difference
  // of binary entropies because the conditional terms coincide.
  const InitialState init{Family::phi, std::sqrt(0.2)};
  for (double u2 : {0.25, 0.4, 0.6, 0.85}) {
    const SurvivalPair s = pair_from_u2(u2);
    const XState qq = partition_state(init, s, s, Partition::qubit_qubit);
    const XState rr =
        partition_state(init, s, s, Partition::reservoir_reservoir);
    const CorrelationReport rep_qq = discord(qq, Side::A);
    const CorrelationReport rep_rr = discord(rr, Side::A);
    REQUIRE(rep_qq.status == Status::determinate);
    REQUIRE(rep_rr.status == Status::determinate);
    const double b2 = 1 - init.amp * init.amp;
    const double predicted = discord_difference_phi(b2, s.u, s.v);
    CHECK(std::abs((rep_qq.discord - rep_rr.discord) - predicted) < 1e-4);
  }
}

TEST_CASE("zero discord when measuring the classical side") {
  // rho = 1/2 |0><0| x |0><0| + 1/2 |1><1| x |+><+| is classical on the
  // first qubit: measuring there recovers all correlations; measuring the
  // other side cannot.
  DensityMatrix4 m;
  m(0, 0) = 0.5;
  m(2, 2) = 0.25;
  m(2, 3) = 0.25;
  m(3, 2) = 0.25;
  m(3, 3) = 0.25;
  const CorrelationReport a = discord(m, Side::A);
  const CorrelationReport b = discord(m, Side::B);
  REQUIRE(a.status == Status::determinate);
  REQUIRE(b.status == Status::determinate);
  CHECK(a.discord < 1e-8);
  CHECK(b.discord > 0.1);
}

TEST_CASE("psi closed form tracks measurement on the second qubit") {
  // The unequal-amplitude psi states are not swap-symmetric, so the two
  // measurement sides disagree; the closed form is the second-side value.
  {
    const double u = std::sqrt(0.5), v = std::sqrt(0.5);
    const XState x = evolve_psi(std::sqrt(0.5), {u, v}, {u, v});
    const CorrelationReport rep = discord(x, Side::A);
    REQUIRE(rep.status == Status::determinate);
    CHECK(rep.discord == doctest::Approx(0.41215416115198866).epsilon(1e-7));
    // equal amplitudes: swap-symmetric, both sides match the closed form
    CHECK(std::abs(rep.discord - discord_closed_psi(0.5, u, v)) < 1e-6);
  }
  {
    const double u = std::sqrt(0.8), v = std::sqrt(0.2);
    const XState x = evolve_psi(std::sqrt(0.5), {u, v}, {u, v});
    const CorrelationReport rep = discord(x, Side::A);
    REQUIRE(rep.status == Status::determinate);
    CHECK(rep.discord == doctest::Approx(0.6777325711742292).epsilon(1e-7));
  }
  for (double c2 : {0.3, 0.7}) {
    const double u = std::sqrt(0.4), v = std::sqrt(0.6);
    const XState x = evolve_psi(std::sqrt(c2), {u, v}, {u, v});
    const CorrelationReport a = discord(x, Side::A);
    const CorrelationReport b = discord(x, Side::B);
    REQUIRE(a.status == Status::determinate);
    REQUIRE(b.status == Status::determinate);
    CHECK(std::abs(b.discord - discord_closed_psi(c2, u, v)) < 1e-6);
    CHECK(std::abs(a.discord - b.discord) > 0.01);
  }
  // frozen spot: c^2 = 0.7, u^2 = 0.4
  {
    const double u = std::sqrt(0.4), v = std::sqrt(0.6);
    const XState x = evolve_psi(std::sqrt(0.7), {u, v}, {u, v});
    CHECK(discord(x, Side::A).discord ==
          doctest::Approx(0.306800097).epsilon(1e-6));
    CHECK(discord(x, Side::B).discord ==
          doctest::Approx(0.279947352).epsilon(1e-6));
  }
}

TEST_CASE("discord is symmetric between sides for symmetric states") {
  const double u = std::sqrt(0.6), v = std::sqrt(0.4);
  const XState x = evolve_phi(std::sqrt(0.2), {u, v}, {u, v});
  const CorrelationReport a = discord(x, Side::A);
  const CorrelationReport b = discord(x, Side::B);
  REQUIRE(a.status == Status::determinate);
  REQUIRE(b.status == Status::determinate);
  CHECK(a.discord == doctest::Approx(b.discord).epsilon(1e-7));
}

TEST_CASE("unphysical spectra surface as indeterminate reports") {
  // trace > 1 pushes an eigenvalue past the entropy clamp
  const DensityMatrix4 over = DensityMatrix4::diagonal(0.9, 0.4, 0.0, 0.0);
  const CorrelationReport rep = discord(over, Side::A);
  CHECK(rep.status == Status::indeterminate);
  CHECK_FALSE(rep.reason.empty());
}

TEST_CASE("closed forms reject impossible amplitude combinations") {
  CHECK_THROWS_AS((void)discord_closed_phi(2.0, 1.0, 1.0), DomainError);
}
