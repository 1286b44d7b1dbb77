#include "zeno/dynamics.hpp"

#include <cmath>

namespace zeno {

XState evolve_phi(double a, const SurvivalPair& s1, const SurvivalPair& s2) {
  const double b = std::sqrt(std::max(0.0, 1.0 - a * a));
  const double u1 = s1.u, v1 = s1.v, u2 = s2.u, v2 = s2.v;
  XState x;
  x.d1 = a * a + b * b * v1 * v1 * v2 * v2;
  x.d2 = b * b * v1 * v1 * u2 * u2;
  x.d3 = b * b * u1 * u1 * v2 * v2;
  x.d4 = b * b * u1 * u1 * u2 * u2;
  x.outer = a * b * u1 * u2;
  return x;
}

XState evolve_psi(double c, const SurvivalPair& s1, const SurvivalPair& s2) {
  const double d = std::sqrt(std::max(0.0, 1.0 - c * c));
  const double u1 = s1.u, v1 = s1.v, u2 = s2.u, v2 = s2.v;
  XState x;
  x.d1 = c * c * v2 * v2 + d * d * v1 * v1;
  x.d2 = c * c * u2 * u2;
  x.d3 = d * d * u1 * u1;
  x.d4 = 0.0;
  x.inner = c * d * u1 * u2;
  return x;
}

XState partition_state(const InitialState& init, const SurvivalPair& s1,
                       const SurvivalPair& s2, Partition part) {
  SurvivalPair t1 = s1, t2 = s2;
  if (part == Partition::reservoir_reservoir) {
    std::swap(t1.u, t1.v);
    std::swap(t2.u, t2.v);
  }
  return init.family == Family::phi ? evolve_phi(init.amp, t1, t2)
                                    : evolve_psi(init.amp, t1, t2);
}

}  // namespace zeno
