#pragma once

#include <cmath>
#include <utility>

#include "zeno/errors.hpp"

namespace zeno {

namespace detail {

// 15-point Kronrod extension of 7-point Gauss, nodes in (0,1], QUADPACK layout.
// Odd indices are the embedded Gauss nodes.
inline constexpr double gk15_nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};

inline constexpr double gk15_weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};

inline constexpr double g7_weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelEstimate {
  double value;
  double error;
};

// One Gauss-Kronrod 7/15 application on [a,b]; error is |K15 - G7|.
template <class F>
PanelEstimate gk15_panel(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = gk15_weights[7] * fc;
  double gauss = g7_weights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * gk15_nodes[i];
    const double fsum = f(c - dx) + f(c + dx);
    kron += gk15_weights[i] * fsum;
    if (i % 2 == 1) gauss += g7_weights[i / 2] * fsum;
  }
  return {h * kron, std::abs(h * (kron - gauss))};
}

template <class F>
double integrate_recursive(F& f, double a, double b, double tol, int depth,
                           int& panels_left) {
  PanelEstimate est = gk15_panel(f, a, b);
  if (est.error <= tol || depth > 60) {
    if (est.error > tol)
      throw QuadratureFailure("quadrature: bisection depth exhausted");
    return est.value;
  }
  panels_left -= 2;
  if (panels_left <= 0)
    throw QuadratureFailure("quadrature: panel budget exhausted");
  const double mid = 0.5 * (a + b);
  return integrate_recursive(f, a, mid, 0.5 * tol, depth + 1, panels_left) +
         integrate_recursive(f, mid, b, 0.5 * tol, depth + 1, panels_left);
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a,b] to absolute tolerance.
// Throws QuadratureFailure if the panel budget runs out before convergence.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-10,
                 int max_panels = 10000) {
  if (a == b) return 0.0;
  int panels_left = max_panels;
  return detail::integrate_recursive(f, a, b, abs_tol, 0, panels_left);
}

}  // namespace zeno
