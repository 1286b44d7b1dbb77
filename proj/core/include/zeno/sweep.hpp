#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zeno/dynamics.hpp"
#include "zeno/nonhermitian.hpp"
#include "zeno/spinboson.hpp"

namespace zeno {

// One output cell. Indeterminate results serialize as an empty CSV field and
// a JSON null; text cells carry status tokens and enum names.
struct Cell {
  enum class Kind { number, text, empty };
  Kind kind = Kind::empty;
  double num = 0;
  std::string str;

  static Cell number(double v) { return {Kind::number, v, {}}; }
  static Cell text(std::string s) { return {Kind::text, 0, std::move(s)}; }
  static Cell none() { return {}; }
};

// Column-ordered result table plus the resolved parameter echo.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::pair<std::string, Cell>> params;
  std::vector<std::vector<Cell>> rows;
};

// "%.9g": up to 9 significant digits, lowercase exponent, locale-free.
std::string format_number(double v);

void write_csv(const Table& t, std::ostream& os);
void write_json(const Table& t, std::ostream& os);

// requested <= 0 selects the hardware concurrency.
int resolve_threads(int requested);

// Strided static partition; any exception from fn is rethrown on the caller
// after all workers join. Results must be written to index-addressed slots so
// output is independent of the thread count.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

struct GammaSpec {
  double tau_min = 0;
  double tau_max = 10;
  int tau_steps = 501;
  SpinBosonParams params;
};

struct CrossoverSpec {
  double eta = 0.05;
  double bias = 0.65;
};

struct FamilySweepSpec {
  Family family = Family::phi;
  double amp = 0.447213595499958;  // sqrt(1/5)
  double tau_min = 0;
  double tau_max = 5;
  int tau_steps = 251;
  double delta = 0.6;
  double eta = 0.05;
  double omega_c = 1;
  double bias1 = 0.65;
  double bias2 = 0.65;
  double beta = std::numeric_limits<double>::infinity();
};

struct NhSweepSpec {
  double amp = 0.7;
  double r_min = 0.3;
  double r_max = 0.6;
  int r_steps = 31;
  double t_min = 0;
  double t_max = 1;
  int t_steps = 41;
  double v0 = 1;
  double delta_e = 1;
  double tau_meas = 6.283185307179586;
};

// Decay-rate profile: rows tau, gamma, dgamma, survival_u2.
Table run_gamma(const GammaSpec& spec, int threads);

// Single-record crossover report: kind, tau_analytic, tau_numeric, mu.
Table run_crossover(const CrossoverSpec& spec);

// Entangled-pair sweep: per-tau concurrence, discord, mutual information and
// classical correlation for both partitions.
Table run_sweep(const FamilySweepSpec& spec, int threads);

// Detector-precision sweep: (r, t) grid of occupation probabilities and
// discords, r outer ascending, t inner ascending; t is in units of tau_meas.
Table run_nh_sweep(const NhSweepSpec& spec, int threads);

struct ValidateReport {
  bool passed = true;
  std::string text;
};

// Built-in oracle suite. quad_tol is the quadrature tolerance used by the
// rate comparison (loosening it past ~1e-8 makes the suite fail, which is
// itself exercised as a negative test).
ValidateReport run_validate(double quad_tol = 1e-10);

}  // namespace zeno
