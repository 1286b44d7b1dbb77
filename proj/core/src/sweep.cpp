#include "zeno/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "zeno/correlations.hpp"
#include "zeno/quadrature.hpp"

namespace zeno {

namespace {

double grid_point(double lo, double hi, int steps, int i) {
  if (steps <= 1) return lo;
  return lo + (hi - lo) * i / (steps - 1);
}

Cell finite_or_text(double v) {
  return std::isfinite(v) ? Cell::number(v) : Cell::text(format_number(v));
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "\\u%04x", c);
      out += buf;
    } else {
      out += c;
    }
  }
  return out + "\"";
}

std::string json_token(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::number:
      return std::isfinite(c.num) ? format_number(c.num)
                                  : json_quote(format_number(c.num));
    case Cell::Kind::text:
      return json_quote(c.str);
    case Cell::Kind::empty:
    default:
      return "null";
  }
}

std::string csv_token(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::number:
      return format_number(c.num);
    case Cell::Kind::text:
      return c.str;
    case Cell::Kind::empty:
    default:
      return {};
  }
}

const char* kind_name(CrossoverKind k) {
  switch (k) {
    case CrossoverKind::unbiased:
      return "unbiased";
    case CrossoverKind::biased:
      return "biased";
    default:
      return "none";
  }
}

Cell opt_cell(const std::optional<double>& o) {
  return o ? Cell::number(*o) : Cell::none();
}

struct Check {
  std::string name;
  double deviation;
  double limit;
  bool passed;
  std::string note;
};

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void write_csv(const Table& t, std::ostream& os) {
  for (size_t i = 0; i < t.columns.size(); ++i) {
    if (i) os << ',';
    os << t.columns[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << csv_token(row[i]);
    }
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  os << "{\n  \"params\": {";
  for (size_t i = 0; i < t.params.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << json_quote(t.params[i].first) << ": "
       << json_token(t.params[i].second);
  }
  os << (t.params.empty() ? "" : "\n  ") << "},\n  \"columns\": [";
  for (size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? ", " : "") << json_quote(t.columns[i]);
  os << "],\n  \"rows\": [";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    os << (r ? ",\n    " : "\n    ") << '[';
    for (size_t i = 0; i < t.rows[r].size(); ++i)
      os << (i ? ", " : "") << json_token(t.rows[r][i]);
    os << ']';
  }
  os << (t.rows.empty() ? "" : "\n  ") << "]\n}\n";
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  threads = std::clamp(threads, 1, std::max(1, n));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::mutex mu;
  std::exception_ptr first;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (int i = w; i < n; i += threads) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first) first = std::current_exception();
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (first) std::rethrow_exception(first);
}

Table run_gamma(const GammaSpec& spec, int threads) {
  Table t;
  t.columns = {"tau", "gamma", "dgamma", "survival_u2"};
  t.params = {{"tau-min", Cell::number(spec.tau_min)},
              {"tau-max", Cell::number(spec.tau_max)},
              {"tau-steps", Cell::number(spec.tau_steps)},
              {"delta", Cell::number(spec.params.delta)},
              {"eta", Cell::number(spec.params.eta)},
              {"omega-c", Cell::number(spec.params.omega_c)},
              {"bias", Cell::number(spec.params.bias)},
              {"beta", finite_or_text(spec.params.beta)}};
  t.rows.resize(spec.tau_steps);
  parallel_for(spec.tau_steps, threads, [&](int i) {
    const double tau = grid_point(spec.tau_min, spec.tau_max, spec.tau_steps, i);
    const double g = gamma_rate(tau, spec.params);
    const double dg = gamma_derivative(tau, spec.params.eta, spec.params.bias);
    t.rows[i] = {Cell::number(tau), Cell::number(g), Cell::number(dg),
                 Cell::number(std::exp(-g * tau))};
  });
  return t;
}

Table run_crossover(const CrossoverSpec& spec) {
  SpinBosonParams p;
  p.eta = spec.eta;
  p.bias = spec.bias;
  const CrossoverResult r = crossover_time(p);
  Table t;
  t.columns = {"kind", "tau_analytic", "tau_numeric", "mu"};
  t.params = {{"eta", Cell::number(spec.eta)}, {"bias", Cell::number(spec.bias)}};
  t.rows.push_back({Cell::text(kind_name(r.kind)), opt_cell(r.tau_analytic),
                    opt_cell(r.tau_numeric), opt_cell(r.mu)});
  return t;
}

Table run_sweep(const FamilySweepSpec& spec, int threads) {
  SpinBosonParams p1;
  p1.delta = spec.delta;
  p1.bias = spec.bias1;
  p1.eta = spec.eta;
  p1.omega_c = spec.omega_c;
  p1.beta = spec.beta;
  SpinBosonParams p2 = p1;
  p2.bias = spec.bias2;
  const InitialState init{spec.family, spec.amp};

  Table t;
  t.columns = {"tau",  "u1sq", "u2sq", "C_qq",  "C_rr", "D_qq",
               "D_rr", "I_qq", "I_rr", "CC_qq", "CC_rr"};
  t.params = {{"family", Cell::text(spec.family == Family::phi ? "phi" : "psi")},
              {"amp", Cell::number(spec.amp)},
              {"tau-min", Cell::number(spec.tau_min)},
              {"tau-max", Cell::number(spec.tau_max)},
              {"tau-steps", Cell::number(spec.tau_steps)},
              {"delta", Cell::number(spec.delta)},
              {"eta", Cell::number(spec.eta)},
              {"omega-c", Cell::number(spec.omega_c)},
              {"bias1", Cell::number(spec.bias1)},
              {"bias2", Cell::number(spec.bias2)},
              {"beta", finite_or_text(spec.beta)}};
  t.rows.resize(spec.tau_steps);
  std::vector<char> determinate(spec.tau_steps, 1);

  parallel_for(spec.tau_steps, threads, [&](int i) {
    const double tau = grid_point(spec.tau_min, spec.tau_max, spec.tau_steps, i);
    const SurvivalPair s1 = survival(tau, p1);
    const SurvivalPair s2 = survival(tau, p2);
    const XState qq = partition_state(init, s1, s2, Partition::qubit_qubit);
    const XState rr = partition_state(init, s1, s2, Partition::reservoir_reservoir);
    const CorrelationReport rep_qq = discord(qq, Side::A);
    const CorrelationReport rep_rr = discord(rr, Side::A);
    auto value = [](const CorrelationReport& rep, double v) {
      return rep.status == Status::determinate ? Cell::number(v) : Cell::none();
    };
    t.rows[i] = {Cell::number(tau),
                 Cell::number(s1.u * s1.u),
                 Cell::number(s2.u * s2.u),
                 Cell::number(concurrence(qq)),
                 Cell::number(concurrence(rr)),
                 value(rep_qq, rep_qq.discord),
                 value(rep_rr, rep_rr.discord),
                 value(rep_qq, rep_qq.mutual_info),
                 value(rep_rr, rep_rr.mutual_info),
                 value(rep_qq, rep_qq.classical_corr),
                 value(rep_rr, rep_rr.classical_corr)};
    determinate[i] = rep_qq.status == Status::determinate &&
                     rep_rr.status == Status::determinate;
  });

  if (std::find(determinate.begin(), determinate.end(), 0) != determinate.end()) {
    t.columns.push_back("status");
    for (int i = 0; i < spec.tau_steps; ++i)
      t.rows[i].push_back(
          Cell::text(determinate[i] ? "determinate" : "indeterminate"));
  }
  return t;
}

Table run_nh_sweep(const NhSweepSpec& spec, int threads) {
  PrecisionModel base;
  base.e1 = 0;
  base.e2 = spec.delta_e;
  base.e_target = 0;
  base.v0 = spec.v0;
  base.omega = spec.delta_e;
  base.tau_meas = spec.tau_meas;
  const InitialState init{Family::phi, spec.amp};

  Table t;
  t.columns = {"r", "t", "P11", "P10", "D_qq", "D_rr", "status"};
  t.params = {{"amp", Cell::number(spec.amp)},
              {"r-min", Cell::number(spec.r_min)},
              {"r-max", Cell::number(spec.r_max)},
              {"r-steps", Cell::number(spec.r_steps)},
              {"t-min", Cell::number(spec.t_min)},
              {"t-max", Cell::number(spec.t_max)},
              {"t-steps", Cell::number(spec.t_steps)},
              {"v0", Cell::number(spec.v0)},
              {"delta-e", Cell::number(spec.delta_e)},
              {"tau-meas", Cell::number(spec.tau_meas)}};

  const int n = spec.r_steps * spec.t_steps;
  t.rows.resize(n);
  parallel_for(n, threads, [&](int idx) {
    const int ri = idx / spec.t_steps;
    const int ti = idx % spec.t_steps;
    PrecisionModel m = base;
    m.e_r = grid_point(spec.r_min, spec.r_max, spec.r_steps, ri);
    const double t_norm = grid_point(spec.t_min, spec.t_max, spec.t_steps, ti);
    const double time = t_norm * spec.tau_meas;

    const OccupationPair occ = occupation_probs(m, time, ProbMode::propagator);
    const CorrelationReport rep_qq =
        discord_under_measurement(m, time, init, Partition::qubit_qubit);
    const CorrelationReport rep_rr =
        discord_under_measurement(m, time, init, Partition::reservoir_reservoir);
    const bool ok = rep_qq.status == Status::determinate &&
                    rep_rr.status == Status::determinate;
    auto value = [](const CorrelationReport& rep, double v) {
      return rep.status == Status::determinate ? Cell::number(v) : Cell::none();
    };
    t.rows[idx] = {Cell::number(m.e_r),
                   Cell::number(t_norm),
                   finite_or_text(occ.p11),
                   finite_or_text(occ.p10),
                   value(rep_qq, rep_qq.discord),
                   value(rep_rr, rep_rr.discord),
                   Cell::text(ok ? "determinate" : "indeterminate")};
  });
  return t;
}

ValidateReport run_validate(double quad_tol) {
  std::vector<Check> checks;

  {
    // Closed-form rate against direct quadrature on normalized parameters.
    double worst = 0;
    bool quad_ok = true;
    std::string note;
    for (double eta : {0.05, 0.25, 0.75, 1.0}) {
      SpinBosonParams p;
      p.eta = eta;
      for (int i = 0; i < 50; ++i) {
        const double tau = 0.01 + (10.0 - 0.01) * i / 49.0;
        try {
          const double by_quad = integrate(
              [&p](double s) { return kernel_time(s, p); }, 0.0, tau, quad_tol,
              10000);
          worst = std::max(worst, std::abs(by_quad - gamma_closed(tau, eta)));
        } catch (const QuadratureFailure& e) {
          quad_ok = false;
          note = e.what();
        }
      }
    }
    checks.push_back({"rate closed form vs quadrature", worst, 1e-8,
                      quad_ok && worst <= 1e-8, note});
  }

  {
    // The eta = 1/2 singularity must be flagged, and the analytic limit must
    // agree with quadrature.
    bool flagged = false;
    double worst = 0;
    try {
      (void)gamma_closed(1.0, 0.5);
    } catch (const EtaSingular&) {
      flagged = true;
    }
    SpinBosonParams p;
    p.eta = 0.5;
    for (double tau : {0.5, 1.0, 2.0, 5.0}) {
      const double by_quad =
          integrate([&p](double s) { return kernel_time(s, p); }, 0.0, tau,
                    quad_tol, 10000);
      worst = std::max(worst, std::abs(by_quad - gamma_closed_critical(tau)));
    }
    checks.push_back({"eta=1/2 analytic limit", worst, 1e-8,
                      flagged && worst <= 1e-8,
                      flagged ? "" : "EtaSingular not raised"});
  }

  {
    // X-state concurrence shortcut against the full spin-flip computation.
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      double d[4];
      double sum = 0;
      for (double& x : d) sum += (x = uni(rng) + 1e-12);
      XState x;
      x.d1 = d[0] / sum;
      x.d2 = d[1] / sum;
      x.d3 = d[2] / sum;
      x.d4 = d[3] / sum;
      x.outer = (2 * uni(rng) - 1) * std::sqrt(x.d1 * x.d4);
      x.inner = (2 * uni(rng) - 1) * std::sqrt(x.d2 * x.d3);
      worst = std::max(worst, std::abs(concurrence(x) -
                                       concurrence_wootters(x.to_matrix())));
    }
    checks.push_back(
        {"concurrence shortcut vs Wootters", worst, 1e-10, worst <= 1e-10, ""});
  }

  {
    // Measurement optimizer against the symmetric-decay closed form.
    double worst = 0;
    for (double b2 : {0.2, 0.5, 0.8}) {
      for (double u2 : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double u = std::sqrt(u2);
        const double v = std::sqrt(1.0 - u2);
        const SurvivalPair s{u, v};
        const XState x = evolve_phi(std::sqrt(1.0 - b2), s, s);
        const CorrelationReport rep = discord(x, Side::A);
        worst = std::max(worst, std::abs(rep.discord -
                                         discord_closed_phi(b2, u, v)));
      }
    }
    checks.push_back(
        {"discord optimizer vs closed form", worst, 1e-4, worst <= 1e-4, ""});
  }

  ValidateReport rep;
  std::ostringstream os;
  int passed = 0;
  for (const Check& c : checks) {
    passed += c.passed;
    os << (c.passed ? "PASS " : "FAIL ") << c.name << "  max dev "
       << format_number(c.deviation) << " (limit " << format_number(c.limit)
       << ")";
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << '\n';
  }
  os << passed << '/' << checks.size() << " checks passed\n";
  rep.passed = passed == static_cast<int>(checks.size());
  rep.text = os.str();
  return rep;
}

}  // namespace zeno
