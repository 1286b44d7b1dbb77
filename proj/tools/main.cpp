// zeno-discord: survival, crossover, and correlation sweeps for a pair of
// repeatedly measured qubits, plus the detector-precision model.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zeno/sweep.hpp"

namespace {

using zeno::Cell;
using zeno::Table;

// Maps a config key to the CLI option it mirrors. Flags given on the command
// line always win; config fills in the rest.
struct ConfigBinding {
  CLI::Option* opt = nullptr;
  std::function<void(const nlohmann::json&)> apply;
};
using ConfigMap = std::map<std::string, ConfigBinding>;

[[noreturn]] void bad_config(const std::string& key, const std::string& why) {
  throw CLI::ValidationError("--config: key \"" + key + "\": " + why);
}

void bind_double(ConfigMap& m, CLI::Option* opt, const std::string& key,
                 double& ref) {
  m[key] = {opt, [key, &ref](const nlohmann::json& j) {
              if (!j.is_number()) bad_config(key, "expected a number");
              ref = j.get<double>();
            }};
}

// Like bind_double, but also accepts the string "inf" for an unbounded value.
void bind_double_or_inf(ConfigMap& m, CLI::Option* opt, const std::string& key,
                        double& ref) {
  m[key] = {opt, [key, &ref](const nlohmann::json& j) {
              if (j.is_number()) {
                ref = j.get<double>();
              } else if (j.is_string() && j.get<std::string>() == "inf") {
                ref = std::numeric_limits<double>::infinity();
              } else {
                bad_config(key, "expected a number or \"inf\"");
              }
            }};
}

void bind_int(ConfigMap& m, CLI::Option* opt, const std::string& key, int& ref,
              bool* seen = nullptr) {
  m[key] = {opt, [key, &ref, seen](const nlohmann::json& j) {
              if (!j.is_number_integer()) bad_config(key, "expected an integer");
              ref = j.get<int>();
              if (seen) *seen = true;
            }};
}

void bind_string(ConfigMap& m, CLI::Option* opt, const std::string& key,
                 std::string& ref,
                 const std::vector<std::string>& allowed = {}) {
  m[key] = {opt, [key, &ref, allowed](const nlohmann::json& j) {
              if (!j.is_string()) bad_config(key, "expected a string");
              const std::string v = j.get<std::string>();
              if (!allowed.empty() &&
                  std::find(allowed.begin(), allowed.end(), v) == allowed.end())
                bad_config(key, "\"" + v + "\" is not a valid value");
              ref = v;
            }};
}

void merge_config(const std::string& path, const ConfigMap& map) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--config: " + std::string(e.what()));
  }
  if (!j.is_object())
    throw CLI::ValidationError("--config: expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto found = map.find(it.key());
    if (found == map.end())
      throw CLI::ValidationError("--config: unknown key \"" + it.key() + "\"");
    if (found->second.opt->count() > 0) continue;
    found->second.apply(it.value());
  }
}

// Shared output/parallelism options, one instance per subcommand.
struct IoOpts {
  std::string out;
  std::string format = "csv";
  std::string config;
  int threads = 0;
  bool threads_from_config = false;
  CLI::Option* threads_opt = nullptr;
  ConfigMap map;
};

void add_common(CLI::App* sub, IoOpts& io) {
  auto* o_out =
      sub->add_option("--out", io.out, "Write output here instead of stdout");
  auto* o_fmt = sub->add_option("--format", io.format, "Output format")
                    ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--config", io.config,
                  "JSON config file (keys mirror the long flag names; "
                  "explicit flags win)");
  io.threads_opt = sub->add_option(
      "--threads", io.threads,
      "Worker threads; 0 picks the hardware count (env ZENO_DISCORD_THREADS "
      "applies when neither flag nor config sets this)");
  bind_string(io.map, o_out, "out", io.out);
  bind_string(io.map, o_fmt, "format", io.format, {"csv", "json"});
  bind_int(io.map, io.threads_opt, "threads", io.threads,
           &io.threads_from_config);
}

void resolve_io(IoOpts& io) {
  if (!io.config.empty()) merge_config(io.config, io.map);
  if (io.threads_opt->count() == 0 && !io.threads_from_config) {
    if (const char* env = std::getenv("ZENO_DISCORD_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 0 && v < 1 << 16)
        io.threads = static_cast<int>(v);
    }
  }
  if (io.threads < 0)
    throw CLI::ValidationError("--threads: must be non-negative");
}

void emit(const IoOpts& io, const Table& t) {
  const auto write = [&](std::ostream& os) {
    io.format == "json" ? zeno::write_json(t, os) : zeno::write_csv(t, os);
  };
  if (io.out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream f(io.out, std::ios::binary);
  if (!f) throw CLI::ValidationError("--out: cannot open " + io.out);
  write(f);
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw CLI::ValidationError(msg);
}

void check_grid(double lo, double hi, int steps, const std::string& name) {
  require(steps >= 2, name + "-steps: need at least 2");
  require(lo < hi, name + "-min must be below " + name + "-max");
}

void check_bath(double delta, double eta, double omega_c, double beta) {
  require(delta > 0, "--delta: must be positive");
  require(eta > 0, "--eta: must be positive");
  require(omega_c > 0, "--omega-c: must be positive");
  require(beta > 0, "--beta: must be positive (use inf for zero temperature)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Measurement-driven decay rates and quantum correlations for qubit "
      "pairs under repeated observation"};
  app.require_subcommand(1);
  int exit_code = 0;

  // gamma: decay rate versus measurement interval.
  zeno::GammaSpec gamma;
  IoOpts io_gamma;
  {
    auto* sub = app.add_subcommand(
        "gamma", "Tabulate the measurement-induced decay rate over tau");
    auto& m = io_gamma.map;
    bind_double(m, sub->add_option("--tau-min", gamma.tau_min), "tau-min",
                gamma.tau_min);
    bind_double(m, sub->add_option("--tau-max", gamma.tau_max), "tau-max",
                gamma.tau_max);
    bind_int(m, sub->add_option("--tau-steps", gamma.tau_steps), "tau-steps",
             gamma.tau_steps);
    bind_double(m, sub->add_option("--delta", gamma.params.delta), "delta",
                gamma.params.delta);
    bind_double(m, sub->add_option("--eta", gamma.params.eta), "eta",
                gamma.params.eta);
    bind_double(m, sub->add_option("--omega-c", gamma.params.omega_c),
                "omega-c", gamma.params.omega_c);
    bind_double(m, sub->add_option("--bias", gamma.params.bias), "bias",
                gamma.params.bias);
    bind_double_or_inf(m, sub->add_option("--beta", gamma.params.beta), "beta",
                       gamma.params.beta);
    add_common(sub, io_gamma);
    sub->callback([&] {
      resolve_io(io_gamma);
      check_grid(gamma.tau_min, gamma.tau_max, gamma.tau_steps, "tau");
      require(gamma.tau_min >= 0, "--tau-min: must be non-negative");
      check_bath(gamma.params.delta, gamma.params.eta, gamma.params.omega_c,
                 gamma.params.beta);
      require(gamma.params.bias >= 0, "--bias: must be non-negative");
      emit(io_gamma, run_gamma(gamma, zeno::resolve_threads(io_gamma.threads)));
    });
  }

  // crossover: where the decay rate peaks before turning over.
  zeno::CrossoverSpec crossover;
  IoOpts io_cross;
  {
    auto* sub = app.add_subcommand(
        "crossover", "Solve for the rate-maximizing measurement interval");
    auto& m = io_cross.map;
    bind_double(m, sub->add_option("--eta", crossover.eta), "eta",
                crossover.eta);
    bind_double(m, sub->add_option("--bias", crossover.bias), "bias",
                crossover.bias);
    add_common(sub, io_cross);
    sub->callback([&] {
      resolve_io(io_cross);
      require(crossover.eta > 0, "--eta: must be positive");
      require(crossover.bias >= 0, "--bias: must be non-negative");
      emit(io_cross, run_crossover(crossover));
    });
  }

  // sweep: two-qubit correlations versus measurement interval.
  zeno::FamilySweepSpec sweep;
  std::string family = "phi";
  IoOpts io_sweep;
  {
    auto* sub = app.add_subcommand(
        "sweep",
        "Sweep concurrence, mutual information, classical correlation, and "
        "discord over the measurement interval");
    auto& m = io_sweep.map;
    auto* o_family = sub->add_option("--family", family,
                                     "Initial entangled family: phi or psi")
                         ->check(CLI::IsMember({"phi", "psi"}));
    bind_string(m, o_family, "family", family, {"phi", "psi"});
    bind_double(m, sub->add_option("--amp", sweep.amp), "amp", sweep.amp);
    bind_double(m, sub->add_option("--tau-min", sweep.tau_min), "tau-min",
                sweep.tau_min);
    bind_double(m, sub->add_option("--tau-max", sweep.tau_max), "tau-max",
                sweep.tau_max);
    bind_int(m, sub->add_option("--tau-steps", sweep.tau_steps), "tau-steps",
             sweep.tau_steps);
    bind_double(m, sub->add_option("--delta", sweep.delta), "delta",
                sweep.delta);
    bind_double(m, sub->add_option("--eta", sweep.eta), "eta", sweep.eta);
    bind_double(m, sub->add_option("--omega-c", sweep.omega_c), "omega-c",
                sweep.omega_c);
    bind_double(m, sub->add_option("--bias1", sweep.bias1), "bias1",
                sweep.bias1);
    bind_double(m, sub->add_option("--bias2", sweep.bias2), "bias2",
                sweep.bias2);
    bind_double_or_inf(m, sub->add_option("--beta", sweep.beta), "beta",
                       sweep.beta);
    add_common(sub, io_sweep);
    sub->callback([&] {
      resolve_io(io_sweep);
      sweep.family = family == "psi" ? zeno::Family::psi : zeno::Family::phi;
      require(sweep.amp >= 0 && sweep.amp <= 1,
              "--amp: must lie in [0, 1]");
      check_grid(sweep.tau_min, sweep.tau_max, sweep.tau_steps, "tau");
      require(sweep.tau_min >= 0, "--tau-min: must be non-negative");
      check_bath(sweep.delta, sweep.eta, sweep.omega_c, sweep.beta);
      require(sweep.bias1 >= 0, "--bias1: must be non-negative");
      require(sweep.bias2 >= 0, "--bias2: must be non-negative");
      emit(io_sweep, run_sweep(sweep, zeno::resolve_threads(io_sweep.threads)));
    });
  }

  // nh-sweep: correlations under the finite-precision detector model.
  zeno::NhSweepSpec nh;
  IoOpts io_nh;
  {
    auto* sub = app.add_subcommand(
        "nh-sweep",
        "Sweep detector precision r and normalized time t for the "
        "finite-precision measurement model");
    auto& m = io_nh.map;
    bind_double(m, sub->add_option("--amp", nh.amp), "amp", nh.amp);
    bind_double(m, sub->add_option("--r-min", nh.r_min), "r-min", nh.r_min);
    bind_double(m, sub->add_option("--r-max", nh.r_max), "r-max", nh.r_max);
    bind_int(m, sub->add_option("--r-steps", nh.r_steps), "r-steps",
             nh.r_steps);
    bind_double(m, sub->add_option("--t-min", nh.t_min), "t-min", nh.t_min);
    bind_double(m, sub->add_option("--t-max", nh.t_max), "t-max", nh.t_max);
    bind_int(m, sub->add_option("--t-steps", nh.t_steps), "t-steps",
             nh.t_steps);
    bind_double(m, sub->add_option("--v0", nh.v0), "v0", nh.v0);
    bind_double(m, sub->add_option("--delta-e", nh.delta_e), "delta-e",
                nh.delta_e);
    bind_double(m, sub->add_option("--tau-meas", nh.tau_meas), "tau-meas",
                nh.tau_meas);
    add_common(sub, io_nh);
    sub->callback([&] {
      resolve_io(io_nh);
      require(nh.amp >= 0 && nh.amp <= 1, "--amp: must lie in [0, 1]");
      check_grid(nh.r_min, nh.r_max, nh.r_steps, "r");
      require(nh.r_min > 0, "--r-min: must be positive");
      check_grid(nh.t_min, nh.t_max, nh.t_steps, "t");
      require(nh.t_min >= 0, "--t-min: must be non-negative");
      require(nh.v0 > 0, "--v0: must be positive");
      require(nh.delta_e > 0, "--delta-e: must be positive");
      require(nh.tau_meas > 0, "--tau-meas: must be positive");
      emit(io_nh, run_nh_sweep(nh, zeno::resolve_threads(io_nh.threads)));
    });
  }

  // validate: internal cross-checks of independent computation routes.
  double quad_tol = 1e-10;
  IoOpts io_val;
  {
    auto* sub = app.add_subcommand(
        "validate",
        "Cross-check closed forms against quadrature and optimizers");
    bind_double(io_val.map, sub->add_option("--quad-tol", quad_tol),
                "quad-tol", quad_tol);
    add_common(sub, io_val);
    sub->callback([&] {
      resolve_io(io_val);
      require(quad_tol > 0, "--quad-tol: must be positive");
      const zeno::ValidateReport rep = zeno::run_validate(quad_tol);
      if (io_val.out.empty()) {
        std::cout << rep.text;
      } else {
        std::ofstream f(io_val.out, std::ios::binary);
        if (!f) throw CLI::ValidationError("--out: cannot open " + io_val.out);
        f << rep.text;
      }
      if (!rep.passed) exit_code = 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  }
  return exit_code;
}
