// Command-line front end: correlation sweeps, oracle verification and figure data.

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xychain/xychain.hpp"

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitConfigError = 2;

struct RunFlags {
  std::string config_path;
  std::optional<int> sites;
  std::optional<std::string> beta;
  std::optional<int> polarized;
  std::optional<double> coupling;
  std::optional<double> larmor;
  std::vector<std::string> reps;
  std::optional<std::string> pairs;
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::optional<int> steps;
  std::optional<std::string> out;
  std::optional<int> workers;
  std::optional<double> zero_eps;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--config", f.config_path, "Flat JSON run configuration");
  cmd->add_option("--sites", f.sites, "Number of chain sites N");
  cmd->add_option("--beta", f.beta, "Inverse temperature (number or inf)");
  cmd->add_option("--polarized", f.polarized, "Initially polarized node j (1-based)");
  cmd->add_option("--coupling", f.coupling, "Nearest-neighbour coupling D");
  cmd->add_option("--larmor", f.larmor, "Larmor frequency omega0");
  cmd->add_option("--rep", f.reps, "Representation: beta, c or spin (repeatable)");
  cmd->add_option("--pairs", f.pairs, "all | neighbors:l | n-m[,n-m...]");
  cmd->add_option("--t-min", f.t_min, "First sample time");
  cmd->add_option("--t-max", f.t_max, "Last sample time");
  cmd->add_option("--steps", f.steps, "Number of sample times");
  cmd->add_option("--out", f.out, "Output CSV path (default: stdout)");
  cmd->add_option("--workers", f.workers, "Worker threads");
  cmd->add_option("--zero-eps", f.zero_eps, "Zero-classification threshold");
}

xychain::RunConfig resolve(const RunFlags& f) {
  xychain::RunConfig cfg;
  if (!f.config_path.empty()) cfg = xychain::load_config(f.config_path, cfg);
  if (f.sites) cfg.chain.n_sites = *f.sites;
  if (f.beta) cfg.chain.inverse_temperature = xychain::parse_inverse_temperature(*f.beta);
  if (f.polarized) cfg.chain.polarized_node = *f.polarized;
  if (f.coupling) cfg.chain.coupling = *f.coupling;
  if (f.larmor) cfg.chain.larmor = *f.larmor;
  if (!f.reps.empty()) {
    cfg.representations.clear();
    for (const auto& r : f.reps) cfg.representations.push_back(xychain::parse_representation(r));
  }
  if (f.pairs) cfg.pairs = xychain::PairSelection::parse(*f.pairs);
  if (f.t_min) cfg.time_grid.t_min = *f.t_min;
  if (f.t_max) cfg.time_grid.t_max = *f.t_max;
  if (f.steps) cfg.time_grid.steps = *f.steps;
  if (f.out) cfg.output_path = *f.out;
  if (f.workers) cfg.workers = *f.workers;
  if (f.zero_eps) cfg.zero_epsilon = *f.zero_eps;
  cfg.validate();
  return cfg;
}

int run_sweep_command(const RunFlags& flags, bool snapshot) {
  auto cfg = resolve(flags);
  if (snapshot) {
    cfg.time_grid.t_max = cfg.time_grid.t_min;
    cfg.time_grid.steps = 1;
  }
  const auto result = xychain::run_sweep(cfg);
  xychain::emit_csv(cfg, result.records, std::cout);
  const auto& worst = result.worst_residual;
  if (worst.worst() > 1e-12) {
    std::cerr << "coefficient laws violated: worst residual " << worst.worst() << '\n';
    return kExitChecksFailed;
  }
  return EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum correlations of an open XY spin chain with one polarized node"};
  app.require_subcommand(1);

  RunFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Correlation records over a time grid, as CSV");
  add_run_flags(sweep, sweep_flags);

  RunFlags snap_flags;
  auto* snapshot = app.add_subcommand("snapshot", "Correlation records at the single time --t-min");
  add_run_flags(snapshot, snap_flags);

  int max_n = 8;
  int random_sets = 1000;
  std::uint64_t seed = 20240601;
  bool json = false;
  auto* verify = app.add_subcommand("verify", "Exact-oracle and property verification suite");
  verify->add_option("--max-n", max_n, "Largest chain for the dense oracle (2..12)");
  verify->add_option("--random-sets", random_sets, "Random coefficient sets per property");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_flag("--json", json, "Emit the report as JSON");

  std::string figure;
  std::string repro_out;
  xychain::TimeGrid grid;
  auto* repro = app.add_subcommand("reproduce", "Regenerate figure data and compare reference values");
  repro->add_option("figure", figure, "fig1 | fig2 | fig3 | fig4 | scalars")->required();
  repro->add_option("--out", repro_out, "Output CSV path (default: stdout)");
  repro->add_option("--t-min", grid.t_min, "First sample time");
  repro->add_option("--t-max", grid.t_max, "Last sample time");
  repro->add_option("--steps", grid.steps, "Number of sample times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (*sweep) return run_sweep_command(sweep_flags, false);
    if (*snapshot) return run_sweep_command(snap_flags, true);

    if (*verify) {
      const auto report = xychain::verify({max_n, random_sets, seed});
      if (json) {
        xychain::write_report_json(std::cout, report);
      } else {
        xychain::write_report(std::cout, report);
      }
      return report.passed() ? EXIT_SUCCESS : kExitChecksFailed;
    }

    if (*repro) {
      const auto result = xychain::reproduce(figure, grid);
      if (repro_out.empty()) {
        std::cout << result.csv;
      } else {
        std::ofstream file(repro_out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file " + repro_out);
        file << result.csv;
      }
      for (const auto& c : result.checks) {
        std::cerr << (c.passed() ? "pass" : "FAIL") << "  " << c.name
                  << "  computed=" << xychain::format_number(c.computed)
                  << "  reference=" << xychain::format_number(c.reference)
                  << "  delta=" << xychain::format_number(c.delta())
                  << "  tol=" << xychain::format_number(c.tolerance) << '\n';
      }
      for (const auto& note : result.notes) std::cerr << "note  " << note << '\n';
      return result.passed() ? EXIT_SUCCESS : kExitChecksFailed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitChecksFailed;
  }
  return EXIT_SUCCESS;
}
