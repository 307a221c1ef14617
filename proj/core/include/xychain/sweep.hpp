#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xychain/chain_model.hpp"
#include "xychain/correlations.hpp"
#include "xychain/xstate.hpp"

namespace xychain {

/// Uniform grid of `steps` sample times from t_min to t_max inclusive.
/// A single step samples t_min only.
struct TimeGrid {
  double t_min = 0.0;
  double t_max = 100.0;
  int steps = 2000;

  void validate() const;
  std::vector<double> points() const;
};

/// Which node pairs a sweep visits: every pair, all pairs at a fixed separation
/// ("neighbors:l"), or an explicit list ("1-2,3-7").
struct PairSelection {
  enum class Kind { All, Neighbors, Explicit };

  Kind kind = Kind::All;
  int separation = 1;
  std::vector<NodePair> pairs;

  static PairSelection parse(std::string_view text);
  std::string to_string() const;
  /// Sorted pair list for a chain of n_sites; throws on pairs outside [1, N].
  std::vector<NodePair> expand(int n_sites) const;
};

struct RunConfig {
  ChainSpec chain{21, 1.0, 0.0, 10.0, 1};
  std::vector<Representation> representations{Representation::BetaFermion};
  PairSelection pairs;
  TimeGrid time_grid;
  std::string output_path;  // empty: standard output
  std::string output_format = "csv";
  double zero_epsilon = 1e-12;
  int workers = 1;

  void validate() const;
};

/// Accepts "inf", "+inf", "infinity" (any case) or a decimal number.
double parse_inverse_temperature(std::string_view text);

/// Flat JSON object keyed by RunConfig field names. Missing keys keep their defaults.
RunConfig parse_config(std::string_view json_text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

struct SweepResult {
  std::vector<CorrelationRecord> records;
  CoefficientResidual worst_residual;
  std::size_t coefficient_sets = 0;
};

/// One record per (representation, pair, time), ordered by representation, n, m, t.
/// The result does not depend on config.workers.
SweepResult run_sweep(const RunConfig& config);

inline constexpr std::string_view kCsvHeader =
    "representation,n,m,t,concurrence,discord,discord_A,discord_B,classical_B,mutual_info,"
    "geometric_discord";

/// Fixed-format number used in every CSV cell (12 significant digits).
std::string format_number(double value);

std::string csv_row(const CorrelationRecord& record);
void write_csv(std::ostream& out, std::span<const CorrelationRecord> records);

/// Writes to config.output_path, or to `fallback` if the path is empty.
/// Throws std::runtime_error when the file cannot be opened.
void emit_csv(const RunConfig& config, std::span<const CorrelationRecord> records,
              std::ostream& fallback);

}  // namespace xychain
