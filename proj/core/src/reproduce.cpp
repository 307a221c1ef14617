#include "xychain/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "xychain/chain_model.hpp"
#include "xychain/correlations.hpp"

namespace xychain {

namespace {

constexpr int kSites = 21;
constexpr double kBeta = 10.0;

// Reference maxima over n of the j = 1 profiles for separations l = 1..4.
constexpr double kDiscordMaxima[] = {0.0059, 0.0058, 0.0055, 0.0051};
constexpr double kGeometricMaxima[] = {0.0108, 0.0106, 0.0099, 0.0093};
constexpr double kPlateauQ = 0.0061;
constexpr double kMiddleOddGeometric = 0.0028;
constexpr double kMiddleEvenGeometricAmplitude = 0.0110;

ChainSpec reference_chain(int j, double beta = kBeta) { return {kSites, 1.0, 0.0, beta, j}; }

std::string pair_label(NodePair p) { return "(" + std::to_string(p.n) + "," + std::to_string(p.m) + ")"; }

std::string join_pairs(const std::vector<NodePair>& pairs) {
  std::string out;
  for (const auto& p : pairs) out += (out.empty() ? "" : " ") + pair_label(p);
  return out.empty() ? "none" : out;
}

void add_profile_checks(Reproduction& out) {
  const ChainSpec j1 = reference_chain(1);
  const SpectralData sd(j1);
  for (int l = 1; l <= 4; ++l) {
    double best_q = -1.0;
    double best_g = -1.0;
    int best_n = 0;
    for (int n = 1; n + l <= kSites; ++n) {
      const auto c = beta_coefficients(sd, j1, n, n + l, 0.0);
      const double q = discord(c);
      if (q > best_q) {
        best_q = q;
        best_n = n;
      }
      best_g = std::max(best_g, geometric_discord(c));
    }
    const std::string suffix = "_l" + std::to_string(l);
    out.checks.push_back({"discord_max" + suffix, best_q, kDiscordMaxima[l - 1], 1e-4});
    out.checks.push_back({"discord_argmax" + suffix, static_cast<double>(best_n),
                          static_cast<double>((kSites + 1 - l) / 2), 0.0});
    out.checks.push_back({"geometric_max" + suffix, best_g, kGeometricMaxima[l - 1], 1e-4});
  }

  const ChainSpec j11 = reference_chain(11);
  const SpectralData sd11(j11);
  for (int l = 1; l <= 4; ++l) {
    double farthest = kMiddleOddGeometric;
    double amplitude = 0.0;
    for (int n = 1; n + l <= kSites; ++n) {
      const double g = geometric_discord(beta_coefficients(sd11, j11, n, n + l, 0.0));
      if (std::abs(g - kMiddleOddGeometric) > std::abs(farthest - kMiddleOddGeometric)) farthest = g;
      amplitude = std::max(amplitude, g);
    }
    const std::string suffix = "_l" + std::to_string(l);
    if (l % 2 == 1) {
      out.checks.push_back({"geometric_middle_odd" + suffix, farthest, kMiddleOddGeometric, 1e-4});
    } else {
      out.checks.push_back(
          {"geometric_middle_even_amplitude" + suffix, amplitude, kMiddleEvenGeometricAmplitude, 1e-4});
    }
  }
}

Reproduction scalars() {
  Reproduction out;
  out.figure = "scalars";
  const double q = middle_node_q(kBeta, kSites);
  out.checks.push_back({"plateau_q_closed_form", q, kPlateauQ, 5e-4});

  const ChainSpec j11 = reference_chain(11);
  const SpectralData sd(j11);
  double spread = 0.0;
  for (int n = 1; n <= kSites; n += 2) {
    for (int m = n + 2; m <= kSites; m += 2) {
      spread = std::max(spread, std::abs(discord(beta_coefficients(sd, j11, n, m, 0.0)) - q));
    }
  }
  out.checks.push_back({"plateau_q_pipeline_spread", spread, 0.0, 1e-10});
  add_profile_checks(out);

  std::ostringstream csv;
  csv << "name,computed,reference,delta,tolerance,status\n";
  for (const auto& c : out.checks) {
    csv << c.name << ',' << format_number(c.computed) << ',' << format_number(c.reference) << ','
        << format_number(c.delta()) << ',' << format_number(c.tolerance) << ','
        << (c.passed() ? "pass" : "fail") << '\n';
  }
  out.csv = csv.str();
  return out;
}

Reproduction figure1() {
  Reproduction out;
  out.figure = "fig1";
  std::ostringstream csv;
  csv << "j,inverse_temperature,n,m,discord\n";
  double zero_beta = 0.0;
  for (int j : {1, 6}) {
    for (int step = 0; step <= 80; ++step) {
      const double beta = 0.25 * step;
      const ChainSpec spec = reference_chain(j, beta);
      const SpectralData sd(spec);
      for (int n = 1; n < kSites; ++n) {
        const double q = discord(beta_coefficients(sd, spec, n, n + 1, 0.0));
        if (step == 0) zero_beta = std::max(zero_beta, q);
        csv << j << ',' << format_number(beta) << ',' << n << ',' << n + 1 << ','
            << format_number(q) << '\n';
      }
    }
  }
  out.csv = csv.str();
  out.checks.push_back({"discord_at_beta_zero", zero_beta, 0.0, 1e-12});

  const ChainSpec j1 = reference_chain(1);
  const SpectralData sd(j1);
  int argmax = 0;
  double best = -1.0;
  for (int n = 1; n < kSites; ++n) {
    const double q = discord(beta_coefficients(sd, j1, n, n + 1, 0.0));
    if (q > best) {
      best = q;
      argmax = n;
    }
  }
  out.checks.push_back({"j1_nearest_neighbour_peak_node", static_cast<double>(argmax), 10.0, 0.0});
  return out;
}

Reproduction figure2() {
  Reproduction out;
  out.figure = "fig2";
  std::ostringstream csv;
  csv << "j," << kCsvHeader << '\n';
  for (int j : {1, 6, 10, 11}) {
    const ChainSpec spec = reference_chain(j);
    const SpectralData sd(spec);
    for (int l = 1; l <= 4; ++l) {
      for (int n = 1; n + l <= kSites; ++n) {
        csv << j << ',' << csv_row(evaluate(beta_coefficients(sd, spec, n, n + l, 0.0))) << '\n';
      }
    }
  }
  out.csv = csv.str();
  add_profile_checks(out);
  return out;
}

Reproduction time_figure(std::string_view id, int separation, const TimeGrid& grid) {
  Reproduction out;
  out.figure = std::string(id);
  std::ostringstream csv;
  csv << "j," << kCsvHeader << '\n';
  for (int j : {1, 6, 11}) {
    RunConfig cfg;
    cfg.chain = reference_chain(j);
    cfg.representations = {Representation::CFermion};
    cfg.pairs.kind = PairSelection::Kind::Neighbors;
    cfg.pairs.separation = separation;
    cfg.time_grid = grid;
    const auto result = run_sweep(cfg);
    for (const auto& r : result.records) csv << j << ',' << csv_row(r) << '\n';

    // Echo on the pair next to the polarized node.
    const NodePair probe = j == 1 ? NodePair{1, 1 + separation} : NodePair{j, j + separation};
    std::vector<double> series;
    for (const auto& r : result.records)
      if (r.pair == probe) series.push_back(r.discord);
    out.notes.push_back("j=" + std::to_string(j) + " discord echo on " + pair_label(probe) + ": " +
                        (has_echo(series, 1e-3, 1e-4) ? "yes" : "no"));
  }
  out.csv = csv.str();
  return out;
}

Reproduction figure3(const TimeGrid& grid) {
  Reproduction out = time_figure("fig3", 1, grid);

  // Reference echo: j = 1, c-representation, nodes (1, 2).
  const ChainSpec j1 = reference_chain(1);
  const SpectralData sd(j1);
  std::vector<double> series;
  for (double t : grid.points()) series.push_back(discord(c_coefficients(sd, j1, 1, 2, t)));
  out.checks.push_back({"echo_j1_pair_1_2", has_echo(series, 1e-3, 1e-4) ? 1.0 : 0.0, 1.0, 0.0});

  const std::vector<std::vector<NodePair>> expected{
      {{1, 2}, {2, 3}, {3, 4}}, {{5, 6}, {6, 7}}, {{10, 11}, {11, 12}}};
  const int js[] = {1, 6, 11};
  for (int i = 0; i < 3; ++i) {
    const auto found = entangled_pairs(reference_chain(js[i]), Representation::CFermion, grid, 1e-12);
    out.notes.push_back("j=" + std::to_string(js[i]) + " entangled pairs: " + join_pairs(found));
    out.checks.push_back({"concurrence_support_j" + std::to_string(js[i]),
                          found == expected[i] ? 1.0 : 0.0, 1.0, 0.0});
  }
  std::vector<NodePair> remote;
  for (const auto& p : entangled_pairs(reference_chain(2), Representation::CFermion, grid, 1e-12))
    if (p.m > p.n + 1) remote.push_back(p);
  out.notes.push_back("j=2 entangled non-nearest pairs: " + join_pairs(remote));
  return out;
}

}  // namespace

bool ReferenceCheck::passed() const { return std::abs(computed - reference) <= tolerance; }

bool Reproduction::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

bool has_echo(std::span<const double> series, double high, double low) {
  // Scan for high -> low -> high in order.
  int stage = 0;
  for (double v : series) {
    if (stage == 0 && v > high) stage = 1;
    else if (stage == 1 && v < low) stage = 2;
    else if (stage == 2 && v > high) return true;
  }
  return false;
}

std::vector<NodePair> entangled_pairs(const ChainSpec& spec, Representation rep,
                                      const TimeGrid& grid, double epsilon) {
  const SpectralData sd(spec);
  const auto times = grid.points();
  std::vector<NodePair> found;
  for (int n = 1; n <= spec.n_sites; ++n) {
    for (int m = n + 1; m <= spec.n_sites; ++m) {
      for (double t : times) {
        if (concurrence_closed_form(coefficients(rep, sd, spec, n, m, t)) > epsilon) {
          found.push_back({n, m});
          break;
        }
      }
    }
  }
  return found;
}

Reproduction reproduce(std::string_view figure_id, const TimeGrid& grid) {
  grid.validate();
  if (figure_id == "scalars") return scalars();
  if (figure_id == "fig1") return figure1();
  if (figure_id == "fig2") return figure2();
  if (figure_id == "fig3") return figure3(grid);
  if (figure_id == "fig4") return time_figure("fig4", 2, grid);
  throw std::invalid_argument("unknown figure id '" + std::string(figure_id) +
                              "' (expected fig1, fig2, fig3, fig4 or scalars)");
}

}  // namespace xychain
