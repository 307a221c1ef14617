#include "xychain/sweep.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace xychain {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double json_inverse_temperature(const nlohmann::json& value) {
  if (value.is_string()) return parse_inverse_temperature(value.get<std::string>());
  if (value.is_number()) return value.get<double>();
  throw std::invalid_argument("inverse_temperature must be a number or \"inf\"");
}

}  // namespace

void TimeGrid::validate() const {
  if (!(t_min >= 0.0) || !std::isfinite(t_min) || !std::isfinite(t_max)) {
    throw std::invalid_argument("time grid needs finite t_min >= 0 and finite t_max");
  }
  if (t_min > t_max) throw std::invalid_argument("time grid needs t_min <= t_max");
  if (steps < 1) throw std::invalid_argument("time grid needs at least one step");
}

std::vector<double> TimeGrid::points() const {
  validate();
  std::vector<double> ts(steps);
  if (steps == 1) {
    ts[0] = t_min;
    return ts;
  }
  const double span = t_max - t_min;
  for (int i = 0; i < steps; ++i) ts[i] = t_min + span * i / (steps - 1);
  ts.back() = t_max;
  return ts;
}

PairSelection PairSelection::parse(std::string_view text) {
  text = trim(text);
  PairSelection sel;
  if (text == "all") {
    sel.kind = Kind::All;
    return sel;
  }
  constexpr std::string_view kNeighbors = "neighbors:";
  if (text.starts_with(kNeighbors)) {
    sel.kind = Kind::Neighbors;
    sel.separation = parse_int(trim(text.substr(kNeighbors.size())), "pair separation");
    if (sel.separation < 1) throw std::invalid_argument("pair separation must be >= 1");
    return sel;
  }
  sel.kind = Kind::Explicit;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw std::invalid_argument("pair '" + std::string(item) + "' must look like n-m");
    }
    int n = parse_int(trim(item.substr(0, dash)), "pair index");
    int m = parse_int(trim(item.substr(dash + 1)), "pair index");
    if (n == m) throw std::invalid_argument("pair needs two distinct nodes");
    if (n > m) std::swap(n, m);
    sel.pairs.push_back({n, m});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (sel.pairs.empty()) throw std::invalid_argument("empty pair list");
  return sel;
}

std::string PairSelection::to_string() const {
  switch (kind) {
    case Kind::All: return "all";
    case Kind::Neighbors: return "neighbors:" + std::to_string(separation);
    case Kind::Explicit: {
      std::string out;
      for (const auto& p : pairs) {
        if (!out.empty()) out += ',';
        out += std::to_string(p.n) + "-" + std::to_string(p.m);
      }
      return out;
    }
  }
  return {};
}

std::vector<NodePair> PairSelection::expand(int n_sites) const {
  std::vector<NodePair> out;
  switch (kind) {
    case Kind::All:
      for (int n = 1; n <= n_sites; ++n)
        for (int m = n + 1; m <= n_sites; ++m) out.push_back({n, m});
      break;
    case Kind::Neighbors:
      for (int n = 1; n + separation <= n_sites; ++n) out.push_back({n, n + separation});
      break;
    case Kind::Explicit:
      for (const auto& p : pairs) {
        if (p.n < 1 || p.m > n_sites || p.n >= p.m) {
          throw std::invalid_argument("pair " + std::to_string(p.n) + "-" + std::to_string(p.m) +
                                      " outside the chain");
        }
        out.push_back(p);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
  }
  return out;
}

void RunConfig::validate() const {
  chain.validate();
  time_grid.validate();
  if (representations.empty()) throw std::invalid_argument("at least one representation required");
  if (output_format != "csv") {
    throw std::invalid_argument("unsupported output format '" + output_format + "'");
  }
  if (!(zero_epsilon >= 0.0)) throw std::invalid_argument("zero_epsilon must be >= 0");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  pairs.expand(chain.n_sites);
}

double parse_inverse_temperature(std::string_view text) {
  std::string lower;
  for (char ch : trim(text)) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "inf" || lower == "+inf" || lower == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(lower, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != lower.size() || !(value >= 0.0)) {
    throw std::invalid_argument("invalid inverse temperature '" + std::string(text) + "'");
  }
  return value;
}

RunConfig parse_config(std::string_view json_text, RunConfig base) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");

  RunConfig cfg = std::move(base);
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "n_sites") cfg.chain.n_sites = value.get<int>();
      else if (key == "coupling") cfg.chain.coupling = value.get<double>();
      else if (key == "larmor") cfg.chain.larmor = value.get<double>();
      else if (key == "inverse_temperature") cfg.chain.inverse_temperature = json_inverse_temperature(value);
      else if (key == "polarized_node") cfg.chain.polarized_node = value.get<int>();
      else if (key == "representations") {
        cfg.representations.clear();
        for (const auto& r : value) cfg.representations.push_back(parse_representation(r.get<std::string>()));
      } else if (key == "pairs") {
        if (value.is_string()) {
          cfg.pairs = PairSelection::parse(value.get<std::string>());
        } else {
          PairSelection sel;
          sel.kind = PairSelection::Kind::Explicit;
          for (const auto& p : value) {
            const int a = p.at(0).get<int>();
            const int b = p.at(1).get<int>();
            sel.pairs.push_back({std::min(a, b), std::max(a, b)});
          }
          cfg.pairs = sel;
        }
      } else if (key == "t_min") cfg.time_grid.t_min = value.get<double>();
      else if (key == "t_max") cfg.time_grid.t_max = value.get<double>();
      else if (key == "steps") cfg.time_grid.steps = value.get<int>();
      else if (key == "output" || key == "output_path") cfg.output_path = value.get<std::string>();
      else if (key == "format" || key == "output_format") cfg.output_format = value.get<std::string>();
      else if (key == "zero_epsilon") cfg.zero_epsilon = value.get<double>();
      else if (key == "workers") cfg.workers = value.get<int>();
      else throw std::invalid_argument("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

SweepResult run_sweep(const RunConfig& config) {
  config.validate();
  const SpectralData sd(config.chain);
  const auto pairs = config.pairs.expand(config.chain.n_sites);
  const auto times = config.time_grid.points();

  // Representation order is fixed by the enum, independent of the order given.
  auto reps = config.representations;
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

  const std::size_t per_rep = pairs.size() * times.size();
  SweepResult result;
  result.records.resize(per_rep * reps.size());
  std::vector<CoefficientResidual> residuals(result.records.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t rep_i = idx / per_rep;
      const std::size_t pair_i = (idx % per_rep) / times.size();
      const std::size_t t_i = idx % times.size();
      const NodePair p = pairs[pair_i];
      const auto c = coefficients(reps[rep_i], sd, config.chain, p.n, p.m, times[t_i]);
      residuals[idx] = coefficient_residual(c);
      result.records[idx] = evaluate(c);
    }
  };

  const std::size_t count = result.records.size();
  const auto workers = static_cast<std::size_t>(std::max(1, config.workers));
  if (workers == 1 || count < 2 * workers) {
    work(0, count);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t begin = 0; begin < count; begin += chunk) {
      pool.emplace_back(work, begin, std::min(count, begin + chunk));
    }
  }

  for (const auto& r : residuals) {
    result.worst_residual.trace = std::max(result.worst_residual.trace, r.trace);
    result.worst_residual.modulus = std::max(result.worst_residual.modulus, r.modulus);
    result.worst_residual.bound_excess = std::max(result.worst_residual.bound_excess, r.bound_excess);
  }
  result.coefficient_sets = residuals.size();
  return result;
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string csv_row(const CorrelationRecord& r) {
  std::string row;
  row += to_string(r.representation);
  row += ',' + std::to_string(r.pair.n);
  row += ',' + std::to_string(r.pair.m);
  for (double v : {r.time, r.concurrence, r.discord, r.discord_A, r.discord_B, r.classical_B,
                   r.mutual_information, r.geometric_discord}) {
    row += ',';
    row += format_number(v);
  }
  return row;
}

void write_csv(std::ostream& out, std::span<const CorrelationRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) out << csv_row(r) << '\n';
}

void emit_csv(const RunConfig& config, std::span<const CorrelationRecord> records,
              std::ostream& fallback) {
  if (config.output_path.empty()) {
    write_csv(fallback, records);
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + config.output_path);
  write_csv(file, records);
  if (!file) throw std::runtime_error("failed writing output file " + config.output_path);
}

}  // namespace xychain
