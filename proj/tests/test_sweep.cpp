#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "test_support.hpp"
#include "xychain/reproduce.hpp"
#include "xychain/sweep.hpp"

using namespace xychain;
using xychain::testing::kInf;

namespace {

std::string to_csv(const SweepResult& result) {
  std::ostringstream out;
  write_csv(out, result.records);
  return out.str();
}

RunConfig small_config() {
  RunConfig cfg;
  cfg.chain = {7, 1.0, 0.0, 10.0, 2};
  cfg.representations = {Representation::Spin, Representation::BetaFermion, Representation::CFermion};
  cfg.time_grid = {0.0, 5.0, 11};
  return cfg;
}

}  // namespace

TEST_CASE("time grid points") {
  auto pts = TimeGrid{0.0, 100.0, 2000}.points();
  REQUIRE(pts.size() == 2000);
  CHECK(pts.front() == 0.0);
  CHECK(pts.back() == 100.0);
  pts = TimeGrid{2.0, 4.0, 5}.points();
  CHECK(pts == std::vector<double>{2.0, 2.5, 3.0, 3.5, 4.0});
  CHECK(TimeGrid{3.0, 3.0, 1}.points() == std::vector<double>{3.0});
  CHECK_THROWS_AS(TimeGrid({-1.0, 3.0, 4}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(TimeGrid({5.0, 3.0, 4}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(TimeGrid({0.0, 3.0, 0}).validate(), std::invalid_argument);
}

TEST_CASE("pair selection parsing") {
  auto sel = PairSelection::parse("all");
  CHECK(sel.expand(4).size() == 6);
  sel = PairSelection::parse("neighbors:2");
  CHECK(sel.expand(5) == std::vector<NodePair>{{1, 3}, {2, 4}, {3, 5}});
  CHECK(sel.to_string() == "neighbors:2");
  sel = PairSelection::parse("3-5, 2-1,1-2");
  CHECK(sel.expand(5) == std::vector<NodePair>{{1, 2}, {3, 5}});
  CHECK_THROWS_AS(sel.expand(4), std::invalid_argument);
  CHECK_THROWS_AS(PairSelection::parse("neighbors:0"), std::invalid_argument);
  CHECK_THROWS_AS(PairSelection::parse("1-1"), std::invalid_argument);
  CHECK_THROWS_AS(PairSelection::parse("12"), std::invalid_argument);
  CHECK_THROWS_AS(PairSelection::parse("a-b"), std::invalid_argument);
}

TEST_CASE("inverse temperature text") {
  CHECK(parse_inverse_temperature("inf") == kInf);
  CHECK(parse_inverse_temperature("Infinity") == kInf);
  CHECK(parse_inverse_temperature("2.5") == 2.5);
  CHECK_THROWS_AS(parse_inverse_temperature("hot"), std::invalid_argument);
  CHECK_THROWS_AS(parse_inverse_temperature("-inf"), std::invalid_argument);
}

TEST_CASE("json config") {
  const auto cfg = parse_config(R"({
    "n_sites": 9, "inverse_temperature": "inf", "polarized_node": 5,
    "representations": ["c", "spin"], "pairs": [[1, 2], [4, 3]],
    "t_min": 1, "t_max": 2, "steps": 3, "output": "x.csv", "workers": 2
  })");
  CHECK(cfg.chain.n_sites == 9);
  CHECK(cfg.chain.inverse_temperature == kInf);
  CHECK(cfg.chain.polarized_node == 5);
  CHECK(cfg.representations ==
        std::vector<Representation>{Representation::CFermion, Representation::Spin});
  CHECK(cfg.pairs.expand(9) == std::vector<NodePair>{{1, 2}, {3, 4}});
  CHECK(cfg.time_grid.steps == 3);
  CHECK(cfg.output_path == "x.csv");
  CHECK(cfg.workers == 2);

  CHECK(parse_config(R"({"pairs": "neighbors:3"})").pairs.separation == 3);
  CHECK_THROWS_AS(parse_config(R"({"sites": 4})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("[1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(R"({"n_sites": "four"})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(R"({"representations": ["up"]})"), std::invalid_argument);
}

TEST_CASE("config validation") {
  RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.representations.clear();
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = RunConfig{};
  cfg.output_format = "parquet";
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = RunConfig{};
  cfg.workers = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_number(100.0) == "100");
}

TEST_CASE("csv layout") {
  auto cfg = small_config();
  cfg.pairs = PairSelection::parse("1-2");
  cfg.time_grid = {0.0, 1.0, 2};
  const auto csv = to_csv(run_sweep(cfg));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == kCsvHeader);
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].starts_with("beta,1,2,0,"));
  CHECK(rows[1].starts_with("beta,1,2,1,"));
  CHECK(rows[2].starts_with("c,1,2,0,"));
  CHECK(rows[4].starts_with("spin,1,2,0,"));
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');
  for (const auto& row : rows) CHECK(std::count(row.begin(), row.end(), ',') == 10);
}

TEST_CASE("sweep output is deterministic and independent of worker count") {
  auto cfg = small_config();
  const auto serial = run_sweep(cfg);
  CHECK(serial.records.size() == 3 * 21 * 11);
  CHECK(serial.coefficient_sets == serial.records.size());
  CHECK(serial.worst_residual.worst() <= 1e-12);
  const auto baseline = to_csv(serial);
  CHECK(to_csv(run_sweep(cfg)) == baseline);
  for (int workers : {2, 3, 8}) {
    cfg.workers = workers;
    CHECK(to_csv(run_sweep(cfg)) == baseline);
  }
}

TEST_CASE("records follow the coefficient builders") {
  auto cfg = small_config();
  cfg.representations = {Representation::CFermion};
  const auto result = run_sweep(cfg);
  const auto sd = build_spectral(cfg.chain);
  for (const auto& r : result.records) {
    const auto expected = evaluate(c_coefficients(sd, cfg.chain, r.pair.n, r.pair.m, r.time));
    CHECK(r.discord == expected.discord);
    CHECK(r.concurrence == expected.concurrence);
  }
}

TEST_CASE("emit_csv writes the file byte for byte") {
  auto cfg = small_config();
  const auto path = std::filesystem::temp_directory_path() / "xychain_test_sweep.csv";
  cfg.output_path = path.string();
  const auto result = run_sweep(cfg);
  std::ostringstream unused;
  emit_csv(cfg, result.records, unused);
  CHECK(unused.str().empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == to_csv(result));
  std::filesystem::remove(path);
}

TEST_CASE("echo detector") {
  const std::vector<double> echo{0.0, 0.002, 0.00005, 0.0015};
  CHECK(has_echo(echo, 1e-3, 1e-4));
  const std::vector<double> decay{0.002, 0.0015, 0.00005, 0.0};
  CHECK_FALSE(has_echo(decay, 1e-3, 1e-4));
}

TEST_CASE("reproduce rejects unknown figures") {
  CHECK_THROWS_AS(reproduce("fig9"), std::invalid_argument);
}
