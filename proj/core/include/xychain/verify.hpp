#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "xychain/xstate.hpp"

namespace xychain {

enum class CheckStatus { Pass, Fail, Info };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  int max_sites = 8;
  int random_sets = 1000;
  std::uint64_t seed = 20240601;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Random coefficient set obeying all X-state laws: jnn, jmm uniform on the triangle
/// jnn + jmm <= 1/2 and jnm = sqrt(jnn jmm) exp(i phi).
XStateCoefficients sample_coefficients(std::mt19937_64& rng);

/// Oracle-versus-closed-form comparison plus every analytic property suite.
/// Throws std::invalid_argument unless 2 <= max_sites <= 12.
VerifyReport verify(const VerifyOptions& options);

/// One line per check: STATUS<TAB>name<TAB>max_error<TAB>tolerance<TAB>detail.
void write_report(std::ostream& out, const VerifyReport& report);
void write_report_json(std::ostream& out, const VerifyReport& report);

}  // namespace xychain
