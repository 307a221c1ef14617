#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "test_support.hpp"
#include "xychain/chain_model.hpp"

using namespace xychain;
using xychain::testing::kInf;

TEST_CASE("chain spec validation") {
  CHECK_NOTHROW(ChainSpec{2, 1.0, 0.0, 1.0, 2}.validate());
  CHECK_THROWS_AS(ChainSpec({1, 1.0, 0.0, 1.0, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ChainSpec({4, 1.0, 0.0, 1.0, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ChainSpec({4, 1.0, 0.0, 1.0, 5}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ChainSpec({4, 0.0, 0.0, 1.0, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ChainSpec({4, 1.0, -1.0, 1.0, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ChainSpec({4, 1.0, 0.0, -0.5, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(ChainSpec({4, 1.0, 0.0, std::nan(""), 1}).validate(), std::invalid_argument);
}

TEST_CASE("polarization is tanh(beta/2) with the infinite-beta sentinel") {
  CHECK(ChainSpec{3, 1.0, 0.0, 0.0, 1}.polarization() == 0.0);
  CHECK(ChainSpec{3, 1.0, 0.0, kInf, 1}.polarization() == 1.0);
  CHECK(ChainSpec{3, 1.0, 0.0, 2.0, 1}.polarization() == doctest::Approx(std::tanh(1.0)));
  for (double beta : {0.0, 0.1, 1.0, 10.0, 100.0, kInf}) {
    const double p = ChainSpec{3, 1.0, 0.0, beta, 1}.polarization();
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }
}

TEST_CASE("build_spectral rejects a single site") {
  CHECK_THROWS_AS(build_spectral({1, 1.0, 0.0, 1.0, 1}), std::invalid_argument);
}

TEST_CASE("three-site spectrum by hand") {
  const auto sd = build_spectral({3, 1.0, 0.0, 1.0, 1});
  CHECK(sd.wavenumber(1) == doctest::Approx(std::numbers::pi / 4));
  CHECK(sd.wavenumber(2) == doctest::Approx(std::numbers::pi / 2));
  CHECK(sd.wavenumber(3) == doctest::Approx(3 * std::numbers::pi / 4));
  CHECK(sd.amplitude(1, 2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(sd.energy(1) - sd.energy(3) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(sd.amplitude(0, 1), std::out_of_range);
  CHECK_THROWS_AS(sd.amplitude(1, 4), std::out_of_range);
}

TEST_CASE("energies include the Larmor offset") {
  const auto sd = build_spectral({5, 2.0, 0.75, 1.0, 1});
  for (int k = 1; k <= 5; ++k) {
    CHECK(sd.energy(k) == doctest::Approx(2.0 * std::cos(std::numbers::pi * k / 6) + 0.75));
  }
}

TEST_CASE("sine amplitudes are orthonormal and reflect with alternating sign") {
  for (int n_sites : {2, 3, 7, 21, 40}) {
    const auto sd = build_spectral({n_sites, 1.0, 0.0, 1.0, 1});
    for (int j = 1; j <= n_sites; ++j) {
      double column = 0.0;
      for (int k = 1; k <= n_sites; ++k) column += sd.amplitude(k, j) * sd.amplitude(k, j);
      CHECK(std::abs(column - 1.0) < 1e-12);
    }
    for (int a = 1; a <= n_sites; ++a) {
      for (int b = 1; b <= n_sites; ++b) {
        double dot = 0.0;
        for (int j = 1; j <= n_sites; ++j) dot += sd.amplitude(a, j) * sd.amplitude(b, j);
        CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-12);
      }
      for (int j = 1; j <= n_sites; ++j) {
        const double sign = (a % 2 == 1) ? 1.0 : -1.0;
        CHECK(std::abs(sd.amplitude(a, j) - sign * sd.amplitude(a, n_sites + 1 - j)) < 1e-12);
      }
    }
  }
}

TEST_CASE("transition amplitude at t = 0 is the Kronecker delta") {
  const auto sd = build_spectral({6, 1.0, 0.0, 1.0, 1});
  for (int n = 1; n <= 6; ++n)
    for (int j = 1; j <= 6; ++j)
      CHECK(transition_amplitude(sd, n, j, 0.0) == std::complex<double>(n == j ? 1.0 : 0.0));
  CHECK_THROWS_AS(transition_amplitude(sd, 0, 1, 1.0), std::out_of_range);
  CHECK_THROWS_AS(transition_amplitude(sd, 1, 7, 1.0), std::out_of_range);
}

TEST_CASE("transition amplitude matches direct exponentiation of the hopping matrix") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> time(0.0, 60.0);
  for (int n_sites : {2, 5, 12, 21}) {
    const double coupling = 1.3;
    const auto sd = build_spectral({n_sites, coupling, 0.0, 1.0, 1});
    for (int trial = 0; trial < 4; ++trial) {
      const double t = time(rng);
      const auto u = xychain::testing::hopping_propagator(n_sites, coupling, t);
      for (int n = 1; n <= n_sites; ++n)
        for (int j = 1; j <= n_sites; ++j)
          CHECK(std::abs(transition_amplitude(sd, n, j, t) - u(n - 1, j - 1)) < 1e-12);
    }
  }
}

TEST_CASE("propagator column agrees with the scalar amplitude") {
  const auto sd = build_spectral({9, 1.0, 0.0, 1.0, 1});
  for (double t : {0.0, 0.3, 4.1, 17.0}) {
    const auto col = propagator_column(sd, 4, t);
    for (int n = 1; n <= 9; ++n) CHECK(std::abs(col[n - 1] - transition_amplitude(sd, n, 4, t)) < 1e-14);
  }
}

TEST_CASE("magnetization ratio") {
  const int n_sites = 21;
  const auto sd = build_spectral({n_sites, 1.0, 0.0, 10.0, 1});
  CHECK(magnetization_ratio(sd, 3, 3, 0.0) == 1.0);
  CHECK(magnetization_ratio(sd, 4, 3, 0.0) == 0.0);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> time(0.0, 100.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double t = time(rng);
    for (int j : {1, 6, 11}) {
      double total = 0.0;
      for (int p = 1; p <= n_sites; ++p) {
        const double ratio = magnetization_ratio(sd, p, j, t);
        CHECK(ratio >= 0.0);
        CHECK(ratio <= 1.0 + 1e-12);
        // Literal (4/(N+1)^2) |sum_k exp(-i eps_k t) sin(kj) sin(kp)|^2.
        std::complex<double> sum = 0.0;
        for (int k = 1; k <= n_sites; ++k) {
          const double wave = std::numbers::pi * k / (n_sites + 1);
          sum += std::polar(1.0, -std::cos(wave) * t) * std::sin(wave * j) * std::sin(wave * p);
        }
        const double literal = 4.0 / ((n_sites + 1.0) * (n_sites + 1.0)) * std::norm(sum);
        CHECK(std::abs(ratio - literal) < 1e-12);
        total += ratio;
      }
      CHECK(std::abs(total - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("Larmor frequency leaves transition probabilities unchanged") {
  const auto plain = build_spectral({8, 1.0, 0.0, 1.0, 1});
  const auto shifted = build_spectral({8, 1.0, 5.0, 1.0, 1});
  for (double t : {0.5, 3.0, 20.0}) {
    for (int n = 1; n <= 8; ++n) {
      CHECK(magnetization_ratio(plain, n, 2, t) == magnetization_ratio(shifted, n, 2, t));
    }
  }
}
