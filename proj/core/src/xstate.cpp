#include "xychain/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace xychain {

namespace {

constexpr double kBoundTolerance = 1e-12;

void check_pair(int n, int m) {
  if (n >= m) {
    throw std::out_of_range("pair must satisfy n < m, got (" + std::to_string(n) + ", " +
                            std::to_string(m) + ")");
  }
}

}  // namespace

std::string_view to_string(Representation rep) {
  switch (rep) {
    case Representation::BetaFermion: return "beta";
    case Representation::CFermion: return "c";
    case Representation::Spin: return "spin";
  }
  return "?";
}

Representation parse_representation(std::string_view name) {
  if (name == "beta") return Representation::BetaFermion;
  if (name == "c") return Representation::CFermion;
  if (name == "spin") return Representation::Spin;
  throw std::invalid_argument("unknown representation '" + std::string(name) +
                              "' (expected beta, c or spin)");
}

double CoefficientResidual::worst() const { return std::max({trace, modulus, bound_excess}); }

CoefficientResidual coefficient_residual(const XStateCoefficients& c) {
  CoefficientResidual r;
  r.trace = std::abs(4.0 * c.j00 + 2.0 * (c.jnn + c.jmm) - 1.0);
  const bool remote_spin = c.representation == Representation::Spin && c.pair.m > c.pair.n + 1;
  r.modulus = remote_spin ? std::norm(c.jnm) : std::abs(std::norm(c.jnm) - c.jnn * c.jmm);
  r.bound_excess = std::max({0.0, c.jnn + c.jmm - 0.5, -c.jnn, -c.jmm});
  return r;
}

XStateCoefficients beta_coefficients(const SpectralData& sd, const ChainSpec& spec, int n, int m,
                                     double t) {
  sd.check_mode(n);
  sd.check_mode(m);
  check_pair(n, m);
  const int j = spec.polarized_node;
  const double half_pol = spec.polarization() / 2.0;
  const double gn = sd.amplitude(n, j);
  const double gm = sd.amplitude(m, j);

  XStateCoefficients c;
  c.representation = Representation::BetaFermion;
  c.pair = {n, m};
  c.time = t;
  c.jnn = half_pol * gn * gn;
  c.jmm = half_pol * gm * gm;
  c.j00 = 0.25 - (c.jnn + c.jmm) / 2.0;
  c.jnm = std::polar(half_pol * gn * gm, -t * (sd.dispersion(n) - sd.dispersion(m)));
  return c;
}

XStateCoefficients c_coefficients(const SpectralData& sd, const ChainSpec& spec, int n, int m,
                                  double t) {
  sd.check_site(n);
  sd.check_site(m);
  check_pair(n, m);
  const int j = spec.polarized_node;
  const double half_pol = spec.polarization() / 2.0;
  const std::complex<double> un = transition_amplitude(sd, n, j, t);
  const std::complex<double> um = transition_amplitude(sd, m, j, t);

  XStateCoefficients c;
  c.representation = Representation::CFermion;
  c.pair = {n, m};
  c.time = t;
  c.jnn = half_pol * std::norm(un);
  c.jmm = half_pol * std::norm(um);
  c.j00 = 0.25 - (c.jnn + c.jmm) / 2.0;
  c.jnm = half_pol * un * std::conj(um);
  return c;
}

XStateCoefficients spin_coefficients(const SpectralData& sd, const ChainSpec& spec, int n, int m,
                                     double t) {
  XStateCoefficients c = c_coefficients(sd, spec, n, m, t);
  c.representation = Representation::Spin;
  if (m > n + 1) c.jnm = 0.0;
  return c;
}

XStateCoefficients coefficients(Representation rep, const SpectralData& sd, const ChainSpec& spec,
                                int n, int m, double t) {
  switch (rep) {
    case Representation::BetaFermion: return beta_coefficients(sd, spec, n, m, t);
    case Representation::CFermion: return c_coefficients(sd, spec, n, m, t);
    case Representation::Spin: return spin_coefficients(sd, spec, n, m, t);
  }
  throw std::invalid_argument("unknown representation");
}

TwoNodeDensityMatrix build_density_matrix(const XStateCoefficients& c) {
  if (c.jnn < -kBoundTolerance || c.jmm < -kBoundTolerance) {
    throw std::invalid_argument("negative occupation coefficient");
  }
  if (c.jnn + c.jmm > 0.5 + kBoundTolerance) {
    throw std::invalid_argument("jnn + jmm exceeds 1/2: not a density matrix");
  }
  TwoNodeDensityMatrix rho = TwoNodeDensityMatrix::Zero();
  rho(0, 0) = c.j00 + c.jnn + c.jmm;
  rho(1, 1) = c.j00 + c.jmm;
  rho(2, 2) = c.j00 + c.jnn;
  rho(3, 3) = c.j00;
  rho(2, 1) = c.jnm;
  rho(1, 2) = std::conj(c.jnm);
  return rho;
}

NodePair reflected_pair(NodePair pair, int n_sites) {
  const int a = n_sites + 1 - pair.n;
  const int b = n_sites + 1 - pair.m;
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace xychain
