#pragma once

#include <complex>
#include <vector>

namespace xychain {

/// Physical configuration of an open XY chain with a single polarized node.
///
/// Sites and modes are 1-based everywhere in the public API. Time is measured
/// in units of 1/coupling. The inverse temperature may be +infinity, in which
/// case the node polarization tanh(beta/2) is exactly 1.
struct ChainSpec {
  int n_sites = 2;
  double coupling = 1.0;
  double larmor = 0.0;
  double inverse_temperature = 0.0;
  int polarized_node = 1;

  /// Throws std::invalid_argument when any field is out of range.
  void validate() const;

  /// tanh(beta/2), in [0, 1].
  double polarization() const;
};

/// Closed-form single-particle solution of the XY chain.
///
/// Mode n has wavenumber k_n = pi n / (N+1), energy D cos(k_n) + omega0 and
/// site amplitudes g_n(j) = sqrt(2/(N+1)) sin(k_n j). Immutable once built.
class SpectralData {
 public:
  explicit SpectralData(const ChainSpec& spec);

  int size() const { return n_; }
  double coupling() const { return coupling_; }
  double larmor() const { return larmor_; }

  double wavenumber(int mode) const;
  double energy(int mode) const;
  /// Energy without the uniform Larmor offset, D cos(k_n).
  double dispersion(int mode) const;
  /// g_mode(site).
  double amplitude(int mode, int site) const;

  void check_mode(int mode) const;
  void check_site(int site) const;

 private:
  int n_;
  double coupling_;
  double larmor_;
  std::vector<double> wavenumbers_;
  std::vector<double> dispersion_;
  std::vector<double> amplitudes_;  // row-major [mode-1][site-1]
};

SpectralData build_spectral(const ChainSpec& spec);

/// Single-excitation propagator U_{n j}(t) = sum_k exp(-i eps_k t) g_k(j) g_k(n).
std::complex<double> transition_amplitude(const SpectralData& sd, int n, int j, double t);

/// U_{n j}(t) for every site n = 1..N at once (index n-1).
std::vector<std::complex<double>> propagator_column(const SpectralData& sd, int j, double t);

/// <I_pz>(t) / <I_jz>(0) = |U_{p j}(t)|^2; independent of beta.
double magnetization_ratio(const SpectralData& sd, int p, int j, double t);

}  // namespace xychain
