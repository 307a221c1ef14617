#include "xychain/chain_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace xychain {

void ChainSpec::validate() const {
  if (n_sites < 2) {
    throw std::invalid_argument("chain needs at least 2 sites, got " + std::to_string(n_sites));
  }
  if (!(coupling > 0.0) || !std::isfinite(coupling)) {
    throw std::invalid_argument("coupling must be finite and positive");
  }
  if (!(larmor >= 0.0) || !std::isfinite(larmor)) {
    throw std::invalid_argument("larmor frequency must be finite and non-negative");
  }
  if (!(inverse_temperature >= 0.0)) {
    throw std::invalid_argument("inverse temperature must be >= 0 (or +inf)");
  }
  if (polarized_node < 1 || polarized_node > n_sites) {
    throw std::invalid_argument("polarized node " + std::to_string(polarized_node) +
                                " outside [1, " + std::to_string(n_sites) + "]");
  }
}

double ChainSpec::polarization() const {
  if (std::isinf(inverse_temperature)) return 1.0;
  return std::tanh(inverse_temperature / 2.0);
}

SpectralData::SpectralData(const ChainSpec& spec)
    : n_(spec.n_sites), coupling_(spec.coupling), larmor_(spec.larmor) {
  spec.validate();
  const double norm = std::sqrt(2.0 / (n_ + 1));
  wavenumbers_.resize(n_);
  dispersion_.resize(n_);
  amplitudes_.resize(static_cast<std::size_t>(n_) * n_);
  for (int n = 1; n <= n_; ++n) {
    const double k = std::numbers::pi * n / (n_ + 1);
    wavenumbers_[n - 1] = k;
    dispersion_[n - 1] = coupling_ * std::cos(k);
    for (int j = 1; j <= n_; ++j) {
      amplitudes_[static_cast<std::size_t>(n - 1) * n_ + (j - 1)] = norm * std::sin(k * j);
    }
  }
}

void SpectralData::check_mode(int mode) const {
  if (mode < 1 || mode > n_) {
    throw std::out_of_range("mode index " + std::to_string(mode) + " outside [1, " +
                            std::to_string(n_) + "]");
  }
}

void SpectralData::check_site(int site) const {
  if (site < 1 || site > n_) {
    throw std::out_of_range("site index " + std::to_string(site) + " outside [1, " +
                            std::to_string(n_) + "]");
  }
}

double SpectralData::wavenumber(int mode) const {
  check_mode(mode);
  return wavenumbers_[mode - 1];
}

double SpectralData::dispersion(int mode) const {
  check_mode(mode);
  return dispersion_[mode - 1];
}

double SpectralData::energy(int mode) const { return dispersion(mode) + larmor_; }

double SpectralData::amplitude(int mode, int site) const {
  check_mode(mode);
  check_site(site);
  return amplitudes_[static_cast<std::size_t>(mode - 1) * n_ + (site - 1)];
}

SpectralData build_spectral(const ChainSpec& spec) { return SpectralData(spec); }

// The Larmor term only contributes a global phase exp(-i omega0 t) to every U_{nj}.
// All correlation quantities use |U|^2 or U_n conj(U_m), so we drop it and keep
// the outputs exactly independent of omega0.
std::complex<double> transition_amplitude(const SpectralData& sd, int n, int j, double t) {
  sd.check_site(n);
  sd.check_site(j);
  if (t == 0.0) return n == j ? 1.0 : 0.0;
  std::complex<double> sum = 0.0;
  for (int k = 1; k <= sd.size(); ++k) {
    sum += std::polar(1.0, -sd.dispersion(k) * t) * sd.amplitude(k, j) * sd.amplitude(k, n);
  }
  return sum;
}

std::vector<std::complex<double>> propagator_column(const SpectralData& sd, int j, double t) {
  sd.check_site(j);
  const int size = sd.size();
  std::vector<std::complex<double>> column(size, 0.0);
  if (t == 0.0) {
    column[j - 1] = 1.0;
    return column;
  }
  for (int k = 1; k <= size; ++k) {
    const std::complex<double> weight = std::polar(1.0, -sd.dispersion(k) * t) * sd.amplitude(k, j);
    for (int n = 1; n <= size; ++n) column[n - 1] += weight * sd.amplitude(k, n);
  }
  return column;
}

double magnetization_ratio(const SpectralData& sd, int p, int j, double t) {
  return std::norm(transition_amplitude(sd, p, j, t));
}

}  // namespace xychain
