#include "xychain/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace xychain {

namespace {

constexpr double kClampTolerance = 1e-12;

// Values slightly below zero from roundoff are snapped to zero; anything worse is a bug
// upstream.
double clamp_nonnegative(double x) {
  if (x >= 0.0) return x;
  if (x >= -kClampTolerance) return 0.0;
  throw std::domain_error("negative argument beyond roundoff tolerance");
}

double safe_sqrt(double x) { return std::sqrt(clamp_nonnegative(x)); }

// Binary entropy of the distribution {(1 - x)/2, (1 + x)/2}, x in [-1, 1].
double binary_entropy_centered(double x) {
  return -xlog2x((1.0 - x) / 2.0) - xlog2x((1.0 + x) / 2.0);
}

// Conditional-entropy partner term sqrt(jmm (jmm + jnn)) shared by the B-side formulas.
double conditional_radius(double jnn, double jmm) { return safe_sqrt(jmm * (jmm + jnn)); }

// The closed forms hold for coherences saturating |jnm|^2 = jnn jmm. The only other
// shape produced here is the diagonal spin-basis matrix of remote nodes (jnm = 0),
// which is a classical state.
enum class Shape { Saturated, Diagonal };

Shape classify(const XStateCoefficients& c) {
  if (std::abs(std::norm(c.jnm) - c.jnn * c.jmm) <= kClampTolerance) return Shape::Saturated;
  if (c.jnm == 0.0) return Shape::Diagonal;
  throw std::invalid_argument("coherence is neither saturated (|jnm|^2 = jnn jmm) nor zero");
}

double discord_measured_on_second(double jnn, double jmm) {
  const double s = conditional_radius(jnn, jmm);
  const double total = jnn + jmm;
  const double sum = xlog2x(1.0 - 2.0 * jnn) + xlog2x(1.0 + 2.0 * jnn) -
                     xlog2x(1.0 - 2.0 * total) - xlog2x(1.0 + 2.0 * total) +
                     xlog2x(1.0 - 2.0 * s) + xlog2x(1.0 + 2.0 * s);
  return std::max(0.0, -0.5 * sum);
}

}  // namespace

double xlog2x(double x) {
  x = clamp_nonnegative(x);
  if (x == 0.0) return 0.0;
  return x * std::log2(x);
}

double concurrence_closed_form(const XStateCoefficients& c) {
  if (classify(c) == Shape::Diagonal) return 0.0;
  const double total = c.jnn + c.jmm;
  const double value =
      2.0 * safe_sqrt(c.jmm * c.jnn) - 0.5 * safe_sqrt(1.0 - 4.0 * total * total);
  return std::max(0.0, value);
}

std::array<double, 4> spin_flip_roots(const XStateCoefficients& c) {
  const double diff = c.jmm - c.jnn;
  const double total = c.jmm + c.jnn;
  const double base = 0.25 * safe_sqrt(1.0 - 4.0 * diff * diff);
  const double cross = classify(c) == Shape::Diagonal ? 0.0 : safe_sqrt(c.jmm * c.jnn);
  const double corner = 0.25 * safe_sqrt(1.0 - 4.0 * total * total);
  std::array<double, 4> roots{base + cross, std::max(0.0, base - cross), corner, corner};
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

// Uses sqrt(rho) rho~ sqrt(rho), which is Hermitian and shares its spectrum with rho rho~.
std::array<double, 4> spin_flip_roots(const TwoNodeDensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> rho_eig(rho);
  const Eigen::Vector4d rho_vals = rho_eig.eigenvalues();
  if (rho_vals.minCoeff() < -1e-10) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
  const Eigen::Vector4cd root_vals = rho_vals.cwiseMax(0.0).cwiseSqrt().cast<std::complex<double>>();
  const Eigen::Matrix4cd sqrt_rho =
      rho_eig.eigenvectors() * root_vals.asDiagonal() * rho_eig.eigenvectors().adjoint();

  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  // sigma_y (x) sigma_y is real: antidiagonal (-1, 1, 1, -1).
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Eigen::Matrix4cd flipped = yy * rho.conjugate() * yy;
  Eigen::Matrix4cd product = sqrt_rho * flipped * sqrt_rho;
  product = (0.5 * (product + product.adjoint())).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> prod_eig(product, Eigen::EigenvaluesOnly);
  std::array<double, 4> roots{};
  for (int i = 0; i < 4; ++i) roots[i] = std::sqrt(std::max(0.0, prod_eig.eigenvalues()(i)));
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

double wootters_concurrence(const TwoNodeDensityMatrix& rho) {
  const auto roots = spin_flip_roots(rho);
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

SubsystemEntropies subsystem_entropies(const XStateCoefficients& c) {
  return {binary_entropy_centered(2.0 * c.jmm), binary_entropy_centered(2.0 * c.jnn)};
}

std::array<double, 4> density_eigenvalues(const XStateCoefficients& c) {
  if (classify(c) == Shape::Diagonal) {
    return {c.j00 + c.jnn + c.jmm, c.j00 + c.jmm, c.j00 + c.jnn, c.j00};
  }
  const double total = c.jnn + c.jmm;
  const double low = 0.25 * (1.0 - 2.0 * total);
  const double high = 0.25 * (1.0 + 2.0 * total);
  return {low, low, high, high};
}

double mutual_information(const XStateCoefficients& c) {
  const auto entropies = subsystem_entropies(c);
  double value = entropies.a + entropies.b;
  for (double lambda : density_eigenvalues(c)) value += xlog2x(lambda);
  return std::max(0.0, value);
}

// Same expression as the log-ratio closed form, regrouped as x log2 x terms so the
// saturated points jmm = 1/2 and 2 sqrt(jmm (jmm + jnn)) = 1 evaluate without 0/0.
double classical_correlation_B(const XStateCoefficients& c) {
  if (classify(c) == Shape::Diagonal) return mutual_information(c);
  const double s = conditional_radius(c.jnn, c.jmm);
  const double value = 0.5 * (xlog2x(1.0 + 2.0 * s) + xlog2x(1.0 - 2.0 * s) -
                              xlog2x(1.0 + 2.0 * c.jmm) - xlog2x(1.0 - 2.0 * c.jmm));
  return std::max(0.0, value);
}

double measurement_objective(const XStateCoefficients& c, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::domain_error("measurement parameter eta must lie in [0, 1]");
  }
  double radius = 0.0;
  if (classify(c) == Shape::Saturated) {
    radius = 2.0 * safe_sqrt(c.jmm * (c.jmm - (eta * eta - 1.0) * c.jnn));
  } else {
    radius = 2.0 * c.jmm;
  }
  const double shift = 2.0 * eta * c.jnn;
  double value = 0.0;
  for (double sign : {1.0, -1.0}) {
    const double weight = 1.0 + sign * shift;
    const double p = weight / 2.0;
    if (p <= 0.0) continue;
    const double theta = std::min(1.0, radius / weight);
    value += p * binary_entropy_centered(theta);
  }
  return value;
}

double discord_one_sided(const XStateCoefficients& c, MeasuredSide side) {
  if (classify(c) == Shape::Diagonal) return 0.0;
  return side == MeasuredSide::B ? discord_measured_on_second(c.jnn, c.jmm)
                                 : discord_measured_on_second(c.jmm, c.jnn);
}

double discord(const XStateCoefficients& c) {
  return std::min(discord_one_sided(c, MeasuredSide::A), discord_one_sided(c, MeasuredSide::B));
}

double geometric_discord(const XStateCoefficients& c) {
  if (classify(c) == Shape::Diagonal) {
    double purity = 0.0;
    for (double lambda : density_eigenvalues(c)) purity += lambda * lambda;
    return (4.0 * purity - 1.0) / 3.0;
  }
  const double total = c.jnn + c.jmm;
  return 4.0 / 3.0 * total * total;
}

double middle_node_q(double inverse_temperature, int n_sites) {
  if (n_sites < 5 || n_sites % 2 == 0) {
    throw std::invalid_argument("middle-node plateau needs an odd chain with N >= 5");
  }
  if (!(inverse_temperature >= 0.0)) {
    throw std::invalid_argument("inverse temperature must be >= 0");
  }
  const double tau = std::isinf(inverse_temperature) ? 1.0 : std::tanh(inverse_temperature / 2.0);
  const double m = n_sites + 1.0;
  const double m2 = m * m;
  const double two_tau = 2.0 * tau;
  const double four_tau = 4.0 * tau;
  const double root2_tau = std::sqrt(2.0) * tau;

  const double first = 0.5 * std::log2((m2 - four_tau * four_tau) * m2 /
                                       ((m2 - two_tau * two_tau) * (m2 - 2.0 * two_tau * two_tau)));
  const double second =
      tau / m *
      std::log2((m + four_tau) * (m + four_tau) * (m - two_tau) /
                ((m - four_tau) * (m - four_tau) * (m + two_tau)));
  const double third = root2_tau / m * std::log2((m - 2.0 * root2_tau) / (m + 2.0 * root2_tau));
  return first + second + third;
}

CorrelationRecord evaluate(const XStateCoefficients& c) {
  CorrelationRecord r;
  r.time = c.time;
  r.pair = c.pair;
  r.representation = c.representation;
  r.concurrence = concurrence_closed_form(c);
  r.discord_A = discord_one_sided(c, MeasuredSide::A);
  r.discord_B = discord_one_sided(c, MeasuredSide::B);
  r.discord = std::min(r.discord_A, r.discord_B);
  r.classical_B = classical_correlation_B(c);
  r.mutual_information = mutual_information(c);
  r.geometric_discord = geometric_discord(c);
  return r;
}

}  // namespace xychain
