#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "xychain/chain_model.hpp"

namespace xychain {

/// Basis in which the two-node reduced density matrix is written.
enum class Representation { BetaFermion, CFermion, Spin };

/// "beta", "c" or "spin".
std::string_view to_string(Representation rep);
/// Inverse of to_string; throws std::invalid_argument on unknown names.
Representation parse_representation(std::string_view name);

struct NodePair {
  int n = 1;
  int m = 2;

  friend bool operator==(const NodePair&, const NodePair&) = default;
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

/// The four numbers that fix a reduced two-node X-matrix.
///
/// Laws shared by all three representations:
///   4 j00 + 2 (jnn + jmm) = 1,  |jnm|^2 = jnn jmm,  jnn, jmm >= 0,  jnn + jmm <= 1/2.
struct XStateCoefficients {
  double j00 = 0.25;
  double jnn = 0.0;
  double jmm = 0.0;
  std::complex<double> jnm = 0.0;
  Representation representation = Representation::BetaFermion;
  NodePair pair;
  double time = 0.0;
};

/// 4x4 reduced density matrix, ordered as
///   0: both nodes occupied (spin up), 1: only m occupied, 2: only n occupied, 3: neither.
/// Diagonal: j00+jnn+jmm, j00+jmm, j00+jnn, j00. The coherence <b_m^+ b_n> = jnm sits at
/// (2, 1) and its conjugate at (1, 2), which is what a direct partial trace of the full
/// chain state produces in this ordering.
using TwoNodeDensityMatrix = Eigen::Matrix4cd;

/// Largest violation of the coefficient laws for one set. The coherence law is
/// |jnm|^2 = jnn jmm, except for spin-basis pairs with m > n+1 whose law is jnm = 0.
struct CoefficientResidual {
  double trace = 0.0;         // |4 j00 + 2(jnn + jmm) - 1|
  double modulus = 0.0;       // deviation from the representation's coherence law
  double bound_excess = 0.0;  // max(0, jnn + jmm - 1/2, -jnn, -jmm)

  double worst() const;
};

CoefficientResidual coefficient_residual(const XStateCoefficients& c);

/// Eigenmode (beta-fermion) representation; n < m are mode indices.
/// Only the phase of jnm depends on t.
XStateCoefficients beta_coefficients(const SpectralData& sd, const ChainSpec& spec, int n, int m,
                                     double t);

/// Site (c-fermion) representation; n < m are site indices.
XStateCoefficients c_coefficients(const SpectralData& sd, const ChainSpec& spec, int n, int m,
                                  double t);

/// Spin (I_z eigenbasis) representation. Equal to the c-representation for nearest
/// neighbours; for m > n+1 the Jordan-Wigner string removes the coherence.
XStateCoefficients spin_coefficients(const SpectralData& sd, const ChainSpec& spec, int n, int m,
                                     double t);

XStateCoefficients coefficients(Representation rep, const SpectralData& sd, const ChainSpec& spec,
                                int n, int m, double t);

/// Throws std::invalid_argument if jnn or jmm is negative or jnn + jmm exceeds 1/2
/// beyond 1e-12.
TwoNodeDensityMatrix build_density_matrix(const XStateCoefficients& c);

/// Pair related to (n, m) by the reflection n -> N+1-n, normalised so first < second.
NodePair reflected_pair(NodePair pair, int n_sites);

}  // namespace xychain
