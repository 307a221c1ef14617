#pragma once

#include <array>

#include "xychain/xstate.hpp"

namespace xychain {

/// One row of results for a node pair at one instant.
///
/// Subsystem A is node m (entropy from jmm), subsystem B is node n (entropy from jnn).
/// discord_B is measured on B, discord_A on A, and discord is the smaller of the two.
struct CorrelationRecord {
  double time = 0.0;
  NodePair pair;
  Representation representation = Representation::BetaFermion;
  double concurrence = 0.0;
  double discord = 0.0;
  double discord_A = 0.0;
  double discord_B = 0.0;
  double classical_B = 0.0;
  double mutual_information = 0.0;
  double geometric_discord = 0.0;
};

// All functions below expect a saturated coherence, |jnm|^2 = jnn jmm, or a diagonal
// matrix (jnm = 0, the spin basis for remote nodes). The diagonal case is a classical
// state: zero discord and concurrence, classical correlation equal to the mutual
// information. Anything else throws std::invalid_argument.

enum class MeasuredSide { A, B };

/// x log2 x with the 0 log 0 = 0 convention; arguments in [-1e-12, 0) are treated as 0.
double xlog2x(double x);

/// Concurrence of the X-state in closed form.
double concurrence_closed_form(const XStateCoefficients& c);

/// Square roots of the eigenvalues of rho * rho~, rho~ the spin-flipped matrix, in
/// descending order.
std::array<double, 4> spin_flip_roots(const TwoNodeDensityMatrix& rho);

/// Closed-form counterpart of spin_flip_roots for the X-state, descending.
std::array<double, 4> spin_flip_roots(const XStateCoefficients& c);

/// Wootters concurrence from a general 4x4 density matrix. Throws std::invalid_argument
/// if rho has an eigenvalue below -1e-10.
double wootters_concurrence(const TwoNodeDensityMatrix& rho);

struct SubsystemEntropies {
  double a = 0.0;  // node m
  double b = 0.0;  // node n
};

/// von Neumann entropies (bits) of the single-node marginals.
SubsystemEntropies subsystem_entropies(const XStateCoefficients& c);

/// Eigenvalues of the X-state: two at 1/4 - (jnn+jmm)/2, two at 1/4 + (jnn+jmm)/2.
std::array<double, 4> density_eigenvalues(const XStateCoefficients& c);

double mutual_information(const XStateCoefficients& c);

/// Classical correlation for projective measurements on B, optimum at eta = 0.
double classical_correlation_B(const XStateCoefficients& c);

/// Averaged conditional entropy p0 S0 + p1 S1 of the one-parameter measurement family,
/// eta in [0, 1]. Nondecreasing in eta. Throws std::domain_error outside [0, 1].
double measurement_objective(const XStateCoefficients& c, double eta);

double discord_one_sided(const XStateCoefficients& c, MeasuredSide side);

/// min(discord_A, discord_B).
double discord(const XStateCoefficients& c);

/// Purity-based geometric discord, (4/3)(jnn + jmm)^2, bounded by 1/3.
double geometric_discord(const XStateCoefficients& c);

/// Plateau value of the beta-representation discord for odd mode pairs at even
/// separation when the middle node (N+1)/2 of an odd chain is polarized.
/// Requires odd N >= 5; throws std::invalid_argument otherwise.
double middle_node_q(double inverse_temperature, int n_sites);

/// Every correlation measure for one coefficient set.
CorrelationRecord evaluate(const XStateCoefficients& c);

}  // namespace xychain
