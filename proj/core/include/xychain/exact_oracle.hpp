#pragma once

#include <Eigen/Dense>

#include "xychain/chain_model.hpp"
#include "xychain/xstate.hpp"

namespace xychain::oracle {

/// Largest chain the dense oracle accepts (4096 x 4096 matrices).
inline constexpr int kMaxSites = 12;

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

// Basis convention for the 2^N space: site 1 is the most significant bit, and a bit
// value of 0 means spin up (I_z = +1/2, fermion occupied).

enum class SpinComponent { Z, Raise, Lower };

/// Single-site spin-1/2 operator I_z, I^+ or I^- embedded in the 2^N space.
RealMatrix spin_operator(int site, SpinComponent component, int n_sites);

/// omega0 sum I_z + D sum (I_x I_x + I_y I_y) over nearest neighbours of the open chain.
/// Throws std::invalid_argument when N exceeds kMaxSites.
RealMatrix build_hamiltonian(const ChainSpec& spec);

/// (1 + 2 tanh(beta/2) I_jz) / 2^N as a (diagonal) dense matrix.
ComplexMatrix initial_state(const ChainSpec& spec);

/// Jordan-Wigner fermion c_l = (-2)^{l-1} I_1z ... I_{(l-1)z} I_l^-.
RealMatrix jw_c_operator(int site, int n_sites);

/// Eigenmode fermion beta_k = sum_j g_k(j) c_j.
RealMatrix beta_mode_operator(int mode, const SpectralData& sd);

/// Full-space Hamiltonian, its eigendecomposition and the initial state.
class OracleState {
 public:
  explicit OracleState(const ChainSpec& spec);

  int dimension() const { return static_cast<int>(hamiltonian_.rows()); }
  const ChainSpec& spec() const { return spec_; }
  const RealMatrix& hamiltonian() const { return hamiltonian_; }
  const Eigen::VectorXd& energies() const { return energies_; }
  const RealMatrix& eigenvectors() const { return eigenvectors_; }
  const ComplexMatrix& initial() const { return rho0_; }

  /// exp(-iHt) rho0 exp(iHt) through the stored eigendecomposition.
  ComplexMatrix evolve(double t) const;

 private:
  ChainSpec spec_;
  RealMatrix hamiltonian_;
  Eigen::VectorXd energies_;
  RealMatrix eigenvectors_;
  ComplexMatrix rho0_;
  ComplexMatrix rho0_eigenbasis_;
};

/// Tr(rho op).
std::complex<double> expectation(const ComplexMatrix& rho, const RealMatrix& op);

/// Reduced spin density matrix of sites n < m, in the TwoNodeDensityMatrix ordering.
TwoNodeDensityMatrix partial_trace_pair(const ComplexMatrix& rho, int n, int m);

/// Operator products whose expectations fix a two-mode reduced matrix.
struct PairObservables {
  RealMatrix occupation_n;   // b_n^+ b_n
  RealMatrix occupation_m;   // b_m^+ b_m
  RealMatrix occupation_nm;  // b_n^+ b_n b_m^+ b_m
  RealMatrix hopping;        // b_m^+ b_n
};

/// Checks {b, b^+} = 1, b^2 = 0 for both modes and {b_n, b_m^+} = 0 within 1e-10;
/// throws std::invalid_argument otherwise.
PairObservables pair_observables(const RealMatrix& mode_n, const RealMatrix& mode_m);

/// Two-mode reduced matrix from occupation and hopping expectations: diagonal entries
/// are projector expectations such as <(1 - N_n)(1 - N_m)>, and entry (2, 1) is <b_m^+ b_n>.
TwoNodeDensityMatrix mode_pair_reduced(const ComplexMatrix& rho, const PairObservables& ops);

TwoNodeDensityMatrix mode_pair_reduced(const ComplexMatrix& rho, const RealMatrix& mode_n,
                                       const RealMatrix& mode_m);

}  // namespace xychain::oracle
