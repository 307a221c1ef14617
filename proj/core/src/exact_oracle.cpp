#include "xychain/exact_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace xychain::oracle {

namespace {

void check_size(int n_sites) {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw std::invalid_argument("oracle supports 1 <= N <= " + std::to_string(kMaxSites) +
                                ", got " + std::to_string(n_sites));
  }
}

void check_site(int site, int n_sites) {
  if (site < 1 || site > n_sites) {
    throw std::out_of_range("site " + std::to_string(site) + " outside [1, " +
                            std::to_string(n_sites) + "]");
  }
}

int bit_shift(int site, int n_sites) { return n_sites - site; }

// Bit value 0 is spin up.
double spin_z(int state, int site, int n_sites) {
  return ((state >> bit_shift(site, n_sites)) & 1) == 0 ? 0.5 : -0.5;
}

void check_fermion(const RealMatrix& b, const char* label) {
  const RealMatrix id = RealMatrix::Identity(b.rows(), b.cols());
  const double anti = (b * b.transpose() + b.transpose() * b - id).cwiseAbs().maxCoeff();
  const double square = (b * b).cwiseAbs().maxCoeff();
  if (anti > 1e-10 || square > 1e-10) {
    throw std::invalid_argument(std::string("operator ") + label + " is not fermionic");
  }
}

}  // namespace

RealMatrix spin_operator(int site, SpinComponent component, int n_sites) {
  check_size(n_sites);
  check_site(site, n_sites);
  const int dim = 1 << n_sites;
  const int mask = 1 << bit_shift(site, n_sites);
  RealMatrix op = RealMatrix::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    const bool up = (s & mask) == 0;
    switch (component) {
      case SpinComponent::Z: op(s, s) = up ? 0.5 : -0.5; break;
      case SpinComponent::Raise:
        if (!up) op(s & ~mask, s) = 1.0;
        break;
      case SpinComponent::Lower:
        if (up) op(s | mask, s) = 1.0;
        break;
    }
  }
  return op;
}

RealMatrix build_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.n_sites;
  check_size(n);
  const int dim = 1 << n;
  RealMatrix h = RealMatrix::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    double zeeman = 0.0;
    for (int site = 1; site <= n; ++site) zeeman += spin_z(s, site, n);
    h(s, s) = spec.larmor * zeeman;
    // I_x I_x + I_y I_y = (I^+ I^- + I^- I^+) / 2 flips an antiparallel neighbour pair.
    for (int site = 1; site < n; ++site) {
      const int a = 1 << bit_shift(site, n);
      const int b = 1 << bit_shift(site + 1, n);
      const bool antiparallel = ((s & a) == 0) != ((s & b) == 0);
      if (antiparallel) h(s ^ a ^ b, s) += spec.coupling / 2.0;
    }
  }
  return h;
}

ComplexMatrix initial_state(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.n_sites;
  check_size(n);
  const int dim = 1 << n;
  const double pol = spec.polarization();
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    rho(s, s) = (1.0 + 2.0 * pol * spin_z(s, spec.polarized_node, n)) / dim;
  }
  return rho;
}

RealMatrix jw_c_operator(int site, int n_sites) {
  check_size(n_sites);
  check_site(site, n_sites);
  RealMatrix op = spin_operator(site, SpinComponent::Lower, n_sites);
  for (int l = 1; l < site; ++l) {
    // -2 I_lz is a diagonal +-1 sign.
    const RealMatrix string = -2.0 * spin_operator(l, SpinComponent::Z, n_sites);
    op = string * op;
  }
  return op;
}

RealMatrix beta_mode_operator(int mode, const SpectralData& sd) {
  sd.check_mode(mode);
  const int n = sd.size();
  check_size(n);
  const int dim = 1 << n;
  RealMatrix op = RealMatrix::Zero(dim, dim);
  for (int site = 1; site <= n; ++site) {
    op += sd.amplitude(mode, site) * jw_c_operator(site, n);
  }
  return op;
}

OracleState::OracleState(const ChainSpec& spec)
    : spec_(spec), hamiltonian_(build_hamiltonian(spec)), rho0_(initial_state(spec)) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(hamiltonian_);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("Hamiltonian diagonalization failed");
  }
  energies_ = eig.eigenvalues();
  eigenvectors_ = eig.eigenvectors();
  const ComplexMatrix v = eigenvectors_.cast<std::complex<double>>();
  rho0_eigenbasis_ = v.adjoint() * rho0_ * v;
}

ComplexMatrix OracleState::evolve(double t) const {
  if (t == 0.0) return rho0_;
  const int dim = dimension();
  Eigen::VectorXcd phase(dim);
  for (int i = 0; i < dim; ++i) phase(i) = std::polar(1.0, -energies_(i) * t);
  // In the eigenbasis: rho_ab(t) = exp(-i(E_a - E_b)t) rho_ab(0).
  const ComplexMatrix rotated = phase.asDiagonal() * rho0_eigenbasis_ * phase.conjugate().asDiagonal();
  const ComplexMatrix v = eigenvectors_.cast<std::complex<double>>();
  return v * rotated * v.adjoint();
}

std::complex<double> expectation(const ComplexMatrix& rho, const RealMatrix& op) {
  // Tr(rho op) = sum_ij rho_ij op_ji
  return (rho.array() * op.transpose().cast<std::complex<double>>().array()).sum();
}

TwoNodeDensityMatrix partial_trace_pair(const ComplexMatrix& rho, int n, int m) {
  const int dim = static_cast<int>(rho.rows());
  int n_sites = 0;
  while ((1 << n_sites) < dim) ++n_sites;
  if ((1 << n_sites) != dim || rho.cols() != dim) {
    throw std::invalid_argument("density matrix dimension is not 2^N");
  }
  check_site(n, n_sites);
  check_site(m, n_sites);
  if (n >= m) throw std::out_of_range("pair must satisfy n < m");

  const int mask_n = 1 << bit_shift(n, n_sites);
  const int mask_m = 1 << bit_shift(m, n_sites);
  // Reduced index 2 * bit_m + bit_n matches the TwoNodeDensityMatrix ordering.
  auto embed = [&](int env, int local) {
    int s = env;
    if (local & 1) s |= mask_n;
    if (local & 2) s |= mask_m;
    return s;
  };

  TwoNodeDensityMatrix reduced = TwoNodeDensityMatrix::Zero();
  for (int env = 0; env < dim; ++env) {
    if (env & (mask_n | mask_m)) continue;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) reduced(a, b) += rho(embed(env, a), embed(env, b));
    }
  }
  return reduced;
}

PairObservables pair_observables(const RealMatrix& mode_n, const RealMatrix& mode_m) {
  if (mode_n.rows() != mode_m.rows() || mode_n.rows() != mode_n.cols() ||
      mode_m.rows() != mode_m.cols()) {
    throw std::invalid_argument("mode operators must be square and of equal size");
  }
  check_fermion(mode_n, "b_n");
  check_fermion(mode_m, "b_m");
  const double cross = (mode_n * mode_m.transpose() + mode_m.transpose() * mode_n).cwiseAbs().maxCoeff();
  if (cross > 1e-10) throw std::invalid_argument("modes n and m do not anticommute");

  PairObservables ops;
  ops.occupation_n = mode_n.transpose() * mode_n;
  ops.occupation_m = mode_m.transpose() * mode_m;
  ops.occupation_nm = ops.occupation_n * ops.occupation_m;
  ops.hopping = mode_m.transpose() * mode_n;
  return ops;
}

TwoNodeDensityMatrix mode_pair_reduced(const ComplexMatrix& rho, const PairObservables& ops) {
  const double occ_n = expectation(rho, ops.occupation_n).real();
  const double occ_m = expectation(rho, ops.occupation_m).real();
  const double occ_nm = expectation(rho, ops.occupation_nm).real();
  const std::complex<double> hop = expectation(rho, ops.hopping);
  const double norm = rho.trace().real();

  TwoNodeDensityMatrix reduced = TwoNodeDensityMatrix::Zero();
  reduced(0, 0) = occ_nm;
  reduced(1, 1) = occ_m - occ_nm;
  reduced(2, 2) = occ_n - occ_nm;
  reduced(3, 3) = norm - occ_n - occ_m + occ_nm;
  reduced(2, 1) = hop;
  reduced(1, 2) = std::conj(hop);
  return reduced;
}

TwoNodeDensityMatrix mode_pair_reduced(const ComplexMatrix& rho, const RealMatrix& mode_n,
                                       const RealMatrix& mode_m) {
  return mode_pair_reduced(rho, pair_observables(mode_n, mode_m));
}

}  // namespace xychain::oracle
