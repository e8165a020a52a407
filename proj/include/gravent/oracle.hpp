#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gravent/bipartition.hpp"
#include "gravent/geometry.hpp"
#include "gravent/phase_matrix.hpp"

/// Brute-force ground truth: explicit 2^N amplitudes, partial traces and
/// textbook entanglement measures. Independent of everything in closedform.
namespace gravent::oracle {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultMaxQubits = 24;

/// Amplitude i holds the branch configuration whose bit p is j_p of mass p.
class StateVector {
 public:
  StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

  std::size_t n_qubits() const noexcept { return n_; }
  std::span<const Complex> amplitudes() const noexcept { return amp_; }
  Complex operator[](std::size_t i) const { return amp_[i]; }
  double norm_squared() const noexcept;

 private:
  std::size_t n_;
  std::vector<Complex> amp_;
};

/// Hermitian unit-trace matrix on 2^k dimensions. Local bit i refers to the
/// i-th lowest mass of the subset it was reduced onto.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd matrix);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t a, std::size_t b) const { return m_(a, b); }

 private:
  Eigen::MatrixXcd m_;
};

StateVector evolve(const PairPhaseTable& table, double t,
                   std::size_t max_qubits = kDefaultMaxQubits);
StateVector evolve(const PhaseMatrix& phases, double t,
                   std::size_t max_qubits = kDefaultMaxQubits);

/// Partial trace onto `subset` by bit gather over the complement.
DensityMatrix reduced_density(const StateVector& state, MassMask subset);

double purity(const DensityMatrix& rho);

/// sqrt(2 (1 - Tr rho^2)) of the reduction onto the smaller side of the cut.
double iconcurrence_oracle(const StateVector& state, const Bipartition& bip);

/// Wootters concurrence of a two-qubit density matrix.
double wootters_concurrence(const DensityMatrix& rho);

/// Concurrence of the reduction onto masses p and q (0-based).
double pair_concurrence(const StateVector& state, std::size_t p, std::size_t q);

/// 3-tangle as the monogamy residual C_{p|qr}^2 - C_pq^2 - C_pr^2 (N = 3).
double three_tangle_residual(const StateVector& state, std::size_t p);

/// Q_k from the averaged purity of all k-mass reductions.
double qk_from_purities(const StateVector& state, std::size_t k);

}  // namespace gravent::oracle
