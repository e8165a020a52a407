#include "gravent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gravent/error.hpp"

namespace gravent::oracle {

namespace {

// Reduced-state eigenvalues below this are rank-deficiency noise. The
// reductions built here are exactly low-rank, and keeping 1e-16 noise would
// leak ~1e-8 into Wootters' square roots.
constexpr double kRankCutoff = 1e-12;

std::vector<std::size_t> scatter_table(MassMask mask, std::size_t n) {
  const std::vector<std::size_t> bits = members(mask, n);
  std::vector<std::size_t> table(std::size_t{1} << bits.size());
  for (std::size_t local = 0; local < table.size(); ++local) {
    std::size_t global = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (local >> i & 1U) global |= std::size_t{1} << bits[i];
    }
    table[local] = global;
  }
  return table;
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_(n_qubits), amp_(std::move(amplitudes)) {
  if (n_ >= 63 || amp_.size() != (std::size_t{1} << n_)) {
    throw Error(ErrorCode::InvalidArgument, "state vector needs 2^N amplitudes");
  }
}

double StateVector::norm_squared() const noexcept {
  double s = 0.0;
  for (const Complex& a : amp_) s += std::norm(a);
  return s;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix) : m_(std::move(matrix)) {
  const auto dim = static_cast<std::size_t>(m_.rows());
  if (m_.rows() != m_.cols() || dim == 0 || (dim & (dim - 1)) != 0) {
    throw Error(ErrorCode::InvalidArgument, "density matrix must be square with a power-of-two dimension");
  }
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "density matrix is not Hermitian");
  }
  if (std::abs(m_.trace() - Complex(1.0, 0.0)) > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "density matrix trace is not 1");
  }
}

StateVector evolve(const PairPhaseTable& table, double t, std::size_t max_qubits) {
  const std::size_t n = table.size();
  if (n > max_qubits) {
    throw Error(ErrorCode::TooManyQubits,
                "N = " + std::to_string(n) + " exceeds the oracle cap of " + std::to_string(max_qubits));
  }
  if (n < 1 || n >= 63) {
    throw Error(ErrorCode::InvalidArgument, "oracle needs at least one mass");
  }
  // accumulated phase rate of each branch configuration, built one mass at a
  // time: appending mass q adds phi_{j_p j_q} for every earlier p
  std::vector<double> rate(std::size_t{1} << n, 0.0);
  for (std::size_t q = 1; q < n; ++q) {
    std::vector<BranchQuad> quads(q);
    for (std::size_t p = 0; p < q; ++p) quads[p] = table.at(p, q);
    const std::size_t half = std::size_t{1} << q;
    for (std::size_t x = 0; x < half; ++x) {
      double add0 = 0.0;
      double add1 = 0.0;
      for (std::size_t p = 0; p < q; ++p) {
        const int jp = static_cast<int>(x >> p & 1U);
        add0 += quads[p][2 * jp];
        add1 += quads[p][2 * jp + 1];
      }
      rate[x | half] = rate[x] + add1;
      rate[x] += add0;
    }
  }
  const double norm = std::pow(2.0, -0.5 * static_cast<double>(n));
  std::vector<Complex> amp(rate.size());
  for (std::size_t i = 0; i < rate.size(); ++i) {
    amp[i] = std::polar(norm, rate[i] * t);
  }
  return StateVector(n, std::move(amp));
}

StateVector evolve(const PhaseMatrix& phases, double t, std::size_t max_qubits) {
  return evolve(PairPhaseTable::from_phase_matrix(phases), t, max_qubits);
}

DensityMatrix reduced_density(const StateVector& state, MassMask subset) {
  const std::size_t n = state.n_qubits();
  const MassMask all = full_mask(n);
  if (subset == 0) throw Error(ErrorCode::EmptySubset, "cannot reduce onto no masses");
  if (subset & ~all) throw Error(ErrorCode::InvalidArgument, "subset names masses beyond N");
  if (subset == all) throw Error(ErrorCode::FullSubset, "reduction onto all masses is not a partial trace");

  const std::vector<std::size_t> keep = scatter_table(subset, n);
  const std::vector<std::size_t> env = scatter_table(all & ~subset, n);
  Eigen::MatrixXcd a(keep.size(), env.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t e = 0; e < env.size(); ++e) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(e)) = state[keep[i] | env[e]];
    }
  }
  Eigen::MatrixXcd rho = a * a.adjoint();
  // exact Hermitian symmetry; the product is Hermitian up to rounding only
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

double purity(const DensityMatrix& rho) { return rho.matrix().cwiseAbs2().sum(); }

double iconcurrence_oracle(const StateVector& state, const Bipartition& bip) {
  if (state.n_qubits() != bip.n()) {
    throw Error(ErrorCode::InvalidBipartition, "bipartition and state disagree on N");
  }
  // complementary reductions of a pure state share their purity
  const double p = purity(reduced_density(state, bip.smaller_side()));
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - p)));
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw Error(ErrorCode::NotTwoQubit, "Wootters concurrence needs a 4x4 density matrix");
  }
  // lambda_i are the singular values of tau = V^T (sy x sy) V, where the
  // columns of V are the eigenvectors of rho scaled by sqrt(eigenvalue); this
  // equals the square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy)
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho.matrix());
  const Eigen::VectorXd& p = eig.eigenvalues();
  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) > kRankCutoff) kept.push_back(i);
  }
  Eigen::MatrixXcd v(4, static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    v.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(kept[c]) * std::sqrt(p(kept[c]));
  }
  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const Eigen::MatrixXcd tau = v.transpose() * flip * v;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(tau);
  const Eigen::VectorXd s = svd.singularValues();  // decreasing
  if (s.size() == 0) return 0.0;
  double c = s(0);
  for (Eigen::Index i = 1; i < s.size(); ++i) c -= s(i);
  return std::max(0.0, c);
}

double pair_concurrence(const StateVector& state, std::size_t p, std::size_t q) {
  const std::size_t n = state.n_qubits();
  if (p >= n || q >= n || p == q) {
    throw Error(ErrorCode::IndexError, "pair concurrence needs two distinct masses below N");
  }
  if (n == 2) {
    // the "reduction" onto both masses is the pure state itself
    Eigen::Map<const Eigen::Vector4cd> psi(state.amplitudes().data());
    return wootters_concurrence(DensityMatrix(psi * psi.adjoint()));
  }
  return wootters_concurrence(reduced_density(state, (MassMask{1} << p) | (MassMask{1} << q)));
}

double three_tangle_residual(const StateVector& state, std::size_t p) {
  if (state.n_qubits() != 3) {
    throw Error(ErrorCode::WrongArity, "3-tangle residual needs N = 3");
  }
  if (p >= 3) throw Error(ErrorCode::IndexError, "mass index out of range");
  const std::size_t q = (p + 1) % 3;
  const std::size_t r = (p + 2) % 3;
  const double c_p = iconcurrence_oracle(state, Bipartition(3, MassMask{1} << p));
  const double c_pq = pair_concurrence(state, p, q);
  const double c_pr = pair_concurrence(state, p, r);
  const double residual = c_p * c_p - c_pq * c_pq - c_pr * c_pr;
  if (residual < -1e-9) {
    throw Error(ErrorCode::NegativeResidual, "monogamy residual " + std::to_string(residual));
  }
  return std::max(0.0, residual);
}

double qk_from_purities(const StateVector& state, std::size_t k) {
  const std::size_t n = state.n_qubits();
  if (k < 1 || k > n / 2) {
    throw Error(ErrorCode::KOutOfRange,
                "k = " + std::to_string(k) + " outside 1.." + std::to_string(n / 2));
  }
  double sum = 0.0;
  std::size_t count = 0;
  for (MassMask subset : k_subsets(n, k)) {
    sum += purity(reduced_density(state, subset));
    ++count;
  }
  const double dk = std::ldexp(1.0, static_cast<int>(k));
  return dk / (dk - 1.0) * (1.0 - sum / static_cast<double>(count));
}

}  // namespace gravent::oracle
