#pragma once

#include <cstddef>

#include "gravent/bipartition.hpp"
#include "gravent/phase_matrix.hpp"

/// Analytic entanglement measures of the gravitationally evolved product
/// state, written purely in terms of the entangling phases and time.
namespace gravent::closedform {

/// Radicands below -kRadicandTolerance are treated as bugs, not rounding.
inline constexpr double kRadicandTolerance = 1e-9;

/// cos^2(x) with the argument reduced mod 2pi once |x| exceeds 1e8.
double cos_sq(double x) noexcept;

/// |sin(Phi t / 2)|.
double concurrence_two_body(double phi, double t);

/// Concurrence across p|qr for N = 3 (0-based p).
double concurrence_three_body(const PhaseMatrix& phases, std::size_t p, double t);

struct SchmidtPair {
  double plus;
  double minus;
};

SchmidtPair schmidt_pair(const PhaseMatrix& phases, std::size_t p, double t);

/// Lambda(t) of the I-concurrence series, evaluated with the smaller part of
/// the cut as the k-mass side.
///
/// Terms are grouped by l = number of left masses with a nonzero sign; for
/// each l-subset a_1 < ... < a_l the first member carries +, the remaining
/// l-1 signs run over an (l-1)-bit counter. Each term is the product over
/// right-part masses b of cos^2((Phi_{a1 b} +- Phi_{a2 b} ...) t/2), using
/// oriented phases. There are 2^(l-1) C(k,l) terms of weight 2^-l.
double lambda_series(const PhaseMatrix& phases, const Bipartition& bip, double t);

/// I-concurrence sqrt((2^k-1)/2^(k-1) - 2^(2-k) Lambda(t)).
double iconcurrence(const PhaseMatrix& phases, const Bipartition& bip, double t);

/// Same as iconcurrence but from an already computed Lambda value.
double iconcurrence_from_lambda(std::size_t k, double lambda);

enum class TangleIndexing {
  /// One term per distinct value of each summand: apex p for the
  /// (Phi_pq + Phi_pr) sums, doubled pair {p,q} for 2Phi_pq + Phi_pr + Phi_qr.
  UnorderedThree,
  /// Sum over all 6 ordered triples (p,q,r) of distinct indices.
  OrderedSix,
};

const char* to_string(TangleIndexing indexing) noexcept;

/// Literal transcription of the published 3-tangle expression
/// (1/16)|f1 - 2 f2 + 8 f3|. Not a validated measure: it does not reproduce
/// the product-state or GHZ anchors under either indexing, so callers who
/// need the 3-tangle should use oracle::three_tangle_residual. See
/// tangle_check.hpp for the comparison report.
double three_tangle_published(const PhaseMatrix& phases, double t, TangleIndexing indexing);

/// Pairwise concurrence C_pq of the N = 3 state from the three one-vs-rest
/// tangles and a caller-supplied 3-tangle.
double pairwise_concurrence(const PhaseMatrix& phases, std::size_t p, std::size_t q, double t,
                            double tau123);

/// Generalised Meyer-Wallach measure Q_k, averaged over all C(N,k) k-subsets
/// (each N/2 split counted from both sides when k = N/2).
double meyer_wallach_qk(const PhaseMatrix& phases, std::size_t k, double t);

}  // namespace gravent::closedform
