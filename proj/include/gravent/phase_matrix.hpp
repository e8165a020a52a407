#pragma once

#include <cstddef>
#include <vector>

namespace gravent {

/// Symmetric N x N matrix of entangling phases (rad/s) with zero diagonal.
///
/// Each entry is stored with an orientation sign: the raw combination
/// phi_01 + phi_10 - phi_00 - phi_11 of the pair. operator() returns the
/// entangling phase itself (the magnitude). The sign is irrelevant for any
/// single pair but the closed-form series over several masses on one side of
/// a cut needs the relative orientation, so it is kept here instead of being
/// discarded.
class PhaseMatrix {
 public:
  PhaseMatrix() = default;
  explicit PhaseMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {}

  /// Builds from nested rows. Rows must form a square, symmetric, finite
  /// matrix with a zero diagonal; negative entries are accepted as oriented
  /// phases.
  static PhaseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }

  /// Entangling phase |Phi_pq| >= 0.
  double operator()(std::size_t p, std::size_t q) const;
  /// Oriented phase; same magnitude as operator(), sign kept.
  double oriented(std::size_t p, std::size_t q) const;

  /// Sets both (p,q) and (q,p). p == q is rejected.
  void set(std::size_t p, std::size_t q, double oriented_value);

  /// Matrix of the (N-1)-mass system obtained by deleting mass `removed`.
  PhaseMatrix without(std::size_t removed) const;

  /// Relabels masses: result(p,q) = (*this)(order[p], order[q]).
  PhaseMatrix permuted(const std::vector<std::size_t>& order) const;

  std::vector<std::vector<double>> magnitudes() const;

  bool operator==(const PhaseMatrix&) const = default;

 private:
  std::size_t index(std::size_t p, std::size_t q) const;

  std::size_t n_ = 0;
  std::vector<double> values_;
};

}  // namespace gravent
