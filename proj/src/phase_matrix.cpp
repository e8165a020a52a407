#include "gravent/phase_matrix.hpp"

#include <cmath>
#include <string>

#include "gravent/error.hpp"

namespace gravent {

PhaseMatrix PhaseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  PhaseMatrix m(n);
  for (std::size_t p = 0; p < n; ++p) {
    if (rows[p].size() != n) {
      throw Error(ErrorCode::InvalidArgument,
                  "phase matrix row " + std::to_string(p + 1) + " has " +
                      std::to_string(rows[p].size()) + " entries, expected " + std::to_string(n));
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (rows[p][p] != 0.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "phase matrix diagonal entry " + std::to_string(p + 1) + " must be 0");
    }
    for (std::size_t q = p + 1; q < n; ++q) {
      const double a = rows[p][q];
      const double b = rows[q][p];
      if (!std::isfinite(a) || !std::isfinite(b)) {
        throw Error(ErrorCode::InvalidArgument, "phase matrix entries must be finite");
      }
      const double scale = std::max(std::abs(a), std::abs(b));
      if (std::abs(a - b) > 1e-12 * scale) {
        throw Error(ErrorCode::InvalidArgument,
                    "phase matrix not symmetric at (" + std::to_string(p + 1) + "," +
                        std::to_string(q + 1) + ")");
      }
      m.set(p, q, a);
    }
  }
  return m;
}

std::size_t PhaseMatrix::index(std::size_t p, std::size_t q) const {
  if (p >= n_ || q >= n_) {
    throw Error(ErrorCode::IndexError, "mass index out of range");
  }
  return p * n_ + q;
}

double PhaseMatrix::operator()(std::size_t p, std::size_t q) const {
  return std::abs(values_[index(p, q)]);
}

double PhaseMatrix::oriented(std::size_t p, std::size_t q) const { return values_[index(p, q)]; }

void PhaseMatrix::set(std::size_t p, std::size_t q, double oriented_value) {
  if (p == q) {
    throw Error(ErrorCode::InvalidArgument, "entangling phase of a mass with itself");
  }
  if (!std::isfinite(oriented_value)) {
    throw Error(ErrorCode::InvalidArgument, "entangling phase must be finite");
  }
  values_[index(p, q)] = oriented_value;
  values_[index(q, p)] = oriented_value;
}

PhaseMatrix PhaseMatrix::without(std::size_t removed) const {
  if (removed >= n_) {
    throw Error(ErrorCode::IndexError, "removed mass index out of range");
  }
  PhaseMatrix out(n_ - 1);
  for (std::size_t p = 0, a = 0; p < n_; ++p) {
    if (p == removed) continue;
    for (std::size_t q = p + 1, b = a + 1; q < n_; ++q) {
      if (q == removed) continue;
      out.set(a, b, oriented(p, q));
      ++b;
    }
    ++a;
  }
  return out;
}

PhaseMatrix PhaseMatrix::permuted(const std::vector<std::size_t>& order) const {
  if (order.size() != n_) {
    throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
  }
  PhaseMatrix out(n_);
  for (std::size_t p = 0; p < n_; ++p) {
    for (std::size_t q = p + 1; q < n_; ++q) {
      out.set(p, q, oriented(order[p], order[q]));
    }
  }
  return out;
}

std::vector<std::vector<double>> PhaseMatrix::magnitudes() const {
  std::vector<std::vector<double>> rows(n_, std::vector<double>(n_, 0.0));
  for (std::size_t p = 0; p < n_; ++p) {
    for (std::size_t q = 0; q < n_; ++q) {
      rows[p][q] = (*this)(p, q);
    }
  }
  return rows;
}

}  // namespace gravent
