#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gravent/phase_matrix.hpp"

namespace gravent {

/// Exact fraction num/den with den >= 1 and gcd(|num|, den) == 1.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  /// "n/d", "n" or "-n/d".
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  Rational abs() const noexcept { return Rational(num_ < 0 ? -num_ : num_, den_); }
  std::string to_string() const;

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  bool operator==(const Rational&) const = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Phases given exactly as rational multiples of a base rate Phi0:
/// Phi_pq = (n_pq / d_pq) Phi0. The sign of a multiplier is an orientation,
/// as in PhaseMatrix.
class RationalPhases {
 public:
  RationalPhases(double base, std::vector<std::vector<Rational>> multipliers);

  std::size_t size() const noexcept { return m_.size(); }
  double base() const noexcept { return base_; }
  const Rational& multiplier(std::size_t p, std::size_t q) const { return m_[p][q]; }

  PhaseMatrix to_phase_matrix() const;

 private:
  double base_;
  std::vector<std::vector<Rational>> m_;
};

}  // namespace gravent
