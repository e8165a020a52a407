#include "gravent/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "gravent/error.hpp"

namespace gravent {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::InvalidArgument, "rational arithmetic overflow");
  }
  return out;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "bad rational \"" + std::string(whole) + "\"");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::InvalidArgument, "rational component out of range");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  return Rational(parse_int(text.substr(0, slash), text), den);
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  // cross-reduce first to keep intermediates small
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  return Rational(checked_mul(a.num_ / (g1 ? g1 : 1), b.num_ / (g2 ? g2 : 1)),
                  checked_mul(a.den_ / (g2 ? g2 : 1), b.den_ / (g1 ? g1 : 1)));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero rational");
  return a * Rational(b.den_, b.num_);
}

RationalPhases::RationalPhases(double base, std::vector<std::vector<Rational>> multipliers)
    : base_(base), m_(std::move(multipliers)) {
  if (!(base > 0.0) || !std::isfinite(base)) {
    throw Error(ErrorCode::InvalidArgument, "base phase must be positive and finite");
  }
  const std::size_t n = m_.size();
  for (std::size_t p = 0; p < n; ++p) {
    if (m_[p].size() != n) throw Error(ErrorCode::InvalidArgument, "multiplier matrix must be square");
    if (!m_[p][p].is_zero()) throw Error(ErrorCode::InvalidArgument, "multiplier diagonal must be 0");
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (!(m_[p][q] == m_[q][p])) {
        throw Error(ErrorCode::InvalidArgument, "multiplier matrix must be symmetric");
      }
    }
  }
}

PhaseMatrix RationalPhases::to_phase_matrix() const {
  PhaseMatrix out(size());
  for (std::size_t p = 0; p < size(); ++p) {
    for (std::size_t q = p + 1; q < size(); ++q) {
      out.set(p, q, m_[p][q].to_double() * base_);
    }
  }
  return out;
}

}  // namespace gravent
