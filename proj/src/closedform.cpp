#include "gravent/closedform.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "gravent/error.hpp"

namespace gravent::closedform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_three(const PhaseMatrix& phases) {
  if (phases.size() != 3) {
    throw Error(ErrorCode::WrongArity,
                "three-body formula needs N = 3, got N = " + std::to_string(phases.size()));
  }
}

void require_index(std::size_t p, std::size_t n) {
  if (p >= n) {
    throw Error(ErrorCode::IndexError,
                "mass index " + std::to_string(p) + " out of range for N = " + std::to_string(n));
  }
}

void require_matching(const PhaseMatrix& phases, const Bipartition& bip) {
  if (phases.size() != bip.n()) {
    throw Error(ErrorCode::InvalidBipartition,
                "bipartition " + bip.to_string() + " is for N = " + std::to_string(bip.n()) +
                    " but the phase matrix has N = " + std::to_string(phases.size()));
  }
}

double clamped_sqrt(double radicand, const char* what) {
  if (radicand < -kRadicandTolerance) {
    throw Error(ErrorCode::NegativeRadicand,
                std::string(what) + " radicand " + std::to_string(radicand));
  }
  return radicand > 0.0 ? std::sqrt(radicand) : 0.0;
}

}  // namespace

double cos_sq(double x) noexcept {
  if (std::abs(x) > 1e8) {
    x = std::remainder(x, kTwoPi);
  }
  const double c = std::cos(x);
  return c * c;
}

double concurrence_two_body(double phi, double t) {
  return clamped_sqrt(1.0 - cos_sq(phi * t / 2.0), "two-body concurrence");
}

double concurrence_three_body(const PhaseMatrix& phases, std::size_t p, double t) {
  require_three(phases);
  require_index(p, 3);
  const std::size_t q = (p + 1) % 3;
  const std::size_t r = (p + 2) % 3;
  const double prod = cos_sq(phases(p, q) * t / 2.0) * cos_sq(phases(p, r) * t / 2.0);
  return clamped_sqrt(1.0 - prod, "three-body concurrence");
}

SchmidtPair schmidt_pair(const PhaseMatrix& phases, std::size_t p, double t) {
  require_three(phases);
  require_index(p, 3);
  const std::size_t q = (p + 1) % 3;
  const std::size_t r = (p + 2) % 3;
  // |eta| = (1/8)|1 + e^{i Phi_pq t}| |1 + e^{i Phi_pr t}|
  const std::complex<double> one(1.0, 0.0);
  const double eta = std::abs(one + std::polar(1.0, phases(p, q) * t)) *
                     std::abs(one + std::polar(1.0, phases(p, r) * t)) / 8.0;
  const double plus = std::sqrt(0.5 + eta);
  const double minus = clamped_sqrt(0.5 - eta, "Schmidt coefficient");
  return {plus, minus};
}

double lambda_series(const PhaseMatrix& phases, const Bipartition& bip, double t) {
  require_matching(phases, bip);
  const std::size_t n = bip.n();
  const MassMask side_mask = bip.smaller_side();
  const std::vector<std::size_t> side = members(side_mask, n);
  const std::vector<std::size_t> other = members(full_mask(n) & ~side_mask, n);
  const std::size_t k = side.size();

  // oriented phases across the cut, one row per side member
  std::vector<std::vector<double>> cross(k, std::vector<double>(other.size()));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < other.size(); ++b) {
      cross[a][b] = phases.oriented(side[a], other[b]);
    }
  }

  const double half_t = t / 2.0;
  double lambda = 0.0;
  for (std::size_t l = 1; l <= k; ++l) {
    const double weight = std::ldexp(1.0, -static_cast<int>(l));
    double level = 0.0;
    for (MassMask subset : k_subsets(k, l)) {
      const std::vector<std::size_t> chosen = members(subset, k);
      for (MassMask signs = 0; signs < (MassMask{1} << (l - 1)); ++signs) {
        double product = 1.0;
        for (std::size_t b = 0; b < other.size(); ++b) {
          double combo = cross[chosen[0]][b];
          for (std::size_t i = 1; i < l; ++i) {
            const double v = cross[chosen[i]][b];
            combo += (signs >> (i - 1) & 1U) ? -v : v;
          }
          product *= cos_sq(combo * half_t);
        }
        level += product;
      }
    }
    lambda += weight * level;
  }
  return lambda;
}

double iconcurrence_from_lambda(std::size_t k, double lambda) {
  const double top = std::ldexp(1.0, static_cast<int>(k));  // 2^k
  const double radicand = (top - 1.0) / (top / 2.0) - (4.0 / top) * lambda;
  return clamped_sqrt(radicand, "I-concurrence");
}

double iconcurrence(const PhaseMatrix& phases, const Bipartition& bip, double t) {
  return iconcurrence_from_lambda(bip.k(), lambda_series(phases, bip, t));
}

const char* to_string(TangleIndexing indexing) noexcept {
  switch (indexing) {
    case TangleIndexing::UnorderedThree: return "unordered-3-terms";
    case TangleIndexing::OrderedSix: return "ordered-6-terms";
  }
  return "unknown";
}

double three_tangle_published(const PhaseMatrix& phases, double t, TangleIndexing indexing) {
  require_three(phases);
  using C = std::complex<double>;
  auto e = [t](double x) { return std::polar(1.0, x * t); };
  // every summand below is symmetric in the two indices that the
  // unordered reading collapses, so the ordered reading is exactly twice it
  const double mult = indexing == TangleIndexing::OrderedSix ? 2.0 : 1.0;

  C apex_double(0.0), apex_single(0.0), pair_term(0.0), f3(0.0);
  for (std::size_t p = 0; p < 3; ++p) {
    const std::size_t q = (p + 1) % 3;
    const std::size_t r = (p + 2) % 3;
    apex_double += e(2.0 * (phases(p, q) + phases(p, r)));
    apex_single += e(phases(p, q) + phases(p, r));
    // doubled pair {p,q}, third mass r
    pair_term += e(2.0 * phases(p, q) + phases(p, r) + phases(q, r));
    f3 += e(phases(p, q));
  }
  const C f1 = 1.0 + mult * apex_double;
  const C f2 = mult * (apex_single + pair_term);
  return std::abs(f1 - 2.0 * f2 + 8.0 * f3) / 16.0;
}

double pairwise_concurrence(const PhaseMatrix& phases, std::size_t p, std::size_t q, double t,
                            double tau123) {
  require_three(phases);
  require_index(p, 3);
  require_index(q, 3);
  if (p == q) {
    throw Error(ErrorCode::InvalidArgument, "pairwise concurrence needs two distinct masses");
  }
  if (!(tau123 >= -kRadicandTolerance && tau123 <= 1.0 + kRadicandTolerance)) {
    throw Error(ErrorCode::InvalidArgument, "3-tangle must lie in [0, 1]");
  }
  const std::size_t r = 3 - p - q;
  auto tangle = [&](std::size_t x) {
    const double c = concurrence_three_body(phases, x, t);
    return c * c;
  };
  const double radicand = tangle(p) + tangle(q) - tangle(r) - tau123;
  return clamped_sqrt(radicand, "pairwise concurrence") / std::numbers::sqrt2;
}

double meyer_wallach_qk(const PhaseMatrix& phases, std::size_t k, double t) {
  const std::size_t n = phases.size();
  if (k < 1 || k > n / 2) {
    throw Error(ErrorCode::KOutOfRange,
                "k = " + std::to_string(k) + " outside 1.." + std::to_string(n / 2));
  }
  double sum = 0.0;
  std::size_t count = 0;
  for (MassMask subset : k_subsets(n, k)) {
    const double c = iconcurrence(phases, Bipartition(n, subset), t);
    sum += c * c;
    ++count;
  }
  const double dk = std::ldexp(1.0, static_cast<int>(k));
  return dk / (2.0 * (dk - 1.0)) * (sum / static_cast<double>(count));
}

}  // namespace gravent::closedform
