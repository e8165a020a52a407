#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gravent {

using MassMask = std::uint64_t;

inline constexpr std::size_t kMaxMasses = 63;

inline MassMask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~MassMask{0} : ((MassMask{1} << n) - 1);
}

/// Split of masses {0..n-1} into two nonempty parts. Always stored in
/// canonical form: mass 0 belongs to the left part.
class Bipartition {
 public:
  /// Validates and canonicalises. Throws InvalidBipartition when either part
  /// would be empty or the mask has bits beyond n.
  Bipartition(std::size_t n, MassMask left);

  /// Parses "125|346" (1-based digits; masses >= 10 written comma separated,
  /// e.g. "1,10|2,...").  Every mass must appear exactly once.
  static Bipartition parse(std::string_view text, std::size_t n);

  std::size_t n() const noexcept { return n_; }
  MassMask left() const noexcept { return left_; }
  MassMask right() const noexcept { return full_mask(n_) & ~left_; }

  /// Side with fewer masses (left on ties); the closed form is evaluated
  /// with this side as the k-mass part.
  MassMask smaller_side() const noexcept;
  std::size_t k() const noexcept;

  std::vector<std::size_t> left_members() const;
  std::vector<std::size_t> right_members() const;

  /// "125|346" style, 1-based; comma separated when n >= 10.
  std::string to_string() const;

  bool operator==(const Bipartition&) const = default;

 private:
  std::size_t n_;
  MassMask left_;
};

std::vector<std::size_t> members(MassMask mask, std::size_t n);
int popcount(MassMask mask) noexcept;

/// All 2^(n-1) - 1 canonical bipartitions, ordered by their string form.
std::vector<Bipartition> all_bipartitions(std::size_t n);
/// The single-mass cuts {p}|rest in mass order (just one for n = 2).
std::vector<Bipartition> one_vs_rest_bipartitions(std::size_t n);

/// All k-subsets of {0..n-1} as masks, ascending lexicographic by members.
std::vector<MassMask> k_subsets(std::size_t n, std::size_t k);

}  // namespace gravent
