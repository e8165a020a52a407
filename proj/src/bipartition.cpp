#include "gravent/bipartition.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "gravent/error.hpp"

namespace gravent {

int popcount(MassMask mask) noexcept { return std::popcount(mask); }

std::vector<std::size_t> members(MassMask mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < n; ++p) {
    if (mask >> p & 1U) out.push_back(p);
  }
  return out;
}

Bipartition::Bipartition(std::size_t n, MassMask left) : n_(n), left_(left) {
  if (n < 2 || n > kMaxMasses) {
    throw Error(ErrorCode::InvalidBipartition, "need 2 <= N <= 63 masses");
  }
  const MassMask all = full_mask(n);
  if (left & ~all) {
    throw Error(ErrorCode::InvalidBipartition, "mask names masses beyond N");
  }
  if (left == 0 || left == all) {
    throw Error(ErrorCode::InvalidBipartition, "both parts must be nonempty");
  }
  if (!(left_ & 1U)) {
    left_ = all & ~left_;
  }
}

MassMask Bipartition::smaller_side() const noexcept {
  return popcount(left_) <= popcount(right()) ? left_ : right();
}

std::size_t Bipartition::k() const noexcept {
  return static_cast<std::size_t>(std::min(popcount(left_), popcount(right())));
}

std::vector<std::size_t> Bipartition::left_members() const { return members(left_, n_); }
std::vector<std::size_t> Bipartition::right_members() const { return members(right(), n_); }

namespace {

std::string part_string(const std::vector<std::size_t>& part, bool commas) {
  std::string s;
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (commas && i > 0) s += ',';
    s += std::to_string(part[i] + 1);
  }
  return s;
}

MassMask parse_part(std::string_view part, std::size_t n, std::string_view whole) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::InvalidBipartition, "\"" + std::string(whole) + "\": " + why);
  };
  std::vector<std::string_view> tokens;
  if (part.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= part.size()) {
      const std::size_t comma = std::min(part.find(',', start), part.size());
      tokens.push_back(part.substr(start, comma - start));
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < part.size(); ++i) tokens.push_back(part.substr(i, 1));
  }
  MassMask mask = 0;
  for (std::string_view tok : tokens) {
    std::size_t mass = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), mass);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw fail("bad mass label '" + std::string(tok) + "'");
    }
    if (mass < 1 || mass > n) {
      throw fail("mass " + std::to_string(mass) + " out of range 1.." + std::to_string(n));
    }
    const MassMask bit = MassMask{1} << (mass - 1);
    if (mask & bit) throw fail("mass " + std::to_string(mass) + " listed twice");
    mask |= bit;
  }
  return mask;
}

}  // namespace

Bipartition Bipartition::parse(std::string_view text, std::size_t n) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw Error(ErrorCode::InvalidBipartition,
                "\"" + std::string(text) + "\": expected exactly one '|'");
  }
  if (n > kMaxMasses) {
    throw Error(ErrorCode::InvalidBipartition, "too many masses");
  }
  const MassMask left = parse_part(text.substr(0, bar), n, text);
  const MassMask right = parse_part(text.substr(bar + 1), n, text);
  if (left & right) {
    throw Error(ErrorCode::InvalidBipartition,
                "\"" + std::string(text) + "\": a mass appears on both sides");
  }
  const MassMask missing = full_mask(n) & ~(left | right);
  if (missing) {
    std::string which;
    for (std::size_t p : members(missing, n)) {
      which += (which.empty() ? "" : ", ") + std::to_string(p + 1);
    }
    throw Error(ErrorCode::InvalidBipartition,
                "\"" + std::string(text) + "\": mass " + which + " unassigned");
  }
  return Bipartition(n, left);
}

std::string Bipartition::to_string() const {
  const bool commas = n_ >= 10;
  return part_string(left_members(), commas) + "|" + part_string(right_members(), commas);
}

std::vector<Bipartition> all_bipartitions(std::size_t n) {
  if (n < 2 || n > 30) {
    throw Error(ErrorCode::InvalidArgument, "enumerating all bipartitions needs 2 <= N <= 30");
  }
  std::vector<Bipartition> out;
  // masks with bit 0 set, excluding the full set
  const MassMask all = full_mask(n);
  for (MassMask rest = 0; rest < (MassMask{1} << (n - 1)); ++rest) {
    const MassMask left = (rest << 1) | 1U;
    if (left == all) continue;
    out.emplace_back(n, left);
  }
  std::sort(out.begin(), out.end(), [](const Bipartition& a, const Bipartition& b) {
    return a.to_string() < b.to_string();
  });
  return out;
}

std::vector<Bipartition> one_vs_rest_bipartitions(std::size_t n) {
  std::vector<Bipartition> out;
  // for N = 2 both single-mass cuts are the same split
  const std::size_t count = n == 2 ? 1 : n;
  for (std::size_t p = 0; p < count; ++p) out.emplace_back(n, MassMask{1} << p);
  return out;
}

std::vector<MassMask> k_subsets(std::size_t n, std::size_t k) {
  std::vector<MassMask> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    MassMask m = 0;
    for (std::size_t i : idx) m |= MassMask{1} << i;
    out.push_back(m);
    // advance to the next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace gravent
