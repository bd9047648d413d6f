#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace hqx {

inline constexpr int kMaxFormulaDim = 64;

namespace detail {

using PascalRow = std::array<std::uint64_t, kMaxFormulaDim + 1>;

constexpr std::array<PascalRow, kMaxFormulaDim + 1> make_pascal() {
  std::array<PascalRow, kMaxFormulaDim + 1> t{};
  for (int a = 0; a <= kMaxFormulaDim; ++a) {
    t[a][0] = 1;
    for (int b = 1; b <= a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t;
}

// C(64, 32) ~ 1.83e18 is the largest entry, well inside uint64.
inline constexpr auto kPascal = make_pascal();

}  // namespace detail

/// C(a, b) for 0 <= a <= 64; zero when b < 0 or b > a.
constexpr std::uint64_t binom(int a, int b) {
  if (a < 0 || b < 0 || b > a || a > kMaxFormulaDim) return 0;
  return detail::kPascal[a][b];
}

/// 2^n - 1, the largest valid order of a proper vertex subset of Q_n.
constexpr std::uint64_t max_proper_order(int n) {
  return n >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << n) - 1;
}

}  // namespace hqx
