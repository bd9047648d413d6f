#pragma once

// Helpers shared by the serial and parallel oracle engines.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hqx/binomial.hpp"
#include "hqx/errors.hpp"
#include "hqx/hypercube.hpp"
#include "hqx/oracle.hpp"

namespace hqx::oracle::detail {

inline void check_enumeration_dim(CubeDim n) {
  if (n.value() > kMaxEnumerationDim) {
    throw range_error("exhaustive search supports n <= " + std::to_string(kMaxEnumerationDim) + ", got n=" +
                      std::to_string(n.value()));
  }
}

/// Position of a sorted k-subset of [0, universe) in lexicographic order.
inline std::uint64_t lex_rank(std::span<const Vertex> combo, int universe) {
  const int k = static_cast<int>(combo.size());
  std::uint64_t rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int x = prev + 1; x < static_cast<int>(combo[i]); ++x) rank += binom(universe - 1 - x, k - 1 - i);
    prev = static_cast<int>(combo[i]);
  }
  return rank;
}

/// Advances a sorted k-subset of [0, universe) to its lexicographic successor.
inline bool next_combination(std::vector<Vertex>& c, int universe) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && static_cast<int>(c[i]) == universe - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

inline std::vector<Vertex> first_combination(std::uint64_t k) {
  std::vector<Vertex> c(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<Vertex>(i);
  return c;
}

inline void check_budget(std::uint64_t needed, std::uint64_t budget) {
  if (needed > budget) throw budget_exceeded(needed, budget);
}

}  // namespace hqx::oracle::detail
