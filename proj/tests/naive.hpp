#pragma once

// Deliberately naive reference computations for tests. Adjacency is decided by
// Hamming distance on plain ints and nothing here touches the hqx library, so
// these can check both the formulas and the enumeration engines.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace naive {

inline bool adjacent(int u, int v) { return std::popcount(static_cast<unsigned>(u ^ v)) == 1; }

inline std::set<int> boundary(int n, const std::set<int>& h) {
  std::set<int> out;
  for (int w = 0; w < (1 << n); ++w) {
    if (h.count(w)) continue;
    for (int v : h) {
      if (adjacent(v, w)) {
        out.insert(w);
        break;
      }
    }
  }
  return out;
}

/// Minimum |N(S)| over every m-subset, by walking a selection mask through
/// all its permutations.
inline int min_boundary(int n, int m) {
  const int total = 1 << n;
  std::vector<char> pick(static_cast<std::size_t>(total), 0);
  std::fill(pick.end() - m, pick.end(), 1);
  int best = total;
  do {
    std::set<int> h;
    for (int v = 0; v < total; ++v) {
      if (pick[static_cast<std::size_t>(v)]) h.insert(v);
    }
    best = std::min(best, static_cast<int>(boundary(n, h).size()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

/// Component orders of Q_n - removed, descending, via union-find over all edges.
inline std::vector<std::uint64_t> component_sizes(int n, const std::set<int>& removed) {
  const int total = 1 << n;
  std::vector<int> parent(static_cast<std::size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int u = 0; u < total; ++u) {
    for (int v = u + 1; v < total; ++v) {
      if (adjacent(u, v) && !removed.count(u) && !removed.count(v)) parent[find(u)] = find(v);
    }
  }
  std::vector<std::uint64_t> count(static_cast<std::size_t>(total), 0);
  for (int v = 0; v < total; ++v) {
    if (!removed.count(v)) ++count[find(v)];
  }
  std::vector<std::uint64_t> sizes;
  for (auto c : count) {
    if (c) sizes.push_back(c);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace naive
