#pragma once

// Implicit model of the n-dimensional hypercube Q_n.
//
// Vertex labels are n-bit integers; bit i holds coordinate u_{i+1}, so the
// neighbor across dimension d (1-based) is `v ^ (1 << (d - 1))`. No adjacency
// list is ever stored.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hqx {

using Vertex = std::uint32_t;

// Dimension of a hypercube whose vertex sets are materialized (bit vectors,
// traversals). Formula-only code takes a plain int and allows up to 64.
class CubeDim {
 public:
  static constexpr int kMax = 30;

  explicit CubeDim(int n);

  int value() const noexcept { return n_; }
  std::uint64_t vertex_count() const noexcept { return std::uint64_t{1} << n_; }
  bool contains(std::uint64_t v) const noexcept { return v < vertex_count(); }

  friend bool operator==(CubeDim, CubeDim) = default;

 private:
  int n_;
};

// Subset of V(Q_n) as a 2^n-bit membership vector with cached cardinality.
class FaultSet {
 public:
  explicit FaultSet(CubeDim dim);
  FaultSet(CubeDim dim, std::span<const Vertex> members);

  static FaultSet full(CubeDim dim);

  CubeDim dim() const noexcept { return dim_; }
  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(Vertex v) const;
  // Both return whether the set changed.
  bool insert(Vertex v);
  bool erase(Vertex v);

  // Ascending labels.
  std::vector<Vertex> members() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const FaultSet&, const FaultSet&) = default;

 private:
  void check(Vertex v) const;

  CubeDim dim_;
  std::vector<std::uint64_t> words_;
  std::uint64_t size_ = 0;
};

struct ComponentProfile {
  std::vector<std::uint64_t> sizes;  // descending
  FaultSet max_component;            // empty when no vertex survives
  std::uint64_t small_total = 0;     // sum(sizes) - sizes[0]
};

struct Decomposition {
  int dimension;                 // 1-based
  std::vector<Vertex> zero_half;  // coordinate `dimension` is 0
  std::vector<Vertex> one_half;
  std::vector<std::pair<Vertex, Vertex>> matching;  // (zero side, one side)
};

int hamming_distance(Vertex u, Vertex v);

/// Neighbors of v, ordered by the index of the flipped bit.
std::vector<Vertex> neighbors(CubeDim n, Vertex v);

/// Shared neighbors of two distinct vertices: two of them at Hamming distance
/// 2, none otherwise. Ascending order.
std::vector<Vertex> common_neighbors(CubeDim n, Vertex u, Vertex v);

/// N(H): vertices outside H adjacent to at least one vertex of H.
FaultSet vertex_boundary(const FaultSet& h);

/// Split along 1-based dimension i into two Q_{n-1} halves and the
/// perfect matching of i-th edges between them.
Decomposition decompose(CubeDim n, int i);

/// Number of edges of Q_n with both ends in `vertices`.
std::uint64_t induced_edge_count(CubeDim n, std::span<const Vertex> vertices);

/// Connected components of Q_n - removed. Among maximum-order components the
/// one holding the smallest label is reported as max_component.
ComponentProfile components(const FaultSet& removed);

}  // namespace hqx
