#include "hqx/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "hqx/errors.hpp"

namespace hqx {

namespace {

std::size_t word_count(CubeDim dim) { return static_cast<std::size_t>((dim.vertex_count() + 63) / 64); }

void check_vertex(CubeDim n, Vertex v) {
  if (!n.contains(v)) {
    throw domain_error("vertex " + std::to_string(v) + " is not a label of Q_" + std::to_string(n.value()));
  }
}

}  // namespace

CubeDim::CubeDim(int n) : n_(n) {
  if (n < 1 || n > kMax) {
    throw domain_error("cube dimension must lie in [1, " + std::to_string(kMax) + "], got " + std::to_string(n));
  }
}

FaultSet::FaultSet(CubeDim dim) : dim_(dim), words_(word_count(dim), 0) {}

FaultSet::FaultSet(CubeDim dim, std::span<const Vertex> members) : FaultSet(dim) {
  for (Vertex v : members) insert(v);
}

FaultSet FaultSet::full(CubeDim dim) {
  FaultSet s(dim);
  const std::uint64_t count = dim.vertex_count();
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (count % 64 != 0) s.words_.back() = (std::uint64_t{1} << (count % 64)) - 1;
  s.size_ = count;
  return s;
}

void FaultSet::check(Vertex v) const { check_vertex(dim_, v); }

bool FaultSet::contains(Vertex v) const {
  check(v);
  return (words_[v >> 6] >> (v & 63)) & 1U;
}

bool FaultSet::insert(Vertex v) {
  check(v);
  std::uint64_t& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (w & bit) return false;
  w |= bit;
  ++size_;
  return true;
}

bool FaultSet::erase(Vertex v) {
  check(v);
  std::uint64_t& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if (!(w & bit)) return false;
  w &= ~bit;
  --size_;
  return true;
}

std::vector<Vertex> FaultSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

int hamming_distance(Vertex u, Vertex v) { return std::popcount(u ^ v); }

std::vector<Vertex> neighbors(CubeDim n, Vertex v) {
  check_vertex(n, v);
  std::vector<Vertex> out;
  out.reserve(n.value());
  for (int i = 0; i < n.value(); ++i) out.push_back(v ^ (Vertex{1} << i));
  return out;
}

std::vector<Vertex> common_neighbors(CubeDim n, Vertex u, Vertex v) {
  check_vertex(n, u);
  check_vertex(n, v);
  if (u == v) throw domain_error("common_neighbors needs two distinct vertices");
  const Vertex diff = u ^ v;
  if (std::popcount(diff) != 2) return {};
  const Vertex low = diff & (~diff + 1);
  const Vertex high = diff ^ low;
  std::vector<Vertex> out{u ^ low, u ^ high};
  std::sort(out.begin(), out.end());
  return out;
}

FaultSet vertex_boundary(const FaultSet& h) {
  if (h.empty()) throw domain_error("vertex boundary of the empty set is undefined");
  const CubeDim n = h.dim();
  FaultSet out(n);
  for (Vertex v : h.members()) {
    for (int i = 0; i < n.value(); ++i) {
      const Vertex w = v ^ (Vertex{1} << i);
      if (!h.contains(w)) out.insert(w);
    }
  }
  return out;
}

Decomposition decompose(CubeDim n, int i) {
  if (i < 1 || i > n.value()) {
    throw domain_error("dimension index " + std::to_string(i) + " outside [1, " + std::to_string(n.value()) + "]");
  }
  const Vertex bit = Vertex{1} << (i - 1);
  Decomposition d{i, {}, {}, {}};
  const auto half = static_cast<std::size_t>(n.vertex_count() / 2);
  d.zero_half.reserve(half);
  d.one_half.reserve(half);
  d.matching.reserve(half);
  for (std::uint64_t v = 0; v < n.vertex_count(); ++v) {
    const auto u = static_cast<Vertex>(v);
    if (u & bit) {
      d.one_half.push_back(u);
    } else {
      d.zero_half.push_back(u);
      d.matching.emplace_back(u, u ^ bit);
    }
  }
  return d;
}

std::uint64_t induced_edge_count(CubeDim n, std::span<const Vertex> vertices) {
  const FaultSet in(n, vertices);
  std::uint64_t twice = 0;
  for (Vertex v : in.members()) {
    for (int i = 0; i < n.value(); ++i) twice += in.contains(v ^ (Vertex{1} << i)) ? 1 : 0;
  }
  return twice / 2;
}

ComponentProfile components(const FaultSet& removed) {
  const CubeDim n = removed.dim();
  const std::uint64_t total = n.vertex_count();
  const int dims = n.value();

  // Removed vertices start out "visited" so the scan only meets survivors.
  std::vector<std::uint64_t> seen(removed.words().begin(), removed.words().end());
  auto visit = [&seen](Vertex v) {
    std::uint64_t& w = seen[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  };

  // Every survivor is appended once; each component is a contiguous run.
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(total - removed.size()));
  std::vector<std::uint64_t> sizes;
  std::size_t best_start = 0;
  std::uint64_t best_size = 0;

  for (std::size_t wi = 0; wi < seen.size(); ++wi) {
    const std::uint64_t valid = (wi + 1) * 64 <= total ? ~std::uint64_t{0} : (std::uint64_t{1} << (total % 64)) - 1;
    while ((~seen[wi] & valid) != 0) {
      const auto root = static_cast<Vertex>(wi * 64 + std::countr_zero(~seen[wi] & valid));
      const std::size_t start = order.size();
      visit(root);
      order.push_back(root);
      for (std::size_t head = start; head < order.size(); ++head) {
        const Vertex v = order[head];
        for (int i = 0; i < dims; ++i) {
          const Vertex w = v ^ (Vertex{1} << i);
          if (visit(w)) order.push_back(w);
        }
      }
      const std::uint64_t size = order.size() - start;
      sizes.push_back(size);
      // Roots are met in ascending order, so strict '>' keeps the smallest label on ties.
      if (size > best_size) {
        best_size = size;
        best_start = start;
      }
    }
  }

  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  FaultSet best(n, std::span<const Vertex>(order).subspan(best_start, static_cast<std::size_t>(best_size)));
  std::uint64_t small = 0;
  for (std::size_t i = 1; i < sizes.size(); ++i) small += sizes[i];
  return ComponentProfile{std::move(sizes), std::move(best), small};
}

}  // namespace hqx
