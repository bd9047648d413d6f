#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "hqx/errors.hpp"
#include "hqx/hypercube.hpp"
#include "naive.hpp"

using hqx::CubeDim;
using hqx::FaultSet;
using hqx::Vertex;

namespace {

FaultSet make(int n, std::vector<Vertex> members) { return FaultSet(CubeDim(n), members); }

std::set<int> as_set(const FaultSet& s) {
  std::set<int> out;
  for (Vertex v : s.members()) out.insert(static_cast<int>(v));
  return out;
}

// Calls f on every subset of {0..universe-1} with exactly k elements.
template <typename F>
void for_each_subset(int universe, int k, F f) {
  std::vector<Vertex> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
  for (;;) {
    f(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == static_cast<Vertex>(universe - k + i)) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

TEST_CASE("CubeDim bounds") {
  CHECK(CubeDim(1).vertex_count() == 2);
  CHECK(CubeDim(30).vertex_count() == (std::uint64_t{1} << 30));
  CHECK_THROWS_AS(CubeDim(0), hqx::domain_error);
  CHECK_THROWS_AS(CubeDim(31), hqx::domain_error);
}

TEST_CASE("FaultSet size tracks membership") {
  std::mt19937_64 gen(11);
  for (int n : {1, 3, 6, 7, 10}) {
    FaultSet s{CubeDim(n)};
    std::set<Vertex> shadow;
    std::uniform_int_distribution<Vertex> pick(0, (1U << n) - 1);
    for (int step = 0; step < 2000; ++step) {
      const Vertex v = pick(gen);
      if (gen() & 1) {
        CHECK(s.insert(v) == shadow.insert(v).second);
      } else {
        CHECK(s.erase(v) == (shadow.erase(v) == 1));
      }
      REQUIRE(s.size() == shadow.size());
    }
    CHECK(s.members() == std::vector<Vertex>(shadow.begin(), shadow.end()));
  }
  CHECK(FaultSet::full(CubeDim(7)).size() == 128);
  CHECK_THROWS_AS(make(3, {8}), hqx::domain_error);
}

TEST_CASE("neighbors") {
  CHECK(hqx::neighbors(CubeDim(3), 0b000) == std::vector<Vertex>{0b001, 0b010, 0b100});
  CHECK(hqx::neighbors(CubeDim(1), 0) == std::vector<Vertex>{1});
  CHECK(hqx::neighbors(CubeDim(4), 0b0101) == std::vector<Vertex>{0b0100, 0b0111, 0b0001, 0b1101});
  CHECK_THROWS_AS(hqx::neighbors(CubeDim(3), 8), hqx::domain_error);
}

TEST_CASE("common_neighbors") {
  CHECK(hqx::common_neighbors(CubeDim(3), 0b000, 0b011) == std::vector<Vertex>{0b001, 0b010});
  CHECK(hqx::common_neighbors(CubeDim(3), 0b000, 0b001).empty());
  CHECK(hqx::common_neighbors(CubeDim(5), 0b00000, 0b11000) == std::vector<Vertex>{0b01000, 0b10000});
  CHECK_THROWS_AS(hqx::common_neighbors(CubeDim(3), 5, 5), hqx::domain_error);
}

TEST_CASE("common_neighbors: 0 or 2, and 2 exactly at distance 2") {
  std::mt19937_64 gen(2024);
  for (int n = 1; n <= 12; ++n) {
    std::uniform_int_distribution<Vertex> pick(0, (1U << n) - 1);
    for (int trial = 0; trial < 500; ++trial) {
      const Vertex u = pick(gen);
      Vertex v = pick(gen);
      if (u == v) v ^= 1;
      const auto common = hqx::common_neighbors(CubeDim(n), u, v);
      REQUIRE((common.size() == 0 || common.size() == 2));
      CHECK((common.size() == 2) == (hqx::hamming_distance(u, v) == 2));
      for (Vertex w : common) CHECK((naive::adjacent(int(u), int(w)) && naive::adjacent(int(v), int(w))));
    }
  }
}

TEST_CASE("vertex_boundary") {
  CHECK(hqx::vertex_boundary(make(3, {0b000})) == make(3, {0b001, 0b010, 0b100}));
  CHECK(hqx::vertex_boundary(make(3, {0b000, 0b001, 0b010, 0b100})) == make(3, {0b011, 0b101, 0b110}));
  CHECK(hqx::vertex_boundary(FaultSet::full(CubeDim(4))).empty());
  CHECK_THROWS_AS(hqx::vertex_boundary(FaultSet(CubeDim(3))), hqx::domain_error);
}

TEST_CASE("vertex_boundary matches the naive boundary for every small set") {
  for (int n = 1; n <= 4; ++n) {
    const int universe = 1 << n;
    for (int k = 1; k <= std::min(6, universe); ++k) {
      for_each_subset(universe, k, [&](const std::vector<Vertex>& pick) {
        const FaultSet h(CubeDim(n), pick);
        const FaultSet nb = hqx::vertex_boundary(h);
        REQUIRE(as_set(nb) == naive::boundary(n, as_set(h)));
      });
    }
  }
}

TEST_CASE("decompose") {
  const auto q2 = hqx::decompose(CubeDim(2), 1);
  CHECK(q2.zero_half == std::vector<Vertex>{0b00, 0b10});
  CHECK(q2.one_half == std::vector<Vertex>{0b01, 0b11});
  CHECK(q2.matching == std::vector<std::pair<Vertex, Vertex>>{{0b00, 0b01}, {0b10, 0b11}});

  const auto q3 = hqx::decompose(CubeDim(3), 3);
  CHECK(q3.zero_half.size() == 4);
  CHECK(q3.one_half.size() == 4);
  for (auto [a, b] : q3.matching) CHECK((a ^ b) == 0b100);

  const auto q4 = hqx::decompose(CubeDim(4), 2);
  CHECK(q4.zero_half.size() == 8);
  CHECK(hqx::induced_edge_count(CubeDim(4), q4.zero_half) == 12);
  CHECK(hqx::induced_edge_count(CubeDim(4), q4.one_half) == 12);

  CHECK_THROWS_AS(hqx::decompose(CubeDim(3), 0), hqx::domain_error);
  CHECK_THROWS_AS(hqx::decompose(CubeDim(3), 4), hqx::domain_error);
}

TEST_CASE("decompose: halves are Q_{n-1} joined by a perfect matching") {
  for (int n = 2; n <= 10; ++n) {
    const std::uint64_t half_edges = static_cast<std::uint64_t>(n - 1) << (n - 2);
    for (int i = 1; i <= n; ++i) {
      const auto d = hqx::decompose(CubeDim(n), i);
      CHECK(hqx::induced_edge_count(CubeDim(n), d.zero_half) == half_edges);
      CHECK(hqx::induced_edge_count(CubeDim(n), d.one_half) == half_edges);
      REQUIRE(d.matching.size() == (std::size_t{1} << (n - 1)));
      std::set<Vertex> seen(d.zero_half.begin(), d.zero_half.end());
      seen.insert(d.one_half.begin(), d.one_half.end());
      CHECK(seen.size() == (std::size_t{1} << n));
      for (auto [a, b] : d.matching) CHECK((a ^ b) == (Vertex{1} << (i - 1)));
    }
  }
}

TEST_CASE("components") {
  const auto corner = hqx::components(make(3, {0b001, 0b010, 0b100}));
  CHECK(corner.sizes == std::vector<std::uint64_t>{4, 1});
  CHECK(corner.small_total == 1);
  CHECK(corner.max_component == make(3, {0b011, 0b101, 0b110, 0b111}));

  CHECK(hqx::components(FaultSet(CubeDim(4))).sizes == std::vector<std::uint64_t>{16});

  const FaultSet edge_boundary = hqx::vertex_boundary(make(4, {0b0000, 0b0001}));
  REQUIRE(edge_boundary.size() == 6);
  const auto split = hqx::components(edge_boundary);
  CHECK(split.sizes == std::vector<std::uint64_t>{8, 2});
  CHECK(split.small_total == 2);

  const auto none = hqx::components(FaultSet::full(CubeDim(3)));
  CHECK(none.sizes.empty());
  CHECK(none.small_total == 0);
  CHECK(none.max_component.empty());
}

TEST_CASE("components: ties go to the component with the smallest label") {
  // Q_2 minus {01, 10} leaves {00} and {11}.
  const auto p = hqx::components(make(2, {0b01, 0b10}));
  CHECK(p.sizes == std::vector<std::uint64_t>{1, 1});
  CHECK(p.max_component == make(2, {0b00}));
  CHECK(p.small_total == 1);
}

TEST_CASE("components agree with union-find and conserve vertices") {
  std::mt19937_64 gen(77);
  for (int n = 1; n <= 10; ++n) {
    std::uniform_int_distribution<Vertex> pick(0, (1U << n) - 1);
    for (int trial = 0; trial < 40; ++trial) {
      FaultSet s{CubeDim(n)};
      const int count = static_cast<int>(gen() % ((1U << n) / 2 + 1));
      for (int i = 0; i < count; ++i) s.insert(pick(gen));
      const auto p = hqx::components(s);
      std::uint64_t total = 0;
      for (auto c : p.sizes) total += c;
      CHECK(total + s.size() == (std::uint64_t{1} << n));
      CHECK(std::is_sorted(p.sizes.rbegin(), p.sizes.rend()));
      if (!p.sizes.empty()) {
        CHECK(p.small_total == total - p.sizes[0]);
        CHECK(p.max_component.size() == p.sizes[0]);
      }
      if (n <= 7) CHECK(p.sizes == naive::component_sizes(n, as_set(s)));
    }
  }
}

TEST_CASE("connectivity of Q_3 and Q_4 is n") {
  for (int n = 3; n <= 4; ++n) {
    bool any_smaller_cut = false;
    for_each_subset(1 << n, n - 1, [&](const std::vector<Vertex>& pick) {
      if (hqx::components(FaultSet(CubeDim(n), pick)).sizes.size() > 1) any_smaller_cut = true;
    });
    CHECK_FALSE(any_smaller_cut);

    bool some_cut = false;
    for_each_subset(1 << n, n, [&](const std::vector<Vertex>& pick) {
      if (hqx::components(FaultSet(CubeDim(n), pick)).sizes.size() > 1) some_cut = true;
    });
    CHECK(some_cut);
  }
}
