// OpenMP engines over 64-bit vertex masks (n <= 6).
//
// Subset enumeration is split into tasks by the first two elements of the
// sorted subset, which keeps lexicographic order between tasks; results are
// merged by (value, subset) so the answer does not depend on scheduling.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <exception>
#include <limits>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "enumeration.hpp"
#include "hqx/binomial.hpp"
#include "hqx/oracle.hpp"
#include "hqx/reliability.hpp"

namespace hqx::oracle {

namespace {

using Mask = std::uint64_t;
using Combo = std::array<std::uint8_t, 64>;

int team_size(const Options& opts) {
#ifdef _OPENMP
  return opts.threads > 0 ? opts.threads : omp_get_max_threads();
#else
  (void)opts;
  return 1;
#endif
}

class MaskCube {
 public:
  explicit MaskCube(CubeDim n) : n_(n.value()), universe_(static_cast<int>(n.vertex_count())) {
    full_ = universe_ == 64 ? ~Mask{0} : (Mask{1} << universe_) - 1;
    for (int i = 0; i < n_; ++i) {
      Mask low = 0;
      for (int v = 0; v < universe_; ++v) {
        if (!((v >> i) & 1)) low |= Mask{1} << v;
      }
      low_[i] = low;
    }
    for (int v = 0; v < universe_; ++v) {
      Mask nb = 0;
      for (int i = 0; i < n_; ++i) nb |= Mask{1} << (v ^ (1 << i));
      nb_[v] = nb;
    }
  }

  int universe() const { return universe_; }
  Mask full() const { return full_; }
  Mask neighbors_of(int v) const { return nb_[v]; }

  // Union of the neighborhoods of every vertex in x.
  Mask spread(Mask x) const {
    Mask out = 0;
    for (int i = 0; i < n_; ++i) {
      const int s = 1 << i;
      out |= ((x & low_[i]) << s) | ((x >> s) & low_[i]);
    }
    return out;
  }

  Mask flood(Mask seed, Mask allowed) const {
    Mask x = seed;
    for (;;) {
      const Mask y = (x | spread(x)) & allowed;
      if (y == x) return x;
      x = y;
    }
  }

  // Q_n - cut is disconnected and every component has >= min_order vertices.
  bool is_extra_cut(Mask cut, int min_order) const {
    const Mask rest = full_ & ~cut;
    if (rest == 0) return false;
    Mask left = rest;
    int parts = 0;
    while (left != 0) {
      const Mask part = flood(left & (~left + 1), rest);
      if (std::popcount(part) < min_order) return false;
      left &= ~part;
      ++parts;
    }
    return parts >= 2;
  }

 private:
  int n_;
  int universe_;
  Mask full_ = 0;
  std::array<Mask, 6> low_{};
  std::array<Mask, 64> nb_{};
};

struct Prefix {
  std::uint8_t first;
  std::uint8_t second;  // unused when the subset has one element
};

std::vector<Prefix> prefixes(int universe, int k) {
  std::vector<Prefix> out;
  if (k == 1) {
    for (int a = 0; a < universe; ++a) out.push_back({static_cast<std::uint8_t>(a), 0});
    return out;
  }
  for (int a = 0; a <= universe - k; ++a) {
    for (int b = a + 1; b <= universe - k + 1; ++b) {
      out.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
    }
  }
  return out;
}

bool combo_less(const Combo& a, const Combo& b, int k) {
  return std::lexicographical_compare(a.begin(), a.begin() + k, b.begin(), b.begin() + k);
}

FaultSet combo_set(CubeDim n, const Combo& c, int k) {
  FaultSet s(n);
  for (int i = 0; i < k; ++i) s.insert(c[i]);
  return s;
}

// Depth-first walk over the suffixes of one prefix, in lexicographic order.
// Visitor returns true to stop the walk.
template <typename Visitor>
bool walk(const MaskCube& cube, int k, int depth, int next, Mask set, Mask nbs, Combo& cur, Visitor& visit) {
  if (depth == k) return visit(set, nbs);
  const int last = cube.universe() - (k - depth);
  for (int v = next; v <= last; ++v) {
    cur[depth] = static_cast<std::uint8_t>(v);
    if (walk(cube, k, depth + 1, v + 1, set | (Mask{1} << v), nbs | cube.neighbors_of(v), cur, visit)) return true;
  }
  return false;
}

template <typename Visitor>
bool walk_prefix(const MaskCube& cube, int k, const Prefix& p, Combo& cur, Visitor& visit) {
  cur[0] = p.first;
  Mask set = Mask{1} << p.first;
  Mask nbs = cube.neighbors_of(p.first);
  if (k == 1) return visit(set, nbs);
  cur[1] = p.second;
  set |= Mask{1} << p.second;
  nbs |= cube.neighbors_of(p.second);
  return walk(cube, k, 2, p.second + 1, set, nbs, cur, visit);
}

}  // namespace

OracleResult min_boundary_bruteforce(CubeDim n, std::uint64_t m, const Options& opts) {
  detail::check_enumeration_dim(n);
  const MaskCube cube(n);
  if (m < 1 || m >= n.vertex_count()) throw domain_error("order m outside [1, 2^n - 1]");
  const int k = static_cast<int>(m);
  const std::uint64_t total = binom(cube.universe(), k);
  detail::check_budget(total, opts.budget);

  const std::vector<Prefix> tasks = prefixes(cube.universe(), k);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  Combo best_combo{};

#pragma omp parallel num_threads(team_size(opts))
  {
    std::uint64_t local = std::numeric_limits<std::uint64_t>::max();
    Combo local_combo{};
    Combo cur{};
    auto visit = [&](Mask set, Mask nbs) {
      const auto value = static_cast<std::uint64_t>(std::popcount(nbs & ~set));
      if (value < local || (value == local && combo_less(cur, local_combo, k))) {
        local = value;
        local_combo = cur;
      }
      return false;
    };

#pragma omp for schedule(dynamic)
    for (std::size_t t = 0; t < tasks.size(); ++t) walk_prefix(cube, k, tasks[t], cur, visit);

#pragma omp critical(hqx_min_boundary_merge)
    {
      if (local < best || (local == best && combo_less(local_combo, best_combo, k))) {
        best = local;
        best_combo = local_combo;
      }
    }
  }
  return {n.value(), m, true, best, combo_set(n, best_combo, k), total};
}

OracleResult extra_conn_bruteforce(CubeDim n, int h_minus_1, const Options& opts) {
  detail::check_enumeration_dim(n);
  if (h_minus_1 < 0) throw domain_error("h-1 must be nonnegative");
  const MaskCube cube(n);
  const int universe = cube.universe();
  const int min_order = h_minus_1 + 1;

  std::uint64_t explored = 0;
  for (int k = 1; k <= universe - 2; ++k) {
    const std::uint64_t level = binom(universe, k);
    detail::check_budget(explored + level, opts.budget);

    const std::vector<Prefix> tasks = prefixes(universe, k);
    std::vector<std::optional<Combo>> hits(tasks.size());
    std::atomic<std::size_t> first_hit{tasks.size()};

#pragma omp parallel num_threads(team_size(opts))
    {
      Combo cur{};
#pragma omp for schedule(dynamic)
      for (std::size_t t = 0; t < tasks.size(); ++t) {
        // A lower task already holds a cut, and tasks are in lexicographic order.
        if (t > first_hit.load(std::memory_order_relaxed)) continue;
        auto visit = [&](Mask set, Mask) { return cube.is_extra_cut(set, min_order); };
        if (walk_prefix(cube, k, tasks[t], cur, visit)) {
          hits[t] = cur;
          std::size_t seen = first_hit.load();
          while (t < seen && !first_hit.compare_exchange_weak(seen, t)) {
          }
        }
      }
    }

    const std::size_t winner = first_hit.load();
    if (winner < tasks.size()) {
      const Combo& c = *hits[winner];
      std::vector<Vertex> members(c.begin(), c.begin() + k);
      explored += detail::lex_rank(members, universe) + 1;
      return {n.value(), static_cast<std::uint64_t>(h_minus_1), true, static_cast<std::uint64_t>(k),
              FaultSet(n, members), explored};
    }
    explored += level;
  }
  return {n.value(), static_cast<std::uint64_t>(h_minus_1), false, 0, FaultSet(n), explored};
}

namespace {

template <typename Sampler>
TrialReport run_trials(CubeDim n, int h, std::uint64_t trials, std::uint64_t seed, const Options& opts,
                       Sampler sample) {
  check_trial_guard(n, h);
  std::uint64_t violations = 0;
  std::uint64_t worst = 0;
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(trials);

#pragma omp parallel for num_threads(team_size(opts)) schedule(dynamic, 32) reduction(+ : violations) \
    reduction(max : worst)
  for (std::int64_t t = 0; t < count; ++t) {
    try {
      const StructureVerdict verdict = structure_check(n, h, sample(n, h, seed, static_cast<std::uint64_t>(t)));
      if (!verdict.pass) ++violations;
      worst = std::max(worst, verdict.profile.small_total);
    } catch (...) {
#pragma omp critical(hqx_trial_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return {n.value(), h, trials, seed, violations, worst};
}

}  // namespace

TrialReport structure_trials(CubeDim n, int h, std::uint64_t trials, std::uint64_t seed, const Options& opts) {
  return run_trials(n, h, trials, seed, opts, uniform_trial_faults);
}

TrialReport adversarial_trials(CubeDim n, int h, std::uint64_t trials, std::uint64_t seed, const Options& opts) {
  return run_trials(n, h, trials, seed, opts, adversarial_trial_faults);
}

}  // namespace hqx::oracle
