// Reference implementations: one candidate at a time, through FaultSet and the
// hypercube module only. Slow but obviously correct.

#include <algorithm>
#include <limits>

#include "enumeration.hpp"
#include "hqx/binomial.hpp"
#include "hqx/oracle.hpp"
#include "hqx/reliability.hpp"

namespace hqx::oracle::serial {

using detail::check_budget;
using detail::first_combination;
using detail::next_combination;

OracleResult min_boundary_bruteforce(CubeDim n, std::uint64_t m, const Options& opts) {
  detail::check_enumeration_dim(n);
  const auto universe = static_cast<int>(n.vertex_count());
  if (m < 1 || m >= n.vertex_count()) throw domain_error("order m outside [1, 2^n - 1]");
  const std::uint64_t total = binom(universe, static_cast<int>(m));
  check_budget(total, opts.budget);

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<Vertex> best_combo;
  std::vector<Vertex> combo = first_combination(m);
  do {
    const std::uint64_t value = vertex_boundary(FaultSet(n, combo)).size();
    if (value < best) {
      best = value;
      best_combo = combo;
    }
  } while (next_combination(combo, universe));
  return {n.value(), m, true, best, FaultSet(n, best_combo), total};
}

OracleResult extra_conn_bruteforce(CubeDim n, int h_minus_1, const Options& opts) {
  detail::check_enumeration_dim(n);
  if (h_minus_1 < 0) throw domain_error("h-1 must be nonnegative");
  const auto universe = static_cast<int>(n.vertex_count());
  const auto min_order = static_cast<std::uint64_t>(h_minus_1) + 1;

  std::uint64_t explored = 0;
  for (int k = 1; k <= universe - 2; ++k) {
    const std::uint64_t level = binom(universe, k);
    check_budget(explored + level, opts.budget);
    std::vector<Vertex> combo = first_combination(static_cast<std::uint64_t>(k));
    do {
      const FaultSet cut(n, combo);
      const ComponentProfile profile = components(cut);
      if (profile.sizes.size() >= 2 && profile.sizes.back() >= min_order) {
        explored += detail::lex_rank(combo, universe) + 1;
        return {n.value(), static_cast<std::uint64_t>(h_minus_1), true, static_cast<std::uint64_t>(k), cut, explored};
      }
    } while (next_combination(combo, universe));
    explored += level;
  }
  return {n.value(), static_cast<std::uint64_t>(h_minus_1), false, 0, FaultSet(n), explored};
}

namespace {

template <typename Sampler>
TrialReport run_trials(CubeDim n, int h, std::uint64_t trials, std::uint64_t seed, Sampler sample) {
  check_trial_guard(n, h);
  TrialReport report{n.value(), h, trials, seed, 0, 0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const StructureVerdict verdict = structure_check(n, h, sample(n, h, seed, t));
    if (!verdict.pass) ++report.violations;
    report.worst_small_total = std::max(report.worst_small_total, verdict.profile.small_total);
  }
  return report;
}

}  // namespace

TrialReport structure_trials(CubeDim n, int h, std::uint64_t trials, std::uint64_t seed) {
  return run_trials(n, h, trials, seed, uniform_trial_faults);
}

TrialReport adversarial_trials(CubeDim n, int h, std::uint64_t trials, std::uint64_t seed) {
  return run_trials(n, h, trials, seed, adversarial_trial_faults);
}

}  // namespace hqx::oracle::serial
