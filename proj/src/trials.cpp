#include <algorithm>
#include <string>

#include "hqx/errors.hpp"
#include "hqx/isoperimetry.hpp"
#include "hqx/oracle.hpp"
#include "hqx/reliability.hpp"
#include "hqx/rng.hpp"

namespace hqx::oracle {

namespace {

// Moves a uniformly chosen k-subset of `pool` to its front.
void partial_shuffle(std::vector<Vertex>& pool, std::size_t k, TrialRng& rng) {
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
}

}  // namespace

void check_trial_guard(CubeDim n, int h) {
  const int dims = n.value();
  if (dims < 5 || dims > 16) throw range_error("trial harness supports 5 <= n <= 16, got n=" + std::to_string(dims));
  if (!structure_licensed(dims, h)) {
    throw range_error("structure bound not proven at n=" + std::to_string(dims) + ", h=" + std::to_string(h));
  }
}

FaultSet uniform_trial_faults(CubeDim n, int h, std::uint64_t seed, std::uint64_t trial) {
  TrialRng rng(seed, trial);
  const std::uint64_t threshold = min_boundary(n.value(), static_cast<std::uint64_t>(h));
  const std::uint64_t size = rng.below(threshold);
  const std::uint64_t universe = n.vertex_count();

  // Floyd's sampler: `size` draws, each set of that size equally likely.
  FaultSet faults(n);
  for (std::uint64_t j = universe - size; j < universe; ++j) {
    const auto pick = static_cast<Vertex>(rng.below(j + 1));
    if (!faults.insert(pick)) faults.insert(static_cast<Vertex>(j));
  }
  return faults;
}

FaultSet adversarial_trial_faults(CubeDim n, int h, std::uint64_t seed, std::uint64_t trial) {
  TrialRng rng(seed, trial);
  const int dims = n.value();
  const std::uint64_t cap = min_boundary(dims, static_cast<std::uint64_t>(h)) - 1;
  const std::uint64_t orders = std::min<std::uint64_t>(f_of_h(dims, h) + 1, 3 * static_cast<std::uint64_t>(dims) - 2);
  const std::uint64_t order = 1 + rng.below(orders);

  std::vector<Vertex> pool = vertex_boundary(witness_set(dims, order).vertices).members();
  // 0: whole boundary, 1: whole boundary plus padding, 2: part of it plus padding.
  const std::uint64_t mode = rng.below(3);
  std::size_t keep = std::min<std::size_t>(pool.size(), static_cast<std::size_t>(cap));
  if (mode == 2) keep = static_cast<std::size_t>(rng.below(keep + 1));
  if (keep < pool.size()) partial_shuffle(pool, keep, rng);

  FaultSet faults(n, pool);
  if (mode != 0) {
    const std::uint64_t target = faults.size() + rng.below(cap - faults.size() + 1);
    while (faults.size() < target) faults.insert(static_cast<Vertex>(rng.below(n.vertex_count())));
  }
  return faults;
}

}  // namespace hqx::oracle
