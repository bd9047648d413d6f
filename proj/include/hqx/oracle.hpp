#pragma once

// Ground truth by exhaustion and by seeded fault injection.
//
// Two implementations of every engine are kept side by side:
//  * hqx::oracle (oracle_parallel.cpp): OpenMP kernels over 64-bit vertex
//    masks, n <= 6;
//  * hqx::oracle::serial (oracle_serial.cpp): plain loops over FaultSet and the
//    hypercube module, used as the reference in tests and benchmarks.
// Both return identical results, including witnesses and explored counts.

#include <cstdint>
#include <vector>

#include "hqx/hypercube.hpp"

namespace hqx::oracle {

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;
inline constexpr int kMaxEnumerationDim = 6;

struct Options {
  std::uint64_t budget = kDefaultBudget;
  int threads = 0;  // 0: OpenMP default team size
};

struct OracleResult {
  int n;
  std::uint64_t parameter;  // m, or h-1
  bool found;
  std::uint64_t value;      // 0 when !found
  FaultSet witness;         // empty when !found
  std::uint64_t explored;
};

struct TrialReport {
  int n;
  int h;
  std::uint64_t trials;
  std::uint64_t seed;
  std::uint64_t violations;
  std::uint64_t worst_small_total;

  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

/// Minimum |N(S)| over all m-subsets, with the lexicographically first
/// minimizer. Throws budget_exceeded when C(2^n, m) > budget.
OracleResult min_boundary_bruteforce(CubeDim n, std::uint64_t m, const Options& opts = {});

/// Smallest k with a k-set S such that Q_n - S is disconnected and every
/// component has at least h_minus_1 + 1 vertices. The witness is the
/// lexicographically first such set of that size. found == false when no size
/// up to 2^n - 2 works. Throws budget_exceeded before starting a size that
/// would push the explored total past the budget.
OracleResult extra_conn_bruteforce(CubeDim n, int h_minus_1, const Options& opts = {});

/// Uniform fault injection: |S| uniform in [0, b_v(h)-1], S uniform of that size.
TrialReport structure_trials(CubeDim n, int h, std::uint64_t trials, std::uint64_t seed, const Options& opts = {});

/// Fault sets built from boundaries of witness sets of order <= f(h)+1.
TrialReport adversarial_trials(CubeDim n, int h, std::uint64_t trials, std::uint64_t seed, const Options& opts = {});

/// The fault set of one trial; shared by the parallel and serial drivers.
FaultSet uniform_trial_faults(CubeDim n, int h, std::uint64_t seed, std::uint64_t trial);
FaultSet adversarial_trial_faults(CubeDim n, int h, std::uint64_t seed, std::uint64_t trial);

/// Throws range_error unless structure trials are licensed for (n, h).
void check_trial_guard(CubeDim n, int h);

namespace serial {

OracleResult min_boundary_bruteforce(CubeDim n, std::uint64_t m, const Options& opts = {});
OracleResult extra_conn_bruteforce(CubeDim n, int h_minus_1, const Options& opts = {});
TrialReport structure_trials(CubeDim n, int h, std::uint64_t trials, std::uint64_t seed);
TrialReport adversarial_trials(CubeDim n, int h, std::uint64_t trials, std::uint64_t seed);

}  // namespace serial

}  // namespace hqx::oracle
