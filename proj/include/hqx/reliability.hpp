#pragma once

// Fault-tolerance consequences of the minimum boundary numbers:
//
//  * f(h), the largest total order of the small components of Q_n - S when
//    |S| < b_v(h; Q_n), and a checker for that structure claim;
//  * the (h-1)-extra connectivity of Q_n on the five licensed (n, h) ranges.
//
// "Small components" means every component of Q_n - S except one of maximum
// order (ties go to the component holding the smallest label).

#include <cstdint>
#include <string>
#include <vector>

#include "hqx/hypercube.hpp"

namespace hqx {

/// Piecewise bound, defined for 1 <= h <= 3n-6.
std::uint64_t f_of_h(int n, int h);

/// Smallest n for which the structure bound is proven at this h:
/// 5 for h <= n+1, 7 for n+2 <= h <= 2n+1, 9 for 2n+2 <= h <= 3n-6.
int structure_min_dim(int n, int h);

/// True when 1 <= h <= 3n-6 and n meets structure_min_dim(n, h).
bool structure_licensed(int n, int h);

struct StructureVerdict {
  int n;
  int h;
  std::uint64_t fault_size;
  std::uint64_t threshold;  // b_v(h; Q_n)
  ComponentProfile profile;
  std::uint64_t bound;      // f(h)
  bool pass;
};

/// Throws range_error outside the licensed (n, h) region and
/// precondition_error when |S| >= b_v(h; Q_n).
StructureVerdict structure_check(CubeDim n, int h, const FaultSet& faults);

enum class ExtraConnRow { row1 = 1, row2, row3, row4, row5 };

struct RowGuard {
  int h_lo;
  int h_hi;
  int n_min;
};

struct ExtraConnEntry {
  int n;
  int h_minus_1;
  std::uint64_t value;
  ExtraConnRow row;
  RowGuard guard;
};

/// kappa_{h-1}(Q_n). Rows 1, 3, 5 give b_v(h), row 2 gives b_v(n-2), row 4
/// gives b_v(2n-3). Throws range_error outside every row's guard.
ExtraConnEntry extra_connectivity(int n, int h_minus_1);

/// Order of the witness set whose boundary realizes the entry: h on rows
/// 1, 3, 5; n+1 on row 2; 2n on row 4.
std::uint64_t witness_order(const ExtraConnEntry& entry);

struct ExtraConnTable {
  int n;
  std::vector<ExtraConnEntry> entries;  // ascending h
  std::vector<int> gaps;                // h-1 values in [0, 3n-7] with no licensed row
};

ExtraConnTable extra_conn_table(int n);

std::string to_string(ExtraConnRow row);

}  // namespace hqx
