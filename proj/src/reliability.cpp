#include "hqx/reliability.hpp"

#include <array>
#include <optional>
#include <string>

#include "hqx/binomial.hpp"
#include "hqx/errors.hpp"
#include "hqx/isoperimetry.hpp"

namespace hqx {

namespace {

std::string nh(int n, int h) { return "(n=" + std::to_string(n) + ", h=" + std::to_string(h) + ")"; }

void check_h_range(int n, int h) {
  if (n < 3 || n > kMaxFormulaDim) throw range_error("f(h) needs 3 <= n <= 64, got n=" + std::to_string(n));
  if (h < 1 || h > 3 * n - 6) throw range_error("h outside [1, 3n-6] at " + nh(n, h));
}

std::array<RowGuard, 5> extra_rows(int n) {
  return {{{1, n - 3, 5}, {n - 2, n + 1, 5}, {n + 2, 2 * n - 4, 7}, {2 * n - 3, 2 * n, 7}, {2 * n + 1, 3 * n - 6, 9}}};
}

std::optional<ExtraConnRow> licensed_row(int n, int h) {
  if (n < 1 || n > kMaxFormulaDim || h < 1 || h > 3 * n - 6) return std::nullopt;
  const auto rows = extra_rows(n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].h_lo <= h && h <= rows[i].h_hi && n >= rows[i].n_min) return static_cast<ExtraConnRow>(i + 1);
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t f_of_h(int n, int h) {
  check_h_range(n, h);
  const auto hh = static_cast<std::uint64_t>(h);
  const auto nn = static_cast<std::uint64_t>(n);
  if (h <= n - 2) return hh - 1;
  if (h == n - 1 || h == n) return nn + 1;
  if (h == n + 1) return nn;
  if (h <= 2 * n - 3) return hh - 1;
  if (h == 2 * n - 2 || h == 2 * n - 1 || h == 2 * n + 1) return 2 * nn;
  if (h == 2 * n) return 2 * nn - 4;
  return hh - 1;
}

int structure_min_dim(int n, int h) {
  if (h <= n + 1) return 5;
  if (h <= 2 * n + 1) return 7;
  return 9;
}

bool structure_licensed(int n, int h) {
  return n >= 1 && n <= kMaxFormulaDim && h >= 1 && h <= 3 * n - 6 && n >= structure_min_dim(n, h);
}

StructureVerdict structure_check(CubeDim n, int h, const FaultSet& faults) {
  const int dims = n.value();
  if (faults.dim() != n) throw domain_error("fault set belongs to a different cube");
  if (!structure_licensed(dims, h)) {
    throw range_error("structure bound not proven at " + nh(dims, h) + ": needs 1 <= h <= 3n-6 and n >= " +
                      std::to_string(structure_min_dim(dims, h)));
  }
  const std::uint64_t threshold = min_boundary(dims, static_cast<std::uint64_t>(h));
  if (faults.size() >= threshold) {
    throw precondition_error("|S|=" + std::to_string(faults.size()) + " is not below b_v(h;Q_n)=" +
                             std::to_string(threshold) + " at " + nh(dims, h));
  }
  ComponentProfile profile = components(faults);
  const std::uint64_t bound = f_of_h(dims, h);
  const bool pass = !profile.sizes.empty() && profile.small_total <= bound;
  return {dims, h, faults.size(), threshold, std::move(profile), bound, pass};
}

ExtraConnEntry extra_connectivity(int n, int h_minus_1) {
  const int h = h_minus_1 + 1;
  const std::optional<ExtraConnRow> row = licensed_row(n, h);
  if (!row) {
    throw range_error("no licensed extra-connectivity row for " + nh(n, h) + " (h-1=" + std::to_string(h_minus_1) + ")");
  }
  const RowGuard guard = extra_rows(n)[static_cast<std::size_t>(*row) - 1];
  std::uint64_t order = static_cast<std::uint64_t>(h);
  if (*row == ExtraConnRow::row2) order = static_cast<std::uint64_t>(n - 2);
  if (*row == ExtraConnRow::row4) order = static_cast<std::uint64_t>(2 * n - 3);
  return {n, h_minus_1, min_boundary(n, order), *row, guard};
}

std::uint64_t witness_order(const ExtraConnEntry& entry) {
  switch (entry.row) {
    case ExtraConnRow::row2: return static_cast<std::uint64_t>(entry.n + 1);
    case ExtraConnRow::row4: return static_cast<std::uint64_t>(2 * entry.n);
    default: return static_cast<std::uint64_t>(entry.h_minus_1 + 1);
  }
}

ExtraConnTable extra_conn_table(int n) {
  if (n < 5 || n > kMaxFormulaDim) throw range_error("extra-connectivity table needs 5 <= n <= 64");
  ExtraConnTable table{n, {}, {}};
  for (int h = 1; h <= 3 * n - 6; ++h) {
    if (licensed_row(n, h)) {
      table.entries.push_back(extra_connectivity(n, h - 1));
    } else {
      table.gaps.push_back(h - 1);
    }
  }
  return table;
}

std::string to_string(ExtraConnRow row) { return "row" + std::to_string(static_cast<int>(row)); }

}  // namespace hqx
