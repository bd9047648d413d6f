#include "hqx/isoperimetry.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hqx/binomial.hpp"
#include "hqx/errors.hpp"

namespace hqx {

namespace {

void check_formula_dim(int n) {
  if (n < 1 || n > kMaxFormulaDim) {
    throw domain_error("dimension must lie in [1, 64], got " + std::to_string(n));
  }
}

void check_order(int n, std::uint64_t m) {
  check_formula_dim(n);
  if (m < 1 || m > max_proper_order(n)) {
    throw domain_error("order m=" + std::to_string(m) + " outside [1, 2^" + std::to_string(n) + " - 1]");
  }
}

struct RowSpan {
  std::int64_t lo;
  std::int64_t hi;
};

std::array<RowSpan, 7> closed_form_rows(std::int64_t n) {
  return {{{1, 1},
           {2, n + 1},
           {n + 2, 2 * n - 1},
           {2 * n, 3 * n - 3},
           {3 * n - 2, 4 * n - 6},
           {4 * n - 5, 5 * n - 10},
           {5 * n - 9, 6 * n - 15}}};
}

// Twice the row polynomial, so every coefficient is an integer.
std::int64_t doubled_row_value(int row, std::int64_t n, std::int64_t m) {
  const std::int64_t q = -m * m;
  switch (row) {
    case 1: return 2 * n;
    case 2: return q + (2 * n - 1) * m + 2;
    case 3: return q + (4 * n - 3) * m - 2 * n * n + 4;
    case 4: return q + (6 * n - 7) * m - 6 * n * n + 8 * n + 4;
    case 5: return q + (8 * n - 13) * m - 12 * n * n + 30 * n - 8;
    case 6: return q + (10 * n - 21) * m - 20 * n * n + 72 * n - 48;
    case 7: return q + (12 * n - 31) * m - 30 * n * n + 140 * n - 138;
    default: throw range_error("closed-form row " + std::to_string(row) + " does not exist");
  }
}

std::int64_t bv(int n, std::uint64_t m) { return static_cast<std::int64_t>(min_boundary(n, m)); }

int term_at(const CascadeRep& rep, int j) {
  if (j < rep.s || j > rep.r) return -1;
  return rep.terms[static_cast<std::size_t>(j - rep.s)].m_j;
}

}  // namespace

CascadeRep cascade_decompose(int n, std::uint64_t m) {
  check_order(n, m);
  CascadeRep rep;
  rep.n = n;
  rep.m = m;

  // Peel whole layers C(n,n), C(n,n-1), ... while they fit strictly below m.
  // The running sum never exceeds 2^n - 1 because r stops at 1 at the latest.
  std::uint64_t tail = 0;
  int r = n;
  while (m > tail + binom(n, r)) {
    tail += binom(n, r);
    --r;
  }
  rep.r = r;
  rep.m_prime = m - tail;

  // Greedy cascade: largest m_j with C(m_j, j) <= remainder, for j = r, r-1, ...
  std::uint64_t rem = rep.m_prime;
  int ceiling = n;
  for (int j = r; j >= 1 && rem > 0; --j) {
    int a = j;
    while (a + 1 <= ceiling && binom(a + 1, j) <= rem) ++a;
    rem -= binom(a, j);
    rep.terms.push_back({j, a});
    rep.s = j;
    ceiling = a - 1;
  }
  if (rem != 0) throw std::logic_error("cascade greedy left a remainder");
  std::reverse(rep.terms.begin(), rep.terms.end());
  return rep;
}

std::uint64_t cascade_value(const CascadeRep& rep) {
  std::uint64_t m = 0;
  for (int i = rep.r + 1; i <= rep.n; ++i) m += binom(rep.n, i);
  for (const CascadeTerm& t : rep.terms) m += binom(t.m_j, t.j);
  return m;
}

BoundaryValue boundary_cascade(int n, std::uint64_t m) {
  const CascadeRep rep = cascade_decompose(n, m);
  // C(n,r) >= m' by construction; every partial sum stays below 2^n.
  std::uint64_t value = binom(n, rep.r) - rep.m_prime;
  for (const CascadeTerm& t : rep.terms) value += binom(t.m_j, t.j - 1);
  return {value, BoundarySource::cascade};
}

std::uint64_t min_boundary(int n, std::uint64_t m) { return boundary_cascade(n, m).value; }

std::optional<int> closed_form_row(int n, std::uint64_t m) {
  check_formula_dim(n);
  const std::int64_t nn = n;
  if (m < 1 || m > max_proper_order(n) || static_cast<std::int64_t>(m) > 6 * nn - 15) return std::nullopt;
  const auto mm = static_cast<std::int64_t>(m);
  const auto rows = closed_form_rows(nn);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].lo <= mm && mm <= rows[i].hi) return static_cast<int>(i + 1);
  }
  return std::nullopt;
}

BoundaryValue boundary_closed_form(int n, std::uint64_t m) {
  const std::optional<int> row = closed_form_row(n, m);
  if (!row) {
    throw range_error("no closed-form row covers m=" + std::to_string(m) + " for n=" + std::to_string(n) +
                      "; use boundary_cascade");
  }
  const std::int64_t twice = doubled_row_value(*row, n, static_cast<std::int64_t>(m));
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("closed-form row produced a non-integer value");
  return {static_cast<std::uint64_t>(twice / 2), BoundarySource::closed_form};
}

std::strong_ordering compare_cascade(const CascadeRep& a, const CascadeRep& b) {
  if (a.n != b.n) throw domain_error("cannot compare representations of different dimensions");
  if (a.m == b.m) throw domain_error("compare_cascade needs two different integers");
  if (a.r != b.r) return a.r > b.r ? std::strong_ordering::less : std::strong_ordering::greater;
  for (int j = a.r; j >= 1; --j) {
    const int x = term_at(a, j);
    const int y = term_at(b, j);
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

std::int64_t dimension_difference(int n, int h) {
  if (n < 5 || n > kMaxFormulaDim) throw range_error("dimension_difference needs 5 <= n <= 64");
  if (h < 2 || h > 2 * n - 1) {
    throw range_error("dimension_difference needs 2 <= h <= 2n-1, got h=" + std::to_string(h));
  }
  return bv(n, static_cast<std::uint64_t>(h)) - bv(n - 1, static_cast<std::uint64_t>(h - 1));
}

std::string to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::plateau: return "plateau";
    case ClaimKind::strict_run: return "strict_run";
    case ClaimKind::jump: return "jump";
    case ClaimKind::difference: return "difference";
  }
  return "?";
}

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::not_applicable: return "n/a";
  }
  return "?";
}

std::vector<IdentityRecord> plateau_identities(int n) {
  if (n < 5 || n > kMaxFormulaDim) throw range_error("plateau identities need 5 <= n <= 64");
  std::vector<IdentityRecord> out;
  const std::int64_t nn = n;

  for (int i = 1; i <= 5; ++i) {
    const std::int64_t base = i * nn - i * (i - 1) / 2;
    const auto at = [](std::int64_t m) { return static_cast<std::uint64_t>(m); };

    // b(base-1) = b(base) = b(base-2) + 1 = b(base+1) + 1, checked as stated
    // for every n >= 5. It is false at (n, i) = (5, 4), (5, 5), (6, 5).
    IdentityRecord plateau{ClaimKind::plateau, n, i, {at(base - 1), at(base), at(base - 2), at(base + 1)}, {}, {}};
    plateau.values = {bv(n, at(base - 1)), bv(n, at(base)), bv(n, at(base - 2)) + 1, bv(n, at(base + 1)) + 1};
    const auto& v = plateau.values;
    plateau.status = (v[0] == v[1] && v[1] == v[2] && v[2] == v[3]) ? ClaimStatus::pass : ClaimStatus::fail;
    out.push_back(std::move(plateau));

    IdentityRecord jump{ClaimKind::jump, n, i, {at(base + 2), at(base)}, {}, ClaimStatus::not_applicable};
    if (n - i >= 4) {
      jump.values = {bv(n, at(base + 2)), bv(n, at(base))};
      jump.status = jump.values[0] > jump.values[1] ? ClaimStatus::pass : ClaimStatus::fail;
    }
    out.push_back(std::move(jump));
  }

  const std::array<RowSpan, 6> runs{{{1, nn - 2},
                                     {nn + 1, 2 * nn - 3},
                                     {2 * nn, 3 * nn - 5},
                                     {3 * nn - 2, 4 * nn - 8},
                                     {4 * nn - 5, 5 * nn - 12},
                                     {5 * nn - 9, 6 * nn - 17}}};
  for (std::size_t k = 0; k < runs.size(); ++k) {
    IdentityRecord run{ClaimKind::strict_run, n, static_cast<int>(k + 1), {}, {}, ClaimStatus::not_applicable};
    if (runs[k].lo <= runs[k].hi) {
      run.status = ClaimStatus::pass;
      for (std::int64_t m = runs[k].lo; m <= runs[k].hi + 1; ++m) {
        run.orders.push_back(static_cast<std::uint64_t>(m));
        run.values.push_back(bv(n, static_cast<std::uint64_t>(m)));
        const std::size_t last = run.values.size() - 1;
        if (last > 0 && run.values[last - 1] >= run.values[last]) run.status = ClaimStatus::fail;
      }
    }
    out.push_back(std::move(run));
  }
  return out;
}

std::vector<IdentityRecord> difference_identities(int n) {
  if (n < 5 || n > kMaxFormulaDim) throw range_error("difference identities need 5 <= n <= 64");
  std::vector<IdentityRecord> out;
  for (int h = 2; h <= 2 * n - 1; ++h) {
    const std::int64_t diff = dimension_difference(n, h);
    const std::int64_t expected = h <= n + 1 ? n - 1 : h - 2;
    IdentityRecord rec{ClaimKind::difference,
                       n,
                       h,
                       {static_cast<std::uint64_t>(h), static_cast<std::uint64_t>(h - 1)},
                       {bv(n, static_cast<std::uint64_t>(h)), bv(n - 1, static_cast<std::uint64_t>(h - 1)), diff, expected},
                       diff == expected ? ClaimStatus::pass : ClaimStatus::fail};
    out.push_back(std::move(rec));
  }
  return out;
}

std::string to_string(WitnessFamily family) {
  switch (family) {
    case WitnessFamily::star: return "star";
    case WitnessFamily::star2: return "star2";
    case WitnessFamily::star3: return "star3";
  }
  return "?";
}

WitnessSet witness_set(int n, std::uint64_t m) {
  const CubeDim dim(n);
  const auto nn = static_cast<std::uint64_t>(n);
  if (m < 1 || m > 3 * nn - 2) {
    throw range_error("witness order m=" + std::to_string(m) + " outside [1, 3n-2] for n=" + std::to_string(n));
  }
  const auto flip = [](int dimension) { return Vertex{1} << (dimension - 1); };

  FaultSet set(dim);
  set.insert(0);
  WitnessFamily family;
  if (m <= nn + 1) {
    family = WitnessFamily::star;
    for (int d = 1; d <= static_cast<int>(m) - 1; ++d) set.insert(flip(d));
  } else {
    for (int d = 1; d <= n; ++d) set.insert(flip(d));
    if (m <= 2 * nn) {
      family = WitnessFamily::star2;
      for (int j = 2; j <= static_cast<int>(m - nn); ++j) set.insert(flip(1) | flip(j));
    } else {
      family = WitnessFamily::star3;
      for (int j = 2; j <= n; ++j) set.insert(flip(1) | flip(j));
      const int k = static_cast<int>(m + 1 - 2 * nn);
      for (int i = 2; i <= k; ++i) set.insert(flip(i) | flip(n));
    }
  }
  if (set.size() != m) throw std::logic_error("witness construction produced the wrong order");
  return {n, m, family, std::move(set)};
}

std::uint64_t star_boundary_size(int n, std::uint64_t m) {
  if (n < 1 || m < 1 || m > static_cast<std::uint64_t>(n) + 1) {
    throw range_error("star boundary formula needs 1 <= m <= n+1");
  }
  const auto nn = static_cast<std::uint64_t>(n);
  return (nn - m + 1) + (nn - 1) * (m - 1) - binom(static_cast<int>(m - 1), 2);
}

}  // namespace hqx
