#pragma once

// Minimum m-vertex-boundary numbers b_v(m; Q_n) of the hypercube.
//
// Every 1 <= m <= 2^n - 1 is written as
//
//     m  = C(n,n) + C(n,n-1) + ... + C(n,r+1) + m',   0 < m' <= C(n,r)
//     m' = C(m_r,r) + C(m_{r-1},r-1) + ... + C(m_s,s), 1 <= s <= m_s < ... < m_r
//
// and the minimum boundary is C(n,r) - m' + sum_j C(m_j, j-1). That cascade
// evaluation is the reference value; the quadratic rows in
// boundary_closed_form() cover 1 <= m <= 6n-15 and must agree with it.
//
// Formula code takes n as a plain int in [1, 64]; all values are exact
// uint64 (b_v(m) <= 2^n - m, so nothing overflows).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hqx/hypercube.hpp"

namespace hqx {

struct CascadeTerm {
  int j;    // binomial lower index
  int m_j;  // binomial upper index
  friend bool operator==(const CascadeTerm&, const CascadeTerm&) = default;
};

struct CascadeRep {
  int n = 0;
  std::uint64_t m = 0;
  int r = 0;
  int s = 0;
  std::uint64_t m_prime = 0;
  std::vector<CascadeTerm> terms;  // ascending j, from s to r

  friend bool operator==(const CascadeRep&, const CascadeRep&) = default;
};

enum class BoundarySource { cascade, closed_form };

struct BoundaryValue {
  std::uint64_t value = 0;
  BoundarySource source = BoundarySource::cascade;
};

CascadeRep cascade_decompose(int n, std::uint64_t m);

/// m rebuilt from the representation fields alone.
std::uint64_t cascade_value(const CascadeRep& rep);

BoundaryValue boundary_cascade(int n, std::uint64_t m);

/// Shorthand for boundary_cascade(n, m).value.
std::uint64_t min_boundary(int n, std::uint64_t m);

/// Closed-form row (1..7) that covers m for this n, if any. Rows with an
/// empty interval for this n never match.
std::optional<int> closed_form_row(int n, std::uint64_t m);

/// Throws range_error when no row applies; use boundary_cascade there.
BoundaryValue boundary_closed_form(int n, std::uint64_t m);

/// Order of a and b judged from representation fields only.
std::strong_ordering compare_cascade(const CascadeRep& a, const CascadeRep& b);

/// b_v(h; Q_n) - b_v(h-1; Q_{n-1}) for n >= 5 and 2 <= h <= 2n-1.
std::int64_t dimension_difference(int n, int h);

enum class ClaimKind { plateau, strict_run, jump, difference };
enum class ClaimStatus { pass, fail, not_applicable };

std::string to_string(ClaimKind kind);
std::string to_string(ClaimStatus status);

// One checked identity. `orders` are the m arguments in the order the claim
// reads them; `values` are the matching b_v values (strict runs list the
// whole run).
struct IdentityRecord {
  ClaimKind kind;
  int n;
  int index;  // i for plateau/jump, run number for strict runs, h for differences
  std::vector<std::uint64_t> orders;
  std::vector<std::int64_t> values;
  ClaimStatus status;
};

/// Plateau equalities, strict increasing runs and jump inequalities for
/// i = 1..5. A jump claim is not_applicable unless n - i >= 4, and a strict
/// run is not_applicable when its interval is empty.
std::vector<IdentityRecord> plateau_identities(int n);

/// dimension_difference checked against n-1 (h <= n+1) and h-2 (h >= n+2).
std::vector<IdentityRecord> difference_identities(int n);

enum class WitnessFamily { star, star2, star3 };

std::string to_string(WitnessFamily family);

struct WitnessSet {
  int n;
  std::uint64_t m;
  WitnessFamily family;
  FaultSet vertices;
};

/// Connected extremal set of order m around u = 0^n, 1 <= m <= 3n-2:
///   star   (m <= n+1):      u, u^1 .. u^{m-1}
///   star2  (n+2 <= m <= 2n): u, all u^i, u^{12} .. u^{1(m-n)}
///   star3  (m >= 2n+1):     u, all u^i, u^{12} .. u^{1n}, u^{2n} .. u^{kn}, k = m+1-2n
WitnessSet witness_set(int n, std::uint64_t m);

/// |N(star)| = (n-m+1) + (n-1)(m-1) - C(m-1, 2), 1 <= m <= n+1.
std::uint64_t star_boundary_size(int n, std::uint64_t m);

}  // namespace hqx
