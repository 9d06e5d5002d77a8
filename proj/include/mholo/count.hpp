// Triplet-lattice counting: the closed |T(G)| formulas, the admissible
// count formulas, and regime-aware enumeration with formula comparison.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mholo/gamma.hpp"

namespace mholo {

// |T(G)|:
//   2 p^{m-r+min(r,n-r)}        when m <= n and m-r < r,
//   (p-1) p^{r-1+min(r,n-r)}    when m <= n and r <= m-r,
//   (p-1) p^{r-1}               when n <= m-r,
// and no closed value in the open regime.
std::optional<Int> closed_formula(const GroupParams& P);

// Admissible triplets mod the lattice, before the isomorphism filter:
//   2 p^{m-r+min(r,n-r)}  (m <= n, m-r < r),
//   p^{r+min(r,n-r)}      (m <= n, r <= m-r),
//   p^r                   (n <= m-r).
std::optional<Int> admissible_count_formula(const GroupParams& P);

enum class Checker { Fast, General };

struct CountReport {
  Int p;
  unsigned m = 0, n = 0, r = 0;
  Regime regime = Regime::OPEN;
  Int n_preadmissible, n_admissible, n_admissible_iso;
  std::optional<Int> formula_value;
  std::optional<bool> agreement;  // formula_value == n_admissible_iso
  std::optional<std::string> error;  // sweep-only: per-item failure
};

// Walks the whole lattice (a outer, b middle, d inner) tallying
// pre-admissible / admissible / admissible+iso triplets.
CountReport enumerate_counts(const GroupParams& P, Checker checker);
CountReport enumerate_counts(const GammaContext& ctx, Checker checker);

struct SweepRange {
  Int p;
  // Include every valid (m, n, r) with p^{m+n} <= max_group_order.
  unsigned long long max_group_order = 243;
};

// One report per valid (p, m, n, r), ordered lexicographically.  Per-item
// errors are recorded in the report, not thrown.
std::vector<CountReport> sweep(const std::vector<SweepRange>& ranges);

// The parameter tuples a sweep range would visit, in order.
std::vector<GroupParams> sweep_params(const SweepRange& range);

}  // namespace mholo
