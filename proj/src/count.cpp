#include "mholo/count.hpp"

#include <algorithm>

namespace mholo {

namespace {

Int ppow(const Int& p, unsigned e) {
  Int v;
  mpz_pow_ui(v.get_mpz_t(), p.get_mpz_t(), e);
  return v;
}

}  // namespace

std::optional<Int> closed_formula(const GroupParams& P) {
  unsigned mind = std::min(P.r, P.n - P.r);
  switch (P.regime) {
    case Regime::M_LE_N:
      if (P.m - P.r < P.r) return 2 * ppow(P.p, P.m - P.r + mind);
      return (P.p - 1) * ppow(P.p, P.r - 1 + mind);
    case Regime::N_LE_M_MINUS_R:
      return (P.p - 1) * ppow(P.p, P.r - 1);
    case Regime::OPEN:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Int> admissible_count_formula(const GroupParams& P) {
  unsigned mind = std::min(P.r, P.n - P.r);
  switch (P.regime) {
    case Regime::M_LE_N:
      if (P.m - P.r < P.r) return 2 * ppow(P.p, P.m - P.r + mind);
      return ppow(P.p, P.r + mind);
    case Regime::N_LE_M_MINUS_R:
      return ppow(P.p, P.r);
    case Regime::OPEN:
      return std::nullopt;
  }
  return std::nullopt;
}

CountReport enumerate_counts(const GammaContext& ctx, Checker checker) {
  const GroupParams& P = ctx.P;
  if (checker == Checker::Fast && P.regime == Regime::OPEN) {
    throw RegimeUnsupported("fast checker requested in the open regime");
  }
  CountReport report;
  report.p = P.p;
  report.m = P.m;
  report.n = P.n;
  report.r = P.r;
  report.regime = P.regime;
  report.n_preadmissible = 0;
  report.n_admissible = 0;
  report.n_admissible_iso = 0;
  for (Int a = 0; a < P.pr; ++a) {
    for (Int b = 0; b < P.pr; ++b) {
      for (Int d = 0; d < ctx.d_modulus; ++d) {
        Triplet t{a, b, d};
        if (!is_preadmissible(t, ctx)) continue;
        ++report.n_preadmissible;
        bool adm = checker == Checker::Fast ? is_admissible_fast(t, ctx)
                                            : is_admissible_general(t, ctx);
        if (!adm) continue;
        ++report.n_admissible;
        if (iso_criterion_mu(t, ctx)) ++report.n_admissible_iso;
      }
    }
  }
  report.formula_value = closed_formula(P);
  if (report.formula_value) {
    report.agreement = *report.formula_value == report.n_admissible_iso;
  }
  return report;
}

CountReport enumerate_counts(const GroupParams& P, Checker checker) {
  GammaContext ctx(P);
  return enumerate_counts(ctx, checker);
}

std::vector<GroupParams> sweep_params(const SweepRange& range) {
  std::vector<GroupParams> out;
  Int bound = to_int(range.max_group_order);
  for (unsigned m = 2;; ++m) {
    if (ppow(range.p, m + 1) > bound) break;  // smallest n is 1
    for (unsigned n = 1; ppow(range.p, m + n) <= bound; ++n) {
      for (unsigned r = 1; r <= std::min(n, m - 1); ++r) {
        out.push_back(GroupParams::make(range.p, m, n, r));
      }
    }
  }
  return out;
}

std::vector<CountReport> sweep(const std::vector<SweepRange>& ranges) {
  std::vector<CountReport> out;
  for (const SweepRange& range : ranges) {
    for (const GroupParams& P : sweep_params(range)) {
      try {
        out.push_back(enumerate_counts(P, Checker::General));
      } catch (const std::exception& e) {
        CountReport failed;
        failed.p = P.p;
        failed.m = P.m;
        failed.n = P.n;
        failed.r = P.r;
        failed.regime = P.regime;
        failed.error = e.what();
        out.push_back(std::move(failed));
      }
    }
  }
  return out;
}

}  // namespace mholo
