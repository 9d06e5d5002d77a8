#include "mholo/gamma.hpp"

#include <algorithm>

namespace mholo {

GammaContext::GammaContext(const GroupParams& params)
    : P(params),
      gens(make_generators(params)),
      tilde(make_tilde(params, gens)),
      a0(solve_a0(params, gens)) {
  unsigned de = std::min(P.r, P.n - P.r);
  mpz_pow_ui(d_modulus.get_mpz_t(), P.p.get_mpz_t(), de);
}

Int GammaContext::u_t_pow(const Int& e) const {
  return pow_mod(tilde.u_t, e, P.pm);
}

Int GammaContext::v_t_pow(const Int& e, const Int& modulus) const {
  return pow_mod(mod_reduce(tilde.v_t, modulus), e, modulus);
}

GammaMap gamma_from_triplet(const Triplet& t, const GammaContext& ctx) {
  return {aut_pow(ctx.tilde.beta_t, t.b, ctx.P),
          compose(aut_pow(ctx.tilde.alpha_t, t.a, ctx.P),
                  aut_pow(ctx.tilde.delta_t, t.d, ctx.P), ctx.P)};
}

Automorphism gamma_apply(const GammaMap& gm, const GroupElement& sigma,
                         const GroupParams& P) {
  return compose(aut_pow(gm.psi_y, sigma.j, P), aut_pow(gm.psi_x, sigma.i, P),
                 P);
}

bool is_antihom(const GammaMap& gm, const GroupParams& P) {
  const Automorphism id = identity_aut();
  if (aut_pow(gm.psi_x, P.pm, P) != id) return false;
  if (aut_pow(gm.psi_y, P.pn, P) != id) return false;
  // psi_y^{-1} psi_x psi_y = psi_x^k, rewritten multiplication-only.
  return compose(gm.psi_x, gm.psi_y, P) ==
         compose(gm.psi_y, aut_pow(gm.psi_x, P.k, P), P);
}

bool is_equivariant(const GammaMap& gm, const GammaContext& ctx) {
  const GroupParams& P = ctx.P;
  const GroupElement x{1, 0}, y{0, 1};
  for (const Automorphism* phi :
       {&ctx.gens.alpha, &ctx.gens.beta, &ctx.gens.gamma, &ctx.gens.delta}) {
    Automorphism phi_inv = inverse_aut(*phi, P);
    Automorphism lhs_x = gamma_apply(gm, apply(*phi, x, P), P);
    Automorphism rhs_x = compose(compose(*phi, gm.psi_x, P), phi_inv, P);
    if (lhs_x != rhs_x) return false;
    Automorphism lhs_y = gamma_apply(gm, apply(*phi, y, P), P);
    Automorphism rhs_y = compose(compose(*phi, gm.psi_y, P), phi_inv, P);
    if (lhs_y != rhs_y) return false;
  }
  return true;
}

bool is_preadmissible(const Triplet& t, const GammaContext& ctx) {
  const GroupParams& P = ctx.P;
  Int ua_inv = inv_mod(ctx.u_t_pow(t.a), P.pm);
  Int lhs = mod_reduce(t.b * ua_inv, P.pr);
  Int rhs = mod_reduce(t.b * P.k, P.pr);
  return lhs == rhs;
}

namespace {

Int ppow(const Int& p, unsigned e) {
  Int v;
  mpz_pow_ui(v.get_mpz_t(), p.get_mpz_t(), e);
  return v;
}

}  // namespace

bool is_admissible_general(const Triplet& t, const GammaContext& ctx) {
  const GroupParams& P = ctx.P;
  if (!is_preadmissible(t, ctx)) return false;
  Int ua = ctx.u_t_pow(t.a);
  Int ua_inv = inv_mod(ua, P.pm);
  Int vd = ctx.v_t_pow(t.d, P.pm);
  // (a): u~^{-a} v~^d = 1 + b p^{m-r} mod p^{min(m,n)}
  Int mod_a = ppow(P.p, std::min(P.m, P.n));
  if (mod_reduce(ua_inv * vd, mod_a) != mod_reduce(1 + t.b * P.pmr, mod_a)) {
    return false;
  }
  // eqn1: a0 (u~^{-a} - 1) = 0 mod p^{m-1}
  Int mod_1 = ppow(P.p, P.m - 1);
  if (mod_reduce(ctx.a0 * (ua_inv - 1), mod_1) != 0) return false;
  // eqn2: u~^{-a} v~^d = 1 mod p^{min(m-r,n)}
  Int mod_2 = ppow(P.p, std::min(P.m - P.r, P.n));
  if (mod_reduce(ua_inv * vd, mod_2) != 1) return false;
  // (c), with q = p^{max(n-m+r,0)}:
  //   u~^{aq} (1 + b p^{m-r} S(k, q))     = 1             mod p^m
  //   u~^{aq} b p^{m-r}                   = S(k^q, b p^{m-r}) mod p^m
  //   v~^{dq}                             = 1             mod p^n
  Int uaq = ctx.u_t_pow(t.a * P.q);
  if (mod_reduce(uaq * (1 + t.b * P.pmr * s_sum(P.k, P.q, P.pm)), P.pm) != 1) {
    return false;
  }
  Int kq = pow_mod(P.k, P.q, P.pm);
  if (mod_reduce(uaq * t.b * P.pmr, P.pm) !=
      s_sum(kq, t.b * P.pmr, P.pm)) {
    return false;
  }
  return ctx.v_t_pow(t.d * P.q, P.pn) == 1;
}

bool is_admissible_fast(const Triplet& t, const GammaContext& ctx) {
  const GroupParams& P = ctx.P;
  if (P.regime == Regime::M_LE_N) {
    Int ua_inv = inv_mod(ctx.u_t_pow(t.a), P.pm);
    Int vd = ctx.v_t_pow(t.d, P.pm);
    if (mod_reduce(ua_inv * vd, P.pm) != mod_reduce(1 + t.b * P.pmr, P.pm)) {
      return false;
    }
    Int mod_b = ppow(P.p, 2 * P.r > P.m ? 2 * P.r - P.m : 0);
    Int bres = mod_reduce(t.b, mod_b);
    return bres == 0 || bres == mod_reduce(Int(1), mod_b);
  }
  if (P.regime == Regime::N_LE_M_MINUS_R) {
    if (mod_reduce(ctx.u_t_pow(t.a) * (1 + t.b * P.pmr), P.pm) != 1) {
      return false;
    }
    return ctx.v_t_pow(t.d, P.pn) == 1;
  }
  throw RegimeUnsupported("fast admissibility criterion is undefined for "
                          "m-r < n < m");
}

Int mu_coord(const Int& a, const GammaContext& ctx) {
  const GroupParams& P = ctx.P;
  Int ua = ctx.u_t_pow(a);
  Int diff = ua - 1;
  if (diff % P.pmr != 0) throw InternalError("mu_coord: u~^a != 1 mod p^{m-r}");
  return mod_reduce(diff / P.pmr, P.pr);
}

Int nu_coord(const Int& d, const GammaContext& ctx) {
  const GroupParams& P = ctx.P;
  Int vd = ctx.v_t_pow(d, P.pm);
  Int diff = vd - 1;
  if (diff % P.pmr != 0) throw InternalError("nu_coord: v~^d != 1 mod p^{m-r}");
  return mod_reduce(diff / P.pmr, P.pr);
}

bool iso_criterion_mu(const Triplet& t, const GammaContext& ctx) {
  return mod_reduce(1 + mu_coord(t.a, ctx) - t.b, ctx.P.p) != 0;
}

Int twist_unit(const Triplet& t, const GammaContext& ctx) {
  const GroupParams& P = ctx.P;
  return mod_reduce(ctx.u_t_pow(t.a) * (1 + (1 - t.b) * P.pmr), P.pm);
}

IsoInvariant iso_invariant_unchecked(const Triplet& t,
                                     const GammaContext& ctx) {
  const GroupParams& P = ctx.P;
  Int w = twist_unit(t, ctx);
  IsoInvariant inv;
  if (w == 1) {
    // Twist trivial mod p^m: N_Gamma abelian.  The || convention breaks
    // down here, so cap at m-r+s = m.
    inv.s = P.r;
    inv.j = 1;
    return inv;
  }
  unsigned val = vp(w - 1, P.p);
  if (val < P.m - P.r) throw InternalError("iso_invariant: valuation < m-r");
  inv.s = val - (P.m - P.r);
  Int target = mod_reduce(1 + ppow(P.p, val), P.pm);
  auto j = discrete_log(target, w, PrimePower(P.p, P.m));
  if (!j || *j == 0 || *j % P.p == 0) {
    throw InternalError("iso_invariant: no valid j exponent");
  }
  inv.j = *j;
  return inv;
}

IsoInvariant iso_invariant(const Triplet& t, const GammaContext& ctx) {
  if (!is_admissible_general(t, ctx)) {
    throw InvalidParams("iso_invariant: triplet is not admissible");
  }
  return iso_invariant_unchecked(t, ctx);
}

RegularSubgroupReport analyze_triplet(const Triplet& t,
                                      const GammaContext& ctx) {
  RegularSubgroupReport report;
  report.triplet = t;
  report.preadmissible = is_preadmissible(t, ctx);
  report.admissible = report.preadmissible && is_admissible_general(t, ctx);
  if (report.admissible) {
    report.invariant = iso_invariant_unchecked(t, ctx);
    report.iso_to_G = report.invariant->s == 0;
    report.abelian = report.invariant->s >= ctx.P.r;
    report.r_presented = report.abelian ? 0 : ctx.P.r - report.invariant->s;
  }
  return report;
}

HolElement phi_x_element(const Triplet& t, const GammaContext& ctx) {
  return {{1, 0}, aut_pow(ctx.tilde.beta_t, t.b, ctx.P)};
}

HolElement phi_y_element(const Triplet& t, const GammaContext& ctx) {
  return {{0, 1},
          compose(aut_pow(ctx.tilde.alpha_t, t.a, ctx.P),
                  aut_pow(ctx.tilde.delta_t, t.d, ctx.P), ctx.P)};
}

std::vector<HolElement> n_gamma_elements(const Triplet& t,
                                         const GammaContext& ctx,
                                         const Budget& budget) {
  const GroupParams& P = ctx.P;
  std::size_t order = group_order_checked(P, budget.max_group_enum);
  GammaMap gm = gamma_from_triplet(t, ctx);
  if (!is_antihom(gm, P)) {
    throw InvalidParams("n_gamma_elements: triplet is not pre-admissible");
  }
  std::vector<HolElement> out;
  out.reserve(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    GroupElement sigma = element_at(idx, P);
    out.push_back({sigma, gamma_apply(gm, sigma, P)});
  }
  return out;
}

std::vector<Triplet> all_triplets(const GammaContext& ctx) {
  std::vector<Triplet> out;
  for (Int a = 0; a < ctx.P.pr; ++a) {
    for (Int b = 0; b < ctx.P.pr; ++b) {
      for (Int d = 0; d < ctx.d_modulus; ++d) {
        out.push_back({a, b, d});
      }
    }
  }
  return out;
}

Int a_lambda(const GammaContext& ctx) {
  const GroupParams& P = ctx.P;
  auto a = discrete_log(inv_mod(P.k, P.pm), ctx.tilde.u_t, PrimePower(P.p, P.m));
  if (!a) throw InternalError("a_lambda: k^{-1} not a power of u~");
  return *a;
}

}  // namespace mholo
