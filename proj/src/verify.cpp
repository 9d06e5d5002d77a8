#include "mholo/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace mholo {

namespace {

Int ppow(const Int& p, unsigned e) {
  Int v;
  mpz_pow_ui(v.get_mpz_t(), p.get_mpz_t(), e);
  return v;
}

std::string par_str(const GroupParams& P) {
  std::ostringstream out;
  out << '(' << P.p << ',' << P.m << ',' << P.n << ',' << P.r << ')';
  return out.str();
}

void fail(std::vector<Violation>& out, std::string check, std::string where,
          std::string detail) {
  out.push_back({std::move(check), std::move(where), std::move(detail)});
}

void check(std::vector<Violation>& out, bool ok, const std::string& name,
           const std::string& where, const std::string& detail = "") {
  if (!ok) fail(out, name, where, detail);
}

}  // namespace

std::vector<GroupParams> default_verify_params() {
  std::vector<GroupParams> out;
  for (unsigned m = 2; m <= 4; ++m) {
    for (unsigned n = 1; m + n <= 5; ++n) {
      for (unsigned r = 1; r <= std::min(n, m - 1); ++r) {
        out.push_back(GroupParams::make(3, m, n, r));
      }
    }
  }
  return out;
}

void verify_arith(std::vector<Violation>& out) {
  // Fast geometric sum against the naive one.
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    Int z = Int(static_cast<long>(rng() % 101)) - 50;
    unsigned long ell = rng() % 200;
    Int mod = ppow(Int(3 + 2 * (rng() % 3)), 1 + rng() % 5);  // 3,5,7 powers
    Int naive = 0, zp = 1;
    for (unsigned long t = 0; t < ell; ++t) {
      naive = mod_reduce(naive + zp, mod);
      zp = mod_reduce(zp * z, mod);
    }
    check(out, s_sum(z, Int(ell), mod) == naive, "arith.s_sum_naive",
          "z=" + z.get_str() + " ell=" + std::to_string(ell) +
              " mod=" + mod.get_str());
  }
  // z^{p^s} = 1 mod p^t iff z = 1 mod p^{t-s}, exhaustive for p=3, t <= 5.
  for (unsigned t = 1; t <= 5; ++t) {
    Int pt = ppow(3, t);
    for (unsigned s = 0; s < t; ++s) {
      Int ps = ppow(3, s), pts = ppow(3, t - s);
      for (Int z = 0; z < pt; ++z) {
        bool lhs = pow_mod(z, ps, pt) == 1;
        bool rhs = mod_reduce(z, pts) == 1;
        check(out, lhs == rhs, "arith.unit_order_lemma",
              "p=3 t=" + std::to_string(t) + " s=" + std::to_string(s) +
                  " z=" + z.get_str());
      }
    }
  }
  // vp(S(z,l)) = vp(l) for z = 1 mod p, l in [1, p^4].
  for (unsigned long p : {3ul, 5ul}) {
    Int pI(static_cast<unsigned long>(p));
    Int big = ppow(pI, 6);
    Int pmax = ppow(pI, 4);
    for (Int c = 0; c < pI * pI; ++c) {
      Int z = 1 + pI * c;
      for (Int ell = 1; ell <= pmax; ++ell) {
        Int s = s_sum(z, ell, big);
        bool ok = s != 0 && vp(s, pI) == vp(ell, pI);
        check(out, ok, "arith.s_sum_valuation",
              "p=" + pI.get_str() + " z=" + z.get_str() +
                  " ell=" + ell.get_str());
        if (!ok) return;  // avoid flooding
      }
    }
  }
  // (1+z p^{m-r})^l = 1 + l z p^{m-r} mod p^m whenever r <= m-r,
  // exhaustive for p=3, m <= 5.
  for (unsigned m = 2; m <= 5; ++m) {
    for (unsigned r = 1; 2 * r <= m; ++r) {
      Int pm = ppow(3, m), pmr = ppow(3, m - r);
      for (Int z = 0; z < ppow(3, r) + 2; ++z) {
        for (Int ell = 0; ell < pm; ++ell) {
          Int lhs = pow_mod(1 + z * pmr, ell, pm);
          Int rhs = mod_reduce(1 + ell * z * pmr, pm);
          check(out, lhs == rhs, "arith.k_power_lemma",
                "m=" + std::to_string(m) + " r=" + std::to_string(r) +
                    " z=" + z.get_str() + " ell=" + ell.get_str());
          Int slhs = s_sum(1 + z * pmr, ell, pm);
          Int srhs = mod_reduce(ell + ell * (ell - 1) / 2 * z * pmr, pm);
          check(out, slhs == srhs, "arith.k_power_sum",
                "m=" + std::to_string(m) + " r=" + std::to_string(r) +
                    " z=" + z.get_str() + " ell=" + ell.get_str());
        }
      }
    }
  }
}

void verify_group(const GroupParams& P, const Budget& budget,
                  std::vector<Violation>& out, uint64_t seed) {
  const std::string at = par_str(P);
  const GroupElement id = identity_element();
  const GroupElement x{1, 0}, y{0, 1};
  std::mt19937_64 rng(seed);
  auto random_elt = [&] {
    return GroupElement{Int(static_cast<unsigned long>(rng() % to_ull(P.pm))),
                        Int(static_cast<unsigned long>(rng() % to_ull(P.pn)))};
  };
  for (int trial = 0; trial < 30; ++trial) {
    GroupElement a = random_elt(), b = random_elt(), c = random_elt();
    check(out, mul(mul(a, b, P), c, P) == mul(a, mul(b, c, P), P),
          "group.associative", at);
    check(out, mul(a, id, P) == a && mul(id, a, P) == a, "group.identity", at);
    check(out, mul(a, inverse(a, P), P) == id, "group.inverse", at);
    GroupElement comm = commutator(a, b, P);
    check(out, comm.j == 0 && comm.i % P.pmr == 0,
          "group.commutator_in_x_pmr", at);
  }
  check(out, pow(x, P.pm, P) == id && pow(y, P.pn, P) == id &&
                 mul(y, x, P) == mul(pow(x, P.k, P), y, P),
        "group.presentation_relations", at);
  check(out, element_order(x, P) == P.pm && element_order(y, P) == P.pn,
        "group.generator_orders", at);
  check(out, mul(x, y, P) != mul(y, x, P), "group.nonabelian", at);

  if (P.order() <= 243) {
    // Closed-formula power against repeated multiplication, exhaustively.
    std::size_t order = group_order_checked(P, budget.max_group_enum);
    unsigned long long emax = to_ull(ppow(P.p, std::max(P.m, P.n)));
    for (std::size_t idx = 0; idx < order; ++idx) {
      GroupElement g = element_at(idx, P);
      GroupElement acc = id;
      for (unsigned long long e = 0; e <= emax; ++e) {
        if (pow(g, Int(static_cast<unsigned long>(e)), P) != acc) {
          fail(out, "group.pow_closed_form",
               at + " g=(" + g.i.get_str() + "," + g.j.get_str() + ")",
               "exponent " + std::to_string(e));
          break;
        }
        acc = mul(acc, g, P);
      }
      check(out, pow(g, Int(-1), P) == inverse(g, P), "group.pow_negative",
            at);
    }
  }

  // Centre: brute force vs <x^{p^r}, y^{p^r}> vs the divisibility shape.
  std::vector<GroupElement> z = center(P, budget);
  std::vector<GroupElement> expected;
  for (Int i = 0; i < P.pm; i += P.pr) {
    for (Int j = 0; j < P.pn; j += P.pr) {
      expected.push_back({i, j});
    }
  }
  std::sort(expected.begin(), expected.end());
  check(out, z == expected, "group.center_shape", at);
  std::vector<GroupElement> generated = subgroup_closure(
      {GroupElement{P.pr, 0}, GroupElement{0, mod_reduce(P.pr, P.pn)}}, P);
  check(out, z == generated, "group.center_generated", at);
  for (const GroupElement& g : z) {
    check(out, g.i % P.pr == 0, "group.center_i_divisible", at);
  }

  // exp(G/Z(G)) = p^r.
  {
    Int expq = 1;
    std::size_t order = group_order_checked(P, budget.max_group_enum);
    for (std::size_t idx = 0; idx < order; ++idx) {
      GroupElement g = element_at(idx, P);
      Int e = 1;
      while (!std::binary_search(z.begin(), z.end(), pow(g, e, P))) e *= P.p;
      expq = std::max(expq, e);
    }
    check(out, expq == P.pr, "group.exponent_mod_center", at,
          "got " + expq.get_str());
  }

  unsigned cls = nilpotency_class(P, budget);
  check(out, cls >= 2, "group.class_lower_bound", at);
  if (2 * P.r <= P.m) {
    check(out, cls == 2, "group.class_two", at,
          "got " + std::to_string(cls));
  }
}

void verify_aut(const GammaContext& ctx, const Budget& budget,
                std::vector<Violation>& out, uint64_t seed) {
  const GroupParams& P = ctx.P;
  const std::string at = par_str(P);
  const AutGenerators& gens = ctx.gens;
  const GroupElement x{1, 0}, y{0, 1};
  Int min_mn = ppow(P.p, std::min(P.m, P.n));

  check(out,
        aut_order(gens.alpha, P) == (P.p - 1) * ppow(P.p, P.m - 1) &&
            aut_order(gens.beta, P) == min_mn &&
            aut_order(gens.gamma, P) == ppow(P.p, std::min(P.m - P.r, P.n)) &&
            aut_order(gens.delta, P) == ppow(P.p, P.n - P.r),
        "aut.generator_orders", at);
  check(out,
        gens.beta.img_y ==
            GroupElement{mod_reduce(ppow(P.p, P.m > P.n ? P.m - P.n : 0), P.pm),
                         1},
        "aut.beta_image", at);
  check(out, gens.delta.img_x == x, "aut.delta_fixes_x", at);

  // Relation set of Aut(G).
  check(out,
        compose(gens.alpha, gens.delta, P) == compose(gens.delta, gens.alpha, P),
        "aut.alpha_delta_commute", at);
  check(out,
        compose(compose(gens.alpha, gens.beta, P), inverse_aut(gens.alpha, P),
                P) == aut_pow(gens.beta, gens.u, P),
        "aut.alpha_beta_conj", at);
  check(out,
        compose(compose(gens.delta, gens.beta, P), inverse_aut(gens.delta, P),
                P) == aut_pow(gens.beta, inv_mod(1 + P.pr, min_mn), P),
        "aut.delta_beta_conj", at);
  check(out,
        compose(compose(gens.delta, gens.gamma, P), inverse_aut(gens.delta, P),
                P) == aut_pow(gens.gamma, 1 + P.pr, P),
        "aut.delta_gamma_conj", at);
  check(out,
        compose(compose(gens.alpha, gens.gamma, P), inverse_aut(gens.alpha, P),
                P) ==
            compose(aut_pow(gens.alpha, ctx.a0, P),
                    aut_pow(gens.gamma, inv_mod(gens.u, min_mn), P), P),
        "aut.alpha_gamma_conj", at);
  check(out,
        compose(aut_pow(gens.alpha, ctx.a0, P), gens.gamma, P) ==
            compose(gens.gamma, aut_pow(gens.alpha, ctx.a0, P), P),
        "aut.alpha_a0_gamma_commute", at);

  // a0 residues and the defining congruence.
  {
    Int rhs = mod_reduce(
        gens.u * s_sum(pow_mod(P.k, P.q, P.pm), inv_mod(gens.u, P.pm), P.pm),
        P.pm);
    check(out, pow_mod(gens.u, ctx.a0, P.pm) == rhs, "aut.a0_congruence", at);
    if (P.m <= P.n) {
      check(out, ctx.a0 % ppow(P.p, P.m - 1) == 0, "aut.a0_divisible_m", at,
            "a0 = " + ctx.a0.get_str());
    }
    if (P.n <= P.m - P.r) {
      check(out, ctx.a0 % ppow(P.p, P.m - P.r - 1) == 0, "aut.a0_divisible_mr",
            at, "a0 = " + ctx.a0.get_str());
    }
  }

  // Tilde generators.
  {
    const TildeGenerators& t = ctx.tilde;
    check(out,
          aut_order(t.alpha_t, P) == P.pr && aut_order(t.beta_t, P) == P.pr &&
              aut_order(t.delta_t, P) ==
                  ppow(P.p, std::min(P.r, P.n - P.r)),
          "aut.tilde_orders", at);
    check(out, vp(t.u_t - 1, P.p) == P.m - P.r, "aut.u_tilde_valuation", at);
    check(out,
          vp(t.v_t - 1, P.p) == std::max(P.r, P.n - P.r),
          "aut.v_tilde_valuation", at);
    check(out, t.alpha_t.img_x == GroupElement{t.u_t, 0} &&
                   t.alpha_t.img_y == y,
          "aut.alpha_tilde_action", at);
    check(out, t.beta_t.img_x == x &&
                   t.beta_t.img_y ==
                       GroupElement{mod_reduce(P.pmr, P.pm), 1},
          "aut.beta_tilde_action", at);
    check(out, t.delta_t.img_x == x &&
                   t.delta_t.img_y ==
                       GroupElement{0, mod_reduce(t.v_t, P.pn)},
          "aut.delta_tilde_action", at);
  }

  // Homomorphism property and inverse on random data.
  std::mt19937_64 rng(seed ^ 0xau);
  auto random_elt = [&] {
    return GroupElement{Int(static_cast<unsigned long>(rng() % to_ull(P.pm))),
                        Int(static_cast<unsigned long>(rng() % to_ull(P.pn)))};
  };
  auto random_aut = [&] {
    Automorphism phi = aut_pow(gens.beta, Int(rng() % 64), P);
    phi = compose(phi, aut_pow(gens.gamma, Int(rng() % 64), P), P);
    phi = compose(phi, aut_pow(gens.alpha, Int(rng() % 64), P), P);
    return compose(phi, aut_pow(gens.delta, Int(rng() % 64), P), P);
  };
  for (int trial = 0; trial < 20; ++trial) {
    Automorphism phi = random_aut();
    GroupElement a = random_elt(), b = random_elt();
    check(out,
          apply(phi, mul(a, b, P), P) ==
              mul(apply(phi, a, P), apply(phi, b, P), P),
          "aut.apply_homomorphism", at);
    check(out, compose(phi, inverse_aut(phi, P), P) == identity_aut(),
          "aut.inverse", at);
  }

  // Enumeration count and closure; exhaustive decomposition at small |Aut|.
  if (P.order() <= 243) {
    std::vector<Automorphism> all = aut_enumerate(P, budget);
    check(out, Int(all.size()) == aut_order_formula(P), "aut.enumerate_count",
          at,
          "enumerated " + std::to_string(all.size()) + ", formula " +
              aut_order_formula(P).get_str());
    check(out,
          std::find(all.begin(), all.end(), identity_aut()) != all.end(),
          "aut.enumerate_identity", at);
    std::set<Automorphism> table(all.begin(), all.end());
    for (int trial = 0; trial < 10; ++trial) {
      const Automorphism& f = all[rng() % all.size()];
      const Automorphism& h = all[rng() % all.size()];
      check(out, table.count(compose(f, h, P)) == 1, "aut.enumerate_closed",
            at);
    }
    std::size_t decompose_limit = all.size() <= 600 ? all.size() : 100;
    for (std::size_t i = 0; i < decompose_limit; ++i) {
      const Automorphism& phi =
          all.size() <= 600 ? all[i] : all[rng() % all.size()];
      try {
        normal_form(phi, P, gens);
      } catch (const std::exception& e) {
        fail(out, "aut.normal_form_total", at, e.what());
        break;
      }
    }
  }

  // Normal-form round trips.
  check(out, normal_form(identity_aut(), P, gens).a == 0 &&
                 normal_form(identity_aut(), P, gens).b == 0 &&
                 normal_form(identity_aut(), P, gens).c == 0 &&
                 normal_form(identity_aut(), P, gens).d == 0,
        "aut.normal_form_identity", at);
  {
    AutCoordinates ca = normal_form(gens.alpha, P, gens);
    check(out, ca.a == 1 && ca.b == 0 && ca.c == 0 && ca.d == 0,
          "aut.normal_form_alpha", at);
  }
  Int orda = aut_order(gens.alpha, P), ordb = aut_order(gens.beta, P);
  Int ordc = aut_order(gens.gamma, P), ordd = aut_order(gens.delta, P);
  for (int trial = 0; trial < 20; ++trial) {
    Int a0 = Int(static_cast<unsigned long>(rng() % to_ull(orda)));
    Int b0 = Int(static_cast<unsigned long>(rng() % to_ull(ordb)));
    Int c0 = Int(static_cast<unsigned long>(rng() % to_ull(ordc)));
    Int d0 = Int(static_cast<unsigned long>(rng() % to_ull(ordd)));
    Automorphism phi =
        compose(compose(aut_pow(gens.beta, b0, P), aut_pow(gens.gamma, c0, P),
                        P),
                compose(aut_pow(gens.alpha, a0, P), aut_pow(gens.delta, d0, P),
                        P),
                P);
    AutCoordinates coords = normal_form(phi, P, gens);
    check(out,
          coords.a == a0 && coords.b == b0 && coords.c == c0 && coords.d == d0,
          "aut.normal_form_roundtrip", at);
  }
}

void verify_gamma(const GammaContext& ctx, const Budget& budget,
                  std::vector<Violation>& out) {
  const GroupParams& P = ctx.P;
  const std::string at = par_str(P);

  // mu is a bijection on Z/p^r with mu_0 = 0.
  {
    std::set<Int> seen;
    for (Int a = 0; a < P.pr; ++a) {
      Int mu = mu_coord(a, ctx);
      seen.insert(mu);
      check(out, mod_reduce(1 + mu * P.pmr, P.pm) == ctx.u_t_pow(a),
            "gamma.mu_roundtrip", at);
    }
    check(out, Int(seen.size()) == P.pr, "gamma.mu_bijection", at);
    check(out, mu_coord(0, ctx) == 0, "gamma.mu_zero", at);
  }

  for (const Triplet& t : all_triplets(ctx)) {
    GammaMap gm = gamma_from_triplet(t, ctx);
    bool anti = is_antihom(gm, P);
    check(out, is_preadmissible(t, ctx) == anti, "gamma.pre_iff_antihom",
          at + " t=(" + t.a.get_str() + "," + t.b.get_str() + "," +
              t.d.get_str() + ")");
    bool adm_general = is_admissible_general(t, ctx);
    bool adm_oracle = anti && is_equivariant(gm, ctx);
    check(out, adm_general == adm_oracle, "gamma.admissible_iff_equivariant",
          at + " t=(" + t.a.get_str() + "," + t.b.get_str() + "," +
              t.d.get_str() + ")");
    if (P.regime != Regime::OPEN) {
      check(out, is_admissible_fast(t, ctx) == adm_general,
            "gamma.fast_iff_general", at);
    }
    if (!adm_general) continue;

    // Lemma: admissible b is 0 or 1 mod p^{max(2r-m,0)}.
    Int bmod = ppow(P.p, 2 * P.r > P.m ? 2 * P.r - P.m : 0);
    Int bres = mod_reduce(t.b, bmod);
    check(out, bres == 0 || bres == mod_reduce(Int(1), bmod), "gamma.b_lemma",
          at);

    IsoInvariant inv = iso_invariant_unchecked(t, ctx);
    check(out, (inv.s == 0) == iso_criterion_mu(t, ctx),
          "gamma.iso_s_vs_mu_criterion", at);

    // Presentation data of N_Gamma through the holomorph pairs.
    HolElement phi_x = phi_x_element(t, ctx);
    HolElement phi_y = phi_y_element(t, ctx);
    HolElement id = hol_identity();
    check(out,
          hol_pow(phi_x, P.pm, P) == id &&
              hol_pow(phi_x, P.pm / P.p, P) != id,
          "gamma.phi_x_order", at);
    check(out,
          hol_pow(phi_y, P.pn, P) == id &&
              (P.pn == P.p || hol_pow(phi_y, P.pn / P.p, P) != id),
          "gamma.phi_y_order", at);
    if (P.pn == P.p) {
      check(out, phi_y != id, "gamma.phi_y_nontrivial", at);
    }
    Int w = twist_unit(t, ctx);
    HolElement conj =
        hol_mul(hol_mul(phi_y, phi_x, P), hol_inverse(phi_y, P), P);
    check(out, conj == hol_pow(phi_x, w, P), "gamma.n_order_lemma_relation",
          at);
    HolElement phi_y2 = hol_pow(phi_y, inv.j, P);
    Int twist = mod_reduce(1 + ppow(P.p, P.m - P.r + inv.s), P.pm);
    check(out,
          hol_mul(hol_mul(phi_y2, phi_x, P), hol_inverse(phi_y2, P), P) ==
              hol_pow(phi_x, twist, P),
          "gamma.iso_cor_presentation", at);

    // N_Gamma is a regular subgroup of order p^{m+n}.
    std::vector<HolElement> n_els = n_gamma_elements(t, ctx, budget);
    check(out, Int(n_els.size()) == P.order(), "gamma.n_gamma_size", at);
    std::set<HolElement> n_set(n_els.begin(), n_els.end());
    check(out, n_set.size() == n_els.size(), "gamma.n_gamma_distinct", at);
    std::mt19937_64 rng(0xc0ffee);
    std::set<GroupElement> orbit;
    for (int trial = 0; trial < 12; ++trial) {
      const HolElement& h1 = n_els[rng() % n_els.size()];
      const HolElement& h2 = n_els[rng() % n_els.size()];
      check(out, n_set.count(hol_mul(h1, h2, P)) == 1, "gamma.n_gamma_closed",
            at);
    }
    for (const HolElement& h : n_els) {
      orbit.insert(hol_apply(h, identity_element(), P));
    }
    check(out, Int(orbit.size()) == P.order(), "gamma.n_gamma_regular", at);
  }

  // Gamma_rho = Gamma_{0,0,0} and Gamma_lambda = Gamma_{a_lambda,1,0}.
  {
    Triplet t0{0, 0, 0};
    check(out, is_admissible_general(t0, ctx), "gamma.rho_admissible", at);
    IsoInvariant inv0 = iso_invariant_unchecked(t0, ctx);
    check(out, inv0.s == 0 && inv0.j == 1, "gamma.rho_invariant", at);
    GammaMap gm0 = gamma_from_triplet(t0, ctx);
    check(out,
          gm0.psi_x == identity_aut() && gm0.psi_y == identity_aut(),
          "gamma.rho_is_trivial_map", at);

    Triplet tl{a_lambda(ctx), 1, 0};
    check(out, is_admissible_general(tl, ctx), "gamma.lambda_admissible", at);
    IsoInvariant invl = iso_invariant_unchecked(tl, ctx);
    check(out,
          invl.s == 0 && mod_reduce(invl.j + 1, P.pr) == 0,
          "gamma.lambda_invariant", at,
          "j = " + invl.j.get_str());
    // Gamma_lambda(sigma) = conj(sigma^{-1}).
    GammaMap gml = gamma_from_triplet(tl, ctx);
    const GroupElement x{1, 0}, y{0, 1};
    auto inner = [&](const GroupElement& sigma) {
      GroupElement si = inverse(sigma, P);
      return Automorphism{mul(mul(si, x, P), sigma, P),
                          mul(mul(si, y, P), sigma, P)};
    };
    check(out, gml.psi_x == inner(x) && gml.psi_y == inner(y),
          "gamma.lambda_is_inner_inverse", at);
  }
}

void verify_count(const GammaContext& ctx, std::vector<Violation>& out) {
  const GroupParams& P = ctx.P;
  const std::string at = par_str(P);
  CountReport general = enumerate_counts(ctx, Checker::General);
  Int lattice = P.pr * P.pr * ctx.d_modulus;
  check(out,
        general.n_admissible_iso <= general.n_admissible &&
            general.n_admissible <= general.n_preadmissible &&
            general.n_preadmissible <= lattice,
        "count.monotone", at);
  if (P.regime != Regime::OPEN) {
    CountReport fast = enumerate_counts(ctx, Checker::Fast);
    check(out,
          fast.n_admissible == general.n_admissible &&
              fast.n_admissible_iso == general.n_admissible_iso,
          "count.fast_vs_general", at);
    auto formula = closed_formula(P);
    check(out, formula && *formula == general.n_admissible_iso,
          "count.formula_vs_enumeration", at,
          "formula " + (formula ? formula->get_str() : std::string("n/a")) +
              " vs " + general.n_admissible_iso.get_str());
    auto adm_formula = admissible_count_formula(P);
    check(out, adm_formula && *adm_formula == general.n_admissible,
          "count.admissible_formula", at);
    check(out, general.agreement && *general.agreement, "count.agreement",
          at);
  } else {
    check(out, !closed_formula(P) && !general.formula_value &&
                   !general.agreement,
          "count.open_has_no_formula", at);
  }
  // Stratified structure in the m = n, r <= m-r case: for each a, exactly
  // (p-1)p^{r-1} iso-passing d.
  if (P.m == P.n && 2 * P.r <= P.m) {
    Int expected = (P.p - 1) * ppow(P.p, P.r - 1);
    for (Int a = 0; a < P.pr; ++a) {
      Int tally = 0;
      for (Int b = 0; b < P.pr; ++b) {
        for (Int d = 0; d < ctx.d_modulus; ++d) {
          Triplet t{a, b, d};
          if (is_admissible_general(t, ctx) && iso_criterion_mu(t, ctx)) {
            ++tally;
          }
        }
      }
      check(out, tally == expected, "count.case3_stratified",
            at + " a=" + a.get_str(),
            "tally " + tally.get_str() + " expected " + expected.get_str());
    }
  }
}

void verify_holomorph(const GammaContext& ctx, const Budget& budget,
                      std::vector<Violation>& out) {
  const GroupParams& P = ctx.P;
  const std::string at = par_str(P);
  const GroupElement x{1, 0}, y{0, 1};
  std::size_t order = group_order_checked(P, budget.max_group_enum);

  GPermutation id_perm = identity_perm(P, budget);
  auto [lx, rx] = lambda_rho(x, P, budget);
  auto [ly, ry] = lambda_rho(y, P, budget);
  {
    auto [lid, rid] = lambda_rho(identity_element(), P, budget);
    check(out, lid == id_perm && rid == id_perm, "hol.lambda_rho_identity",
          at);
    check(out, element_at(lx(0), P) == x && element_at(ly(0), P) == y,
          "hol.lambda_regularity", at);
    check(out, compose(lx, ry) == compose(ry, lx) &&
                   compose(ly, rx) == compose(rx, ly),
          "hol.lambda_rho_commute", at);
    GPermutation conj_x = compose(rx, lx);
    check(out, conj_x(0) == 0 && aut_member(conj_x, P), "hol.conj_is_inner",
          at);
    GPermutation inner_x = perm_from_fn(P, budget, [&](const GroupElement& t) {
      return mul(mul(x, t, P), inverse(x, P), P);
    });
    check(out, conj_x == inner_x, "hol.conj_matches_conjugation", at);
    check(out, hol_member(rx, P) && hol_member(lx, P) && hol_member(ry, P) &&
                   hol_member(ly, P),
          "hol.lambda_rho_members", at);
  }

  GPermutation iota = inversion_map(P, budget);
  check(out, power_map(1, P, budget) == id_perm, "hol.power_one", at);
  check(out, power_map(-1, P, budget) == iota, "hol.power_minus_one", at);
  check(out, is_bijection(pi_prime_map(1 + P.p, P, budget)),
        "hol.pi_prime_bijective", at);
  check(out, pi_prime_map(1, P, budget) == id_perm, "hol.pi_prime_one", at);

  // rho(G) and lambda(G) element sets.
  std::set<GPermutation> rho_set, lambda_set;
  for (std::size_t idx = 0; idx < order; ++idx) {
    auto [l, r] = lambda_rho(element_at(idx, P), P, budget);
    lambda_set.insert(l);
    rho_set.insert(r);
  }

  std::vector<Triplet> iso_triplets;
  std::vector<GPermutation> reps;
  std::vector<Int> rep_j;
  Triplet first_na_preadmissible{-1, -1, -1};
  bool have_na = false;
  for (const Triplet& t : all_triplets(ctx)) {
    bool adm = is_admissible_general(t, ctx);
    if (!adm) {
      if (!have_na && is_preadmissible(t, ctx)) {
        first_na_preadmissible = t;
        have_na = true;
      }
      continue;
    }
    // Admissible <=> N_Gamma normal in Hol(G) (generator conjugation).
    check(out, normality_check(t, ctx, NormalityMode::Generators, budget),
          "hol.admissible_normal",
          at + " t=(" + t.a.get_str() + "," + t.b.get_str() + "," +
              t.d.get_str() + ")");
    IsoInvariant inv = iso_invariant_unchecked(t, ctx);
    if (inv.s != 0) continue;
    iso_triplets.push_back(t);
    GPermutation pi = pi_map(t, ctx, budget);
    check(out, pi == pi_map_from_definition(t, ctx, budget),
          "hol.pi_closed_form_vs_definition",
          at + " t=(" + t.a.get_str() + "," + t.b.get_str() + "," +
              t.d.get_str() + ")");
    check(out, is_bijection(pi), "hol.pi_bijective", at);
    // Different valid j choices differ by an automorphism factor.
    GPermutation pi2 = pi_map_with_j(t, inv.j + P.pr, ctx, budget);
    check(out, aut_congruent(pi, pi2, P), "hol.pi_j_choice_coset", at);
    // pi lambda(G) pi^{-1} = N_Gamma, pointwise as permutation sets.
    GammaMap gm = gamma_from_triplet(t, ctx);
    std::set<GPermutation> n_perms;
    for (std::size_t idx = 0; idx < order; ++idx) {
      GroupElement sigma = element_at(idx, P);
      n_perms.insert(
          perm_from_hol({sigma, gamma_apply(gm, sigma, P)}, P, budget));
    }
    GPermutation pi_inv = inverse_perm(pi);
    std::set<GPermutation> conjugated;
    for (const GPermutation& l : lambda_set) {
      conjugated.insert(compose(compose(pi, l), pi_inv));
    }
    check(out, conjugated == n_perms, "hol.pi_conjugates_lambda",
          at + " t=(" + t.a.get_str() + "," + t.b.get_str() + "," +
              t.d.get_str() + ")");
    if (t.a == 0 && t.b == 0 && t.d == 0) {
      check(out, n_perms == rho_set, "hol.n_000_is_rho", at);
      check(out, pi == iota, "hol.pi_000_is_inversion", at);
    }
    reps.push_back(std::move(pi));
    rep_j.push_back(inv.j);
  }

  if (have_na) {
    check(out,
          !normality_check(first_na_preadmissible, ctx,
                           NormalityMode::Generators, budget),
          "hol.nonadmissible_not_normal", at);
  }

  // Gamma_lambda: N = lambda(G) and pi ~ (x^i y^j -> x^{-i} y^j).
  {
    Triplet tl{a_lambda(ctx), 1, 0};
    GammaMap gm = gamma_from_triplet(tl, ctx);
    std::set<GPermutation> n_perms;
    for (std::size_t idx = 0; idx < order; ++idx) {
      GroupElement sigma = element_at(idx, P);
      n_perms.insert(
          perm_from_hol({sigma, gamma_apply(gm, sigma, P)}, P, budget));
    }
    check(out, n_perms == lambda_set, "hol.n_lambda_is_lambda", at);
    GPermutation mirror = perm_from_fn(P, budget, [&](const GroupElement& g) {
      return GroupElement{mod_reduce(-g.i, P.pm), g.j};
    });
    check(out, coset_equal(pi_map(tl, ctx, budget), mirror, P),
          "hol.pi_lambda_mirror", at);
    check(out, hol_member(mirror, P), "hol.mirror_in_hol", at);
  }

  // The representatives are pairwise inequivalent and count |T(G)|.
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      check(out, !coset_equal(reps[i], reps[j], P), "hol.reps_distinct", at);
    }
  }
  Int t_count = t_group_order(P, TMethod::Triplets, budget);
  check(out, Int(reps.size()) == t_count, "hol.reps_count", at);
  if (P.regime != Regime::OPEN) {
    check(out, t_group_order(P, TMethod::Formula, budget) == t_count,
          "hol.t_order_formula_route", at);
  }

  // Multiplication table of T(G).
  {
    TGroupTable table = t_group_table(P, budget);
    std::size_t size = table.classes.size();
    check(out, Int(size) == t_count, "hol.table_size", at);
    std::size_t e = table.identity_index;
    bool latin = true, identity_ok = true, inverses = true;
    for (std::size_t i = 0; i < size; ++i) {
      std::set<std::size_t> row, col;
      bool has_inverse = false;
      for (std::size_t j = 0; j < size; ++j) {
        row.insert(table.product[i][j]);
        col.insert(table.product[j][i]);
        if (table.product[i][j] == e) has_inverse = true;
      }
      latin = latin && row.size() == size && col.size() == size;
      identity_ok = identity_ok && table.product[i][e] == i &&
                    table.product[e][i] == i;
      inverses = inverses && has_inverse;
    }
    check(out, latin, "hol.table_latin", at);
    check(out, identity_ok, "hol.table_identity", at);
    check(out, inverses, "hol.table_inverses", at);
    std::mt19937_64 rng(0x7ab1e);
    for (int trial = 0; trial < 10 && size > 0; ++trial) {
      std::size_t i = rng() % size, j = rng() % size, l = rng() % size;
      check(out,
            table.product[table.product[i][j]][l] ==
                table.product[i][table.product[j][l]],
            "hol.table_associative", at);
    }
    // pi_{0,0,0} is the inversion; its class squares to the identity.
    for (std::size_t i = 0; i < size; ++i) {
      if (table.classes[i].label && *table.classes[i].label == Triplet{0, 0, 0}) {
        check(out, table.product[i][i] == e, "hol.inversion_class_involutive",
              at);
      }
    }
  }

  // Power maps: class count (p-1)p^{r-1} when the class is 2, exhausting
  // T(G) when n <= m-r; pi_{a,b,0} = pi_{-j} mod Aut(G).
  if (2 * P.r <= P.m) {
    std::vector<GPermutation> power_classes;
    Int emax = ppow(P.p, std::max(P.m, P.n));
    for (Int ell = 1; ell < emax; ++ell) {
      if (ell % P.p == 0) continue;
      GPermutation pl = power_map(ell, P, budget);
      bool fresh = true;
      for (const GPermutation& seen : power_classes) {
        if (coset_equal(seen, pl, P)) {
          fresh = false;
          break;
        }
      }
      if (fresh) power_classes.push_back(std::move(pl));
    }
    Int expected = (P.p - 1) * ppow(P.p, P.r - 1);
    check(out, Int(power_classes.size()) == expected, "hol.power_class_count",
          at,
          "got " + std::to_string(power_classes.size()) + " expected " +
              expected.get_str());
    if (P.regime == Regime::N_LE_M_MINUS_R) {
      for (const GPermutation& rep : reps) {
        bool matched = false;
        for (const GPermutation& pl : power_classes) {
          if (coset_equal(rep, pl, P)) {
            matched = true;
            break;
          }
        }
        check(out, matched, "hol.power_maps_exhaust_T", at);
      }
    }
  }
  if ((P.m <= P.n && 2 * P.r <= P.m) || P.regime == Regime::N_LE_M_MINUS_R) {
    Int expected = (P.p - 1) * ppow(P.p, P.r - 1);
    Int found = 0;
    for (std::size_t i = 0; i < iso_triplets.size(); ++i) {
      if (iso_triplets[i].d != 0) continue;
      ++found;
      check(out,
            aut_congruent(reps[i], power_map(-rep_j[i], P, budget), P),
            "hol.pi_ab0_is_power_map",
            at + " t=(" + iso_triplets[i].a.get_str() + "," +
                iso_triplets[i].b.get_str() + ",0)");
    }
    check(out, found == expected, "hol.pi_ab0_count", at,
          "got " + found.get_str() + " expected " + expected.get_str());
  }

  // iota . pi_{a,0,d} = pi'_{v~^d} mod Aut(G) for m <= n.
  if (P.m <= P.n) {
    Int expected = ppow(P.p, std::min(P.r, P.n > P.m ? P.n - P.m : 0));
    Int found = 0;
    for (const Triplet& t : all_triplets(ctx)) {
      if (t.b != 0) continue;
      if (ctx.v_t_pow(t.d, P.pm) != 1) continue;
      if (!is_admissible_general(t, ctx)) continue;
      ++found;
      check(out, iso_criterion_mu(t, ctx), "hol.last_prop_iso", at);
      GPermutation lhs = compose(iota, pi_map(t, ctx, budget));
      GPermutation rhs = pi_prime_map(ctx.v_t_pow(t.d, P.pn), P, budget);
      check(out, aut_congruent(lhs, rhs, P), "hol.last_prop_congruence",
            at + " t=(" + t.a.get_str() + ",0," + t.d.get_str() + ")");
    }
    check(out, found == expected, "hol.last_prop_count", at,
          "got " + found.get_str() + " expected " + expected.get_str());
  }

  // Norm(rho(G)) = Hol(G) spot check on tool-generated NHol elements.
  {
    std::mt19937_64 rng(0x12345);
    std::vector<GPermutation> hol_samples{
        rx, ry, perm_from_aut(ctx.gens.alpha, P, budget),
        perm_from_aut(ctx.gens.beta, P, budget),
        perm_from_aut(ctx.gens.gamma, P, budget),
        perm_from_aut(ctx.gens.delta, P, budget)};
    for (int trial = 0; trial < 8; ++trial) {
      GroupElement sigma{Int(static_cast<unsigned long>(rng() % to_ull(P.pm))),
                         Int(static_cast<unsigned long>(rng() % to_ull(P.pn)))};
      const GPermutation& h = hol_samples[rng() % hol_samples.size()];
      auto [l, r] = lambda_rho(sigma, P, budget);
      hol_samples.push_back(compose(r, h));
    }
    for (const GPermutation& rep : reps) {
      for (const GPermutation& h : hol_samples) {
        GPermutation f = compose(rep, h);
        GPermutation f_inv = inverse_perm(f);
        bool normalizes = true;
        for (const GPermutation& rho_elt : rho_set) {
          if (!rho_set.count(compose(compose(f, rho_elt), f_inv))) {
            normalizes = false;
            break;
          }
        }
        if (normalizes) {
          check(out, hol_member(f, P), "hol.norm_rho_is_hol", at);
        }
      }
    }
  }

  // Randomized equivariance spot checks: positive and negative control.
  {
    GammaMap good = gamma_from_triplet(Triplet{0, 0, 0}, ctx);
    check(out, equivariance_full_check(good, P, 100), "hol.equivariance_pos",
          at);
    if (have_na) {
      GammaMap bad = gamma_from_triplet(first_na_preadmissible, ctx);
      check(out, !equivariance_full_check(bad, P, 500),
            "hol.equivariance_negative_control", at);
    }
  }
}

void verify_oracle(const GammaContext& ctx, const Budget& budget,
                   std::vector<Violation>& out, uint64_t /*seed*/) {
  const GroupParams& P = ctx.P;
  const std::string at = par_str(P);
  OracleVerdict verdict = aut_pair_scan(P, budget);
  CountReport counts = enumerate_counts(ctx, Checker::General);
  check(out, verdict.n_equivariant_antihoms == counts.n_admissible,
        "oracle.antihom_count", at,
        "oracle " + verdict.n_equivariant_antihoms.get_str() + " vs triplets " +
            counts.n_admissible.get_str());
  check(out, verdict.n_with_N_iso_G == counts.n_admissible_iso,
        "oracle.iso_count", at,
        "oracle " + verdict.n_with_N_iso_G.get_str() + " vs triplets " +
            counts.n_admissible_iso.get_str());
  check(out, verdict.containment_violations == 0, "oracle.containments", at);
  if (auto formula = closed_formula(P)) {
    check(out, verdict.n_with_N_iso_G == *formula, "oracle.formula", at);
  }
  // Reverse lookup: the survivors land exactly on the admissible set, one
  // triplet each.
  std::vector<Triplet> admissible;
  for (const Triplet& t : all_triplets(ctx)) {
    if (is_admissible_general(t, ctx)) admissible.push_back(t);
  }
  check(out, verdict.recovered_triplets == admissible,
        "oracle.triplet_reverse_lookup", at);
}

VerifyResult run_verification(const VerifyOptions& options) {
  VerifyResult result;
  std::vector<GroupParams> params =
      options.params.empty() ? default_verify_params() : options.params;
  verify_arith(result.violations);
  for (const GroupParams& P : params) {
    GammaContext ctx(P);
    verify_group(P, options.budget, result.violations, options.seed);
    verify_aut(ctx, options.budget, result.violations, options.seed);
    verify_gamma(ctx, options.budget, result.violations);
    verify_count(ctx, result.violations);
    verify_holomorph(ctx, options.budget, result.violations);
    if (options.with_oracle) {
      verify_oracle(ctx, options.budget, result.violations, options.seed);
    }
    if (options.open_regime && P.regime == Regime::OPEN) {
      result.open_counts.push_back(enumerate_counts(ctx, Checker::General));
    }
  }
  if (options.inject_fault && !params.empty()) {
    // Negative control: report a deliberately corrupted comparison so the
    // violation path can be exercised end to end.
    const GroupParams& P = params.front();
    CountReport counts = enumerate_counts(P, Checker::General);
    Int corrupted = counts.n_admissible_iso + 1;
    check(result.violations, counts.n_admissible_iso == corrupted,
          "injected-fault", par_str(P),
          "deliberate off-by-one for the negative control");
  }
  return result;
}

}  // namespace mholo
