#include "mholo/holomorph.hpp"

#include <algorithm>

namespace mholo {

// Defined in oracle.cpp; the oracle route of t_group_order dispatches there.
Int oracle_t_count(const GroupParams& P, const Budget& budget);

GPermutation identity_perm(const GroupParams& P, const Budget& budget) {
  std::size_t order = group_order_checked(P, budget.max_group_enum);
  GPermutation perm;
  perm.table.resize(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    perm.table[idx] = static_cast<uint32_t>(idx);
  }
  return perm;
}

bool is_bijection(const GPermutation& f) {
  std::vector<bool> seen(f.table.size(), false);
  for (uint32_t v : f.table) {
    if (v >= f.table.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

GPermutation compose(const GPermutation& f, const GPermutation& g) {
  if (f.table.size() != g.table.size()) {
    throw InvalidParams("compose: size mismatch");
  }
  GPermutation h;
  h.table.resize(f.table.size());
  for (std::size_t idx = 0; idx < g.table.size(); ++idx) {
    h.table[idx] = f.table[g.table[idx]];
  }
  return h;
}

GPermutation inverse_perm(const GPermutation& f) {
  GPermutation h;
  h.table.resize(f.table.size());
  for (std::size_t idx = 0; idx < f.table.size(); ++idx) {
    h.table[f.table[idx]] = static_cast<uint32_t>(idx);
  }
  return h;
}

std::pair<GPermutation, GPermutation> lambda_rho(const GroupElement& sigma,
                                                 const GroupParams& P,
                                                 const Budget& budget) {
  GroupElement sigma_inv = inverse(sigma, P);
  GPermutation lam = perm_from_fn(
      P, budget, [&](const GroupElement& tau) { return mul(sigma, tau, P); });
  GPermutation rho = perm_from_fn(P, budget, [&](const GroupElement& tau) {
    return mul(tau, sigma_inv, P);
  });
  return {std::move(lam), std::move(rho)};
}

GPermutation perm_from_hol(const HolElement& h, const GroupParams& P,
                           const Budget& budget) {
  return perm_from_fn(
      P, budget, [&](const GroupElement& tau) { return hol_apply(h, tau, P); });
}

GPermutation perm_from_aut(const Automorphism& phi, const GroupParams& P,
                           const Budget& budget) {
  return perm_from_fn(
      P, budget, [&](const GroupElement& tau) { return apply(phi, tau, P); });
}

namespace {

// If sigma -> f(sigma) c^{-1} is an automorphism (c = f(1)), return it.
std::optional<Automorphism> hol_factor(const GPermutation& f,
                                       const GroupParams& P) {
  const GroupElement x{1, 0}, y{0, 1};
  GroupElement c = element_at(f(0), P);  // index 0 is the identity
  GroupElement c_inv = inverse(c, P);
  GroupElement img_x = mul(element_at(f(element_index(x, P)), P), c_inv, P);
  GroupElement img_y = mul(element_at(f(element_index(y, P)), P), c_inv, P);
  if (!is_valid_automorphism(img_x, img_y, P)) return std::nullopt;
  Automorphism phi{img_x, img_y};
  // The generator images only pin a homomorphism; confirm the whole table.
  for (std::size_t idx = 0; idx < f.table.size(); ++idx) {
    GroupElement tau = element_at(idx, P);
    if (element_at(f(idx), P) != mul(apply(phi, tau, P), c, P)) {
      return std::nullopt;
    }
  }
  return phi;
}

}  // namespace

bool hol_member(const GPermutation& f, const GroupParams& P) {
  return hol_factor(f, P).has_value();
}

bool aut_member(const GPermutation& f, const GroupParams& P) {
  return f(0) == 0 && hol_member(f, P);
}

bool coset_equal(const GPermutation& f, const GPermutation& g,
                 const GroupParams& P) {
  return hol_member(compose(inverse_perm(f), g), P);
}

bool aut_congruent(const GPermutation& f, const GPermutation& g,
                   const GroupParams& P) {
  return aut_member(compose(inverse_perm(f), g), P);
}

GPermutation inversion_map(const GroupParams& P, const Budget& budget) {
  return perm_from_fn(
      P, budget, [&](const GroupElement& tau) { return inverse(tau, P); });
}

GPermutation pi_map_with_j(const Triplet& t, const Int& j0,
                           const GammaContext& ctx, const Budget& budget) {
  const GroupParams& P = ctx.P;
  Int vd = ctx.v_t_pow(t.d, P.pn);
  Int k_inv = inv_mod(P.k, P.pm);
  return perm_from_fn(P, budget, [&](const GroupElement& g) {
    Int e = s_sum(vd, mod_reduce(j0 * g.j, P.pn), P.pn);
    Int twist = 1 + t.b * P.pmr * s_sum(P.k, e, P.pm);
    Int xexp = -g.i * twist * pow_mod(k_inv, e, P.pm);
    return canonical(xexp, -e, P);
  });
}

GPermutation pi_map(const Triplet& t, const GammaContext& ctx,
                    const Budget& budget) {
  IsoInvariant inv = iso_invariant(t, ctx);  // throws if not admissible
  if (inv.s != 0) {
    throw InvalidParams("pi_map: N_Gamma is not isomorphic to G (s > 0)");
  }
  return pi_map_with_j(t, inv.j, ctx, budget);
}

GPermutation pi_map_from_definition(const Triplet& t, const GammaContext& ctx,
                                    const Budget& budget) {
  const GroupParams& P = ctx.P;
  IsoInvariant inv = iso_invariant(t, ctx);
  if (inv.s != 0) {
    throw InvalidParams("pi_map: N_Gamma is not isomorphic to G (s > 0)");
  }
  HolElement phi_x = phi_x_element(t, ctx);
  HolElement phi_y = phi_y_element(t, ctx);
  return perm_from_fn(P, budget, [&](const GroupElement& g) {
    HolElement h = hol_mul(hol_pow(phi_x, g.i, P),
                           hol_pow(phi_y, inv.j * g.j, P), P);
    return hol_apply(h, identity_element(), P);
  });
}

GPermutation power_map(const Int& ell, const GroupParams& P,
                       const Budget& budget) {
  if (ell % P.p == 0) {
    throw InvalidParams("power_map: exponent must be coprime to p");
  }
  return perm_from_fn(
      P, budget, [&](const GroupElement& tau) { return pow(tau, ell, P); });
}

GPermutation pi_prime_map(const Int& v, const GroupParams& P,
                          const Budget& budget) {
  if (mod_reduce(v, P.p) != 1) {
    throw InvalidParams("pi_prime_map: v must be 1 mod p");
  }
  Int vr = mod_reduce(v, P.pn);
  return perm_from_fn(P, budget, [&](const GroupElement& g) {
    return GroupElement{g.i, s_sum(vr, g.j, P.pn)};
  });
}

Int t_group_order(const GroupParams& P, TMethod method, const Budget& budget) {
  switch (method) {
    case TMethod::Formula: {
      auto value = closed_formula(P);
      if (!value) {
        throw RegimeUnsupported("no closed |T(G)| formula for m-r < n < m");
      }
      return *value;
    }
    case TMethod::Triplets:
      return enumerate_counts(P, Checker::General).n_admissible_iso;
    case TMethod::Oracle:
      return oracle_t_count(P, budget);
  }
  throw InvalidParams("t_group_order: unknown method");
}

TGroupTable t_group_table(const GroupParams& P, const Budget& budget) {
  GammaContext ctx(P);
  TGroupTable out;
  for (const Triplet& t : all_triplets(ctx)) {
    if (!is_admissible_general(t, ctx)) continue;
    if (!iso_criterion_mu(t, ctx)) continue;
    out.classes.push_back({pi_map(t, ctx, budget), t});
  }
  if (out.classes.empty()) {
    throw InternalError("t_group_table: no coset representatives");
  }
  bool found_identity = false;
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    if (hol_member(out.classes[i].representative, P)) {
      out.identity_index = i;
      found_identity = true;
      break;
    }
  }
  if (!found_identity) {
    throw InternalError("t_group_table: no representative lies in Hol(G)");
  }
  std::size_t size = out.classes.size();
  out.product.assign(size, std::vector<std::size_t>(size, size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      GPermutation prod = compose(out.classes[i].representative,
                                  out.classes[j].representative);
      for (std::size_t c = 0; c < size; ++c) {
        if (coset_equal(out.classes[c].representative, prod, P)) {
          out.product[i][j] = c;
          break;
        }
      }
      if (out.product[i][j] == size) {
        throw InternalError("t_group_table: product escaped the class list");
      }
    }
  }
  return out;
}

}  // namespace mholo
