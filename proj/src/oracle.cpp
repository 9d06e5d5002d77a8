#include "mholo/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

namespace mholo {

namespace {

// Order of a Hol(G) element of p-power order, by peeling from p^{m+n}.
Int hol_element_order(const HolElement& h, const GroupParams& P) {
  Int order = P.order();
  const HolElement id = hol_identity();
  if (hol_pow(h, order, P) != id) {
    throw InternalError("hol_element_order: order does not divide |G|");
  }
  while (order % P.p == 0 && hol_pow(h, order / P.p, P) == id) order /= P.p;
  return order;
}

// Does Phi_y Phi_x Phi_y^{-1} land in <Phi_x>, and at which exponent?
std::optional<Int> conjugation_exponent(const HolElement& phi_x,
                                        const HolElement& phi_y,
                                        const GroupParams& P) {
  HolElement target =
      hol_mul(hol_mul(phi_y, phi_x, P), hol_inverse(phi_y, P), P);
  HolElement cur = hol_identity();
  for (Int w = 0; w < P.pm; ++w) {
    if (cur == target) return w;
    cur = hol_mul(cur, phi_x, P);
  }
  return std::nullopt;
}

// <h> as a sorted vector of elements.
std::vector<HolElement> cyclic_closure(const HolElement& h,
                                       const GroupParams& P) {
  std::vector<HolElement> out;
  HolElement cur = hol_identity();
  do {
    out.push_back(cur);
    cur = hol_mul(cur, h, P);
  } while (cur != hol_identity());
  std::sort(out.begin(), out.end());
  return out;
}

// Cayley-table view of G so the quadratic pair scan runs on machine words.
struct IndexedGroup {
  std::size_t size = 0;
  unsigned long long pm = 0, pn = 0;
  std::vector<uint32_t> mul;    // size x size
  std::vector<uint32_t> pow_m;  // size x pm: pow_m[e*pm + t] = e^t
  std::vector<uint32_t> pow_n;  // size x pn
  std::vector<uint32_t> order;  // element orders (p-powers, fit in words)

  explicit IndexedGroup(const GroupParams& P, const Budget& budget) {
    size = group_order_checked(P, budget.max_group_enum);
    if (Int(size) * Int(size) > to_int(budget.max_pair_ops)) {
      throw BudgetExceeded("|G|^2 exceeds the pair budget");
    }
    pm = to_ull(P.pm);
    pn = to_ull(P.pn);
    std::vector<Int> kpow(pn);  // k^j mod p^m
    kpow[0] = 1;
    for (unsigned long long j = 1; j < pn; ++j) {
      kpow[j] = kpow[j - 1] * P.k % P.pm;
    }
    mul.resize(size * size);
    for (std::size_t a = 0; a < size; ++a) {
      Int i1(static_cast<unsigned long>(a / pn));
      unsigned long long j1 = a % pn;
      for (std::size_t b = 0; b < size; ++b) {
        Int i2(static_cast<unsigned long>(b / pn));
        unsigned long long j2 = b % pn;
        Int i = (i1 + i2 * kpow[j1]) % P.pm;
        mul[a * size + b] =
            static_cast<uint32_t>(to_ull(i) * pn + (j1 + j2) % pn);
      }
    }
    pow_m.resize(size * pm);
    pow_n.resize(size * pn);
    for (std::size_t e = 0; e < size; ++e) {
      uint32_t acc = 0;
      for (unsigned long long t = 0; t < pm; ++t) {
        pow_m[e * pm + t] = acc;
        acc = at(acc, static_cast<uint32_t>(e));
      }
      acc = 0;
      for (unsigned long long t = 0; t < pn; ++t) {
        pow_n[e * pn + t] = acc;
        acc = at(acc, static_cast<uint32_t>(e));
      }
    }
    order.resize(size);
    for (std::size_t e = 0; e < size; ++e) {
      uint32_t acc = at(0, static_cast<uint32_t>(e));
      uint32_t ord = 1;
      while (acc != 0) {
        acc = at(acc, static_cast<uint32_t>(e));
        ++ord;
      }
      order[e] = ord;
    }
  }

  uint32_t at(uint32_t a, uint32_t b) const { return mul[a * size + b]; }
  uint32_t pow_exp_m(uint32_t e, unsigned long long t) const {
    return pow_m[e * pm + t];
  }
  uint32_t pow_exp_n(uint32_t e, unsigned long long t) const {
    return pow_n[e * pn + t];
  }
};

struct IdxAut {
  uint32_t x = 0, y = 0;  // element indices of the generator images

  friend bool operator==(const IdxAut&, const IdxAut&) = default;
};

uint32_t apply_idx(const IndexedGroup& g, const IdxAut& f, uint32_t elt) {
  return g.at(g.pow_exp_m(f.x, elt / g.pn), g.pow_exp_n(f.y, elt % g.pn));
}

IdxAut compose_idx(const IndexedGroup& g, const IdxAut& f, const IdxAut& h) {
  return {apply_idx(g, f, h.x), apply_idx(g, f, h.y)};
}

IdxAut aut_pow_idx(const IndexedGroup& g, IdxAut base, unsigned long long e) {
  IdxAut result{static_cast<uint32_t>(g.pn), 1};  // identity: x -> x, y -> y
  while (e > 0) {
    if (e & 1) result = compose_idx(g, result, base);
    e >>= 1;
    if (e > 0) base = compose_idx(g, base, base);
  }
  return result;
}

}  // namespace

Int oracle_t_count(const GroupParams& P, const Budget& budget) {
  return aut_pair_scan(P, budget).n_with_N_iso_G;
}

OracleVerdict aut_pair_scan(const GroupParams& P, const Budget& budget) {
  auto start = std::chrono::steady_clock::now();
  Int formula = aut_order_formula(P);
  if (formula * formula > to_int(budget.max_pair_ops)) {
    throw BudgetExceeded("|Aut(G)|^2 = " + Int(formula * formula).get_str() +
                         " exceeds the oracle pair budget");
  }
  IndexedGroup g(P, budget);
  const uint32_t x_idx = static_cast<uint32_t>(g.pn);  // index of x
  const uint32_t y_idx = 1;                            // index of y
  unsigned long long p = to_ull(P.p);
  unsigned long long k = to_ull(P.k);

  // Enumerate Aut(G) as index pairs: invertibility mod p, relation orders,
  // conjugation relation.
  std::vector<IdxAut> auts;
  std::vector<uint32_t> xs, ys;  // candidate generator images
  for (uint32_t e = 0; e < g.size; ++e) {
    if (g.order[e] <= g.pm) xs.push_back(e);
    if (g.order[e] <= g.pn) ys.push_back(e);
  }
  for (uint32_t gx : xs) {
    uint32_t gxk = g.pow_exp_m(gx, k % g.pm);
    // k < p^m always, but k % pm keeps the table access in range.
    unsigned long long xi = gx / g.pn % p, xj = gx % g.pn % p;
    for (uint32_t gy : ys) {
      unsigned long long yi = gy / g.pn % p, yj = gy % g.pn % p;
      if ((xi * yj + (p - 1) * yi % p * xj) % p == 0) continue;  // det = 0
      if (g.at(gy, gx) != g.at(gxk, gy)) continue;
      auts.push_back({gx, gy});
    }
  }
  if (Int(auts.size()) != formula) {
    throw InternalError(
        "aut_pair_scan: enumeration disagrees with the order formula");
  }

  // Pre-filter for the antihomomorphism conditions.
  std::vector<const IdxAut*> psix, psiy;
  for (const IdxAut& phi : auts) {
    if (aut_pow_idx(g, phi, to_ull(P.pm)) == IdxAut{x_idx, y_idx}) {
      psix.push_back(&phi);
    }
    if (aut_pow_idx(g, phi, to_ull(P.pn)) == IdxAut{x_idx, y_idx}) {
      psiy.push_back(&phi);
    }
  }

  // Index-level data for the eight equivariance relations.
  GammaContext ctx(P);
  auto to_idx = [&](const Automorphism& a) {
    return IdxAut{static_cast<uint32_t>(element_index(a.img_x, P)),
                  static_cast<uint32_t>(element_index(a.img_y, P))};
  };
  struct GenData {
    IdxAut phi, phi_inv;
    uint32_t phi_x, phi_y;  // images of the group generators
  };
  std::vector<GenData> gen_data;
  for (const Automorphism* gen :
       {&ctx.gens.alpha, &ctx.gens.beta, &ctx.gens.gamma, &ctx.gens.delta}) {
    GenData data;
    data.phi = to_idx(*gen);
    data.phi_inv = to_idx(inverse_aut(*gen, P));
    data.phi_x = apply_idx(g, data.phi, x_idx);
    data.phi_y = apply_idx(g, data.phi, y_idx);
    gen_data.push_back(data);
  }
  auto gamma_apply_idx = [&](const IdxAut& px, const IdxAut& py,
                             uint32_t elt) {
    // Gamma(x^i y^j) = psi_y^j psi_x^i
    return compose_idx(g, aut_pow_idx(g, py, elt % g.pn),
                       aut_pow_idx(g, px, elt / g.pn));
  };
  auto equivariant_idx = [&](const IdxAut& px, const IdxAut& py) {
    for (const GenData& data : gen_data) {
      IdxAut conj_x = compose_idx(g, compose_idx(g, data.phi, px), data.phi_inv);
      if (gamma_apply_idx(px, py, data.phi_x) != conj_x) return false;
      IdxAut conj_y = compose_idx(g, compose_idx(g, data.phi, py), data.phi_inv);
      if (gamma_apply_idx(px, py, data.phi_y) != conj_y) return false;
    }
    return true;
  };

  // Containment lookups: <beta~> and <alpha~><delta~> as index pairs,
  // remembering the exponents for the reverse triplet lookup.
  std::map<std::pair<uint32_t, uint32_t>, Int> beta_pows;
  std::map<std::pair<uint32_t, uint32_t>, std::pair<Int, Int>> alpha_delta_pows;
  for (Int b = 0; b < P.pr; ++b) {
    IdxAut ia = to_idx(aut_pow(ctx.tilde.beta_t, b, P));
    beta_pows.emplace(std::pair{ia.x, ia.y}, b);
  }
  for (Int a = 0; a < P.pr; ++a) {
    for (Int d = 0; d < ctx.d_modulus; ++d) {
      IdxAut ia = to_idx(compose(aut_pow(ctx.tilde.alpha_t, a, P),
                                 aut_pow(ctx.tilde.delta_t, d, P), P));
      alpha_delta_pows.emplace(std::pair{ia.x, ia.y}, std::pair{a, d});
    }
  }
  if (Int(beta_pows.size()) != P.pr ||
      Int(alpha_delta_pows.size()) != P.pr * ctx.d_modulus) {
    throw InternalError("aut_pair_scan: tilde powers collide on the lattice");
  }

  OracleVerdict verdict;
  verdict.p = P.p;
  verdict.m = P.m;
  verdict.n = P.n;
  verdict.r = P.r;
  verdict.n_equivariant_antihoms = 0;
  verdict.n_with_N_iso_G = 0;

  for (const IdxAut* px : psix) {
    IdxAut pxk = aut_pow_idx(g, *px, k);
    for (const IdxAut* py : psiy) {
      // Conjugation condition: psi_x psi_y = psi_y psi_x^k.
      if (compose_idx(g, *px, *py) != compose_idx(g, *py, pxk)) continue;
      if (!equivariant_idx(*px, *py)) continue;
      ++verdict.n_equivariant_antihoms;
      auto bit = beta_pows.find({px->x, px->y});
      auto adit = alpha_delta_pows.find({py->x, py->y});
      if (bit == beta_pows.end() || adit == alpha_delta_pows.end()) {
        ++verdict.containment_violations;
      } else {
        verdict.recovered_triplets.push_back(
            {adit->second.first, bit->second, adit->second.second});
      }
      // Classify N_Gamma from its presentation data, back in exact form.
      HolElement phi_x{{1, 0},
                       {element_at(px->x, P), element_at(px->y, P)}};
      HolElement phi_y{{0, 1},
                       {element_at(py->x, P), element_at(py->y, P)}};
      if (hol_element_order(phi_x, P) != P.pm) continue;
      if (hol_element_order(phi_y, P) != P.pn) continue;
      auto w = conjugation_exponent(phi_x, phi_y, P);
      if (!w) continue;
      if (*w == 1 || vp(*w - 1, P.p) != P.m - P.r) continue;
      // <Phi_x> and <Phi_y> must intersect trivially for the semidirect
      // presentation to have full order.
      std::vector<HolElement> cx = cyclic_closure(phi_x, P);
      std::vector<HolElement> cy = cyclic_closure(phi_y, P);
      std::vector<HolElement> common;
      std::set_intersection(cx.begin(), cx.end(), cy.begin(), cy.end(),
                            std::back_inserter(common));
      if (common.size() != 1) continue;
      ++verdict.n_with_N_iso_G;
    }
  }

  std::sort(verdict.recovered_triplets.begin(),
            verdict.recovered_triplets.end());
  verdict.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return verdict;
}

bool normality_check(const Triplet& t, const GammaContext& ctx,
                     NormalityMode mode, const Budget& budget) {
  const GroupParams& P = ctx.P;
  IndexedGroup g(P, budget);
  const uint32_t n = static_cast<uint32_t>(g.size);
  // Element inverses from the Cayley table.
  std::vector<uint32_t> inv(n);
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = 0; b < n; ++b) {
      if (g.at(a, b) == 0) {
        inv[a] = b;
        break;
      }
    }
  }
  auto to_idx = [&](const Automorphism& a) {
    return IdxAut{static_cast<uint32_t>(element_index(a.img_x, P)),
                  static_cast<uint32_t>(element_index(a.img_y, P))};
  };
  GammaMap gm = gamma_from_triplet(t, ctx);
  IdxAut psi_x = to_idx(gm.psi_x), psi_y = to_idx(gm.psi_y);

  // Realize the N_Gamma element set as permutation tables; the set is
  // defined for any triplet even when it fails to be a subgroup.  The
  // element for sigma = x^i y^j acts by tau -> Gamma(sigma)(tau) sigma^{-1}
  // with Gamma(sigma) = psi_y^j psi_x^i.
  std::set<std::vector<uint32_t>> n_set;
  for (uint32_t sigma = 0; sigma < n; ++sigma) {
    IdxAut phi = compose_idx(g, aut_pow_idx(g, psi_y, sigma % g.pn),
                             aut_pow_idx(g, psi_x, sigma / g.pn));
    std::vector<uint32_t> table(n);
    for (uint32_t tau = 0; tau < n; ++tau) {
      table[tau] = g.at(apply_idx(g, phi, tau), inv[sigma]);
    }
    n_set.insert(std::move(table));
  }

  // Conjugators as permutation tables.
  std::vector<std::vector<uint32_t>> conjugators;
  auto push_rho = [&](uint32_t sigma) {
    std::vector<uint32_t> table(n);
    for (uint32_t tau = 0; tau < n; ++tau) table[tau] = g.at(tau, inv[sigma]);
    conjugators.push_back(std::move(table));
  };
  auto push_aut = [&](const IdxAut& phi) {
    std::vector<uint32_t> table(n);
    for (uint32_t tau = 0; tau < n; ++tau) table[tau] = apply_idx(g, phi, tau);
    conjugators.push_back(std::move(table));
  };
  if (mode == NormalityMode::Generators) {
    push_rho(static_cast<uint32_t>(g.pn));  // rho(x)
    push_rho(1);                            // rho(y)
    for (const Automorphism* gen :
         {&ctx.gens.alpha, &ctx.gens.beta, &ctx.gens.gamma, &ctx.gens.delta}) {
      push_aut(to_idx(*gen));
    }
  } else {
    std::vector<Automorphism> auts = aut_enumerate(P, budget);
    Int work = P.order() * Int(auts.size()) * Int(n_set.size());
    if (work > to_int(budget.max_pair_ops)) {
      throw BudgetExceeded("full-mode normality check over budget");
    }
    std::vector<std::vector<uint32_t>> aut_tables;
    for (const Automorphism& phi : auts) {
      IdxAut ia = to_idx(phi);
      std::vector<uint32_t> table(n);
      for (uint32_t tau = 0; tau < n; ++tau) {
        table[tau] = apply_idx(g, ia, tau);
      }
      aut_tables.push_back(std::move(table));
    }
    for (uint32_t sigma = 0; sigma < n; ++sigma) {
      for (const auto& aut_table : aut_tables) {
        std::vector<uint32_t> table(n);
        for (uint32_t tau = 0; tau < n; ++tau) {
          table[tau] = g.at(aut_table[tau], inv[sigma]);
        }
        conjugators.push_back(std::move(table));
      }
    }
  }

  std::vector<uint32_t> scratch(n), c_inv(n);
  for (const auto& c : conjugators) {
    for (uint32_t tau = 0; tau < n; ++tau) c_inv[c[tau]] = tau;
    for (const auto& nu : n_set) {
      for (uint32_t tau = 0; tau < n; ++tau) scratch[tau] = c[nu[c_inv[tau]]];
      if (!n_set.count(scratch)) return false;
    }
  }
  return true;
}

bool normality_check(const Triplet& t, const GroupParams& P,
                     NormalityMode mode, const Budget& budget) {
  GammaContext ctx(P);
  return normality_check(t, ctx, mode, budget);
}

bool equivariance_full_check(const GammaMap& gm, const GroupParams& P,
                             unsigned samples, uint64_t seed) {
  AutGenerators gens = make_generators(P);
  std::mt19937_64 rng(seed);
  auto random_below = [&rng](const Int& bound) {
    // Desk-scale bounds; a 64-bit draw is plenty.
    return Int(static_cast<unsigned long>(rng() % to_ull(bound)));
  };
  Int alpha_ord = aut_order(gens.alpha, P);
  Int beta_ord = aut_order(gens.beta, P);
  Int gamma_ord = aut_order(gens.gamma, P);
  Int delta_ord = aut_order(gens.delta, P);
  for (unsigned s = 0; s < samples; ++s) {
    GroupElement sigma{random_below(P.pm), random_below(P.pn)};
    Automorphism phi = compose(
        compose(aut_pow(gens.beta, random_below(beta_ord), P),
                aut_pow(gens.gamma, random_below(gamma_ord), P), P),
        compose(aut_pow(gens.alpha, random_below(alpha_ord), P),
                aut_pow(gens.delta, random_below(delta_ord), P), P),
        P);
    Automorphism lhs = gamma_apply(gm, apply(phi, sigma, P), P);
    Automorphism rhs = compose(compose(phi, gamma_apply(gm, sigma, P), P),
                               inverse_aut(phi, P), P);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace mholo
