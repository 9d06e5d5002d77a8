#include "mholo/aut.hpp"

#include <algorithm>
#include <utility>

namespace mholo {

bool is_valid_automorphism(const GroupElement& img_x, const GroupElement& img_y,
                           const GroupParams& P) {
  // Invertibility on the Frattini quotient (Z/p)^2: the images must
  // generate, and for a p-group that is also sufficient for surjectivity.
  Int det = mod_reduce(img_x.i * img_y.j - img_y.i * img_x.j, P.p);
  if (det == 0) return false;
  // Relations of the presentation must be preserved.
  const GroupElement id = identity_element();
  if (pow(img_x, P.pm, P) != id) return false;
  if (pow(img_y, P.pn, P) != id) return false;
  // phi(y) phi(x) = phi(x)^k phi(y)
  return mul(img_y, img_x, P) == mul(pow(img_x, P.k, P), img_y, P);
}

Automorphism make_automorphism(const GroupElement& img_x,
                               const GroupElement& img_y,
                               const GroupParams& P) {
  if (!is_valid_automorphism(img_x, img_y, P)) {
    throw InvalidParams("images do not define an automorphism");
  }
  return {img_x, img_y};
}

GroupElement apply(const Automorphism& phi, const GroupElement& g,
                   const GroupParams& P) {
  return mul(pow(phi.img_x, g.i, P), pow(phi.img_y, g.j, P), P);
}

Automorphism compose(const Automorphism& phi, const Automorphism& psi,
                     const GroupParams& P) {
  return {apply(phi, psi.img_x, P), apply(phi, psi.img_y, P)};
}

Automorphism aut_pow(const Automorphism& phi, const Int& e,
                     const GroupParams& P) {
  if (e < 0) return inverse_aut(aut_pow(phi, -e, P), P);
  Automorphism result = identity_aut();
  Automorphism base = phi;
  Int exp = e;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) result = compose(result, base, P);
    exp >>= 1;
    if (exp > 0) base = compose(base, base, P);
  }
  return result;
}

Int aut_order_formula(const GroupParams& P) {
  auto ppow = [&](unsigned e) {
    Int v;
    mpz_pow_ui(v.get_mpz_t(), P.p.get_mpz_t(), e);
    return v;
  };
  return (P.p - 1) * ppow(P.m - 1) * ppow(std::min(P.m, P.n)) *
         ppow(std::min(P.m - P.r, P.n)) * ppow(P.n - P.r);
}

Int aut_order(const Automorphism& phi, const GroupParams& P) {
  // The order divides |Aut(G)|; peel p and the prime factors of p-1.
  Int order = aut_order_formula(P);
  const Automorphism id = identity_aut();
  if (aut_pow(phi, order, P) != id) {
    throw InternalError("aut_order: |Aut| is not an exponent bound");
  }
  std::vector<Int> primes{P.p};
  Int rest = P.p - 1;
  for (Int d = 2; d * d <= rest; d == 2 ? d = 3 : d += 2) {
    if (rest % d == 0) {
      primes.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) primes.push_back(rest);
  for (const Int& f : primes) {
    while (order % f == 0 && aut_pow(phi, order / f, P) == id) order /= f;
  }
  return order;
}

Automorphism inverse_aut(const Automorphism& phi, const GroupParams& P) {
  return aut_pow(phi, aut_order(phi, P) - 1, P);
}

AutGenerators make_generators(const GroupParams& P) {
  Int u = primitive_root(PrimePower(P.p, P.m));
  Int xshift;  // p^{max(m-n,0)}
  mpz_pow_ui(xshift.get_mpz_t(), P.p.get_mpz_t(), P.m > P.n ? P.m - P.n : 0);
  AutGenerators gens{
      make_automorphism({u, 0}, {0, 1}, P),
      make_automorphism({1, 0}, {mod_reduce(xshift, P.pm), 1}, P),
      make_automorphism({1, mod_reduce(P.q, P.pn)}, {0, 1}, P),
      make_automorphism({1, 0}, {0, mod_reduce(1 + P.pr, P.pn)}, P),
      u};
  return gens;
}

std::vector<Automorphism> aut_enumerate(const GroupParams& P,
                                        const Budget& budget) {
  std::size_t order = group_order_checked(P, budget.max_group_enum);
  if (P.order() * P.order() > to_int(budget.max_pair_ops)) {
    throw BudgetExceeded("|G|^2 exceeds pair-scan budget");
  }
  const GroupElement id = identity_element();
  // Candidate images: x needs order dividing p^m, y dividing p^n.
  std::vector<GroupElement> xs, ys;
  for (std::size_t idx = 0; idx < order; ++idx) {
    GroupElement g = element_at(idx, P);
    if (pow(g, P.pm, P) == id) xs.push_back(g);
    if (pow(g, P.pn, P) == id) ys.push_back(g);
  }
  std::vector<Automorphism> out;
  for (const GroupElement& gx : xs) {
    GroupElement gxk = pow(gx, P.k, P);
    for (const GroupElement& gy : ys) {
      if (mod_reduce(gx.i * gy.j - gy.i * gx.j, P.p) == 0) continue;
      if (mul(gy, gx, P) != mul(gxk, gy, P)) continue;
      out.push_back({gx, gy});
    }
  }
  return out;
}

Int solve_a0(const GroupParams& P, const AutGenerators& gens) {
  // u^{a0} = u S((1+p^{m-r})^q, u^{-1}) mod p^m, the summand count taken as
  // the canonical inverse of u mod p^m.
  Int count = inv_mod(gens.u, P.pm);
  Int z = pow_mod(P.k, P.q, P.pm);
  Int rhs = mod_reduce(gens.u * s_sum(z, count, P.pm), P.pm);
  auto a0 = discrete_log(rhs, gens.u, PrimePower(P.p, P.m));
  if (!a0) {
    throw InternalError("solve_a0: no solution; contradicts Aut(G) structure");
  }
  return *a0;
}

TildeGenerators make_tilde(const GroupParams& P, const AutGenerators& gens) {
  Int ea = (P.p - 1);
  {
    Int t;
    mpz_pow_ui(t.get_mpz_t(), P.p.get_mpz_t(), P.m - P.r - 1);
    ea *= t;
  }
  Int eb, ed;
  mpz_pow_ui(eb.get_mpz_t(), P.p.get_mpz_t(), std::min(P.m, P.n) - P.r);
  mpz_pow_ui(ed.get_mpz_t(), P.p.get_mpz_t(),
             P.n > 2 * P.r ? P.n - 2 * P.r : 0);
  TildeGenerators tilde;
  tilde.alpha_t = aut_pow(gens.alpha, ea, P);
  tilde.beta_t = aut_pow(gens.beta, eb, P);
  tilde.delta_t = aut_pow(gens.delta, ed, P);
  tilde.u_t = pow_mod(gens.u, ea, P.pm);
  mpz_pow_ui(tilde.v_modulus.get_mpz_t(), P.p.get_mpz_t(),
             std::max(P.m, P.n) + 1);
  tilde.v_t = pow_mod(1 + P.pr, ed, tilde.v_modulus);
  return tilde;
}

namespace {

Int generator_order_gamma(const GroupParams& P) {
  Int v;
  mpz_pow_ui(v.get_mpz_t(), P.p.get_mpz_t(), std::min(P.m - P.r, P.n));
  return v;
}

}  // namespace

AutCoordinates normal_form(const Automorphism& phi, const GroupParams& P,
                           const AutGenerators& gens) {
  // With phi = beta^b gamma^c alpha^a delta^d and A = u^a, V = (1+p^r)^d,
  // w = p^{max(m-n,0)}:
  //   phi(y) = ( b w S(k, V),                   V     )
  //   phi(x) = ( S(k^{cq}, A) + b w S(k, cqA),  c q A )
  const PrimePower ppm(P.p, P.m), ppn(P.p, P.n);
  auto d = discrete_log(phi.img_y.j, 1 + P.pr, ppn);
  if (!d) throw InternalError("normal_form: no delta coordinate");
  Int w;
  mpz_pow_ui(w.get_mpz_t(), P.p.get_mpz_t(), P.m > P.n ? P.m - P.n : 0);
  Int skv = s_sum(P.k, phi.img_y.j, P.pm);
  Int bw = mod_reduce(phi.img_y.i * inv_mod(skv, P.pm), P.pm);
  if (bw % w != 0) throw InternalError("normal_form: no beta coordinate");
  Int b = bw / w;  // reduced mod p^{min(m,n)} = ord(beta) by construction
  // Strip beta and delta, leaving gamma^c alpha^a.
  Automorphism residual =
      compose(compose(aut_pow(gens.beta, -b, P), phi, P),
              aut_pow(gens.delta, -*d, P), P);
  Int cord = generator_order_gamma(P);
  Automorphism gamma_inv = inverse_aut(gens.gamma, P);
  Automorphism chi = residual;
  for (Int c = 0; c < cord; ++c) {
    if (chi.img_y == GroupElement{0, 1} && chi.img_x.j == 0 &&
        chi.img_x.i % P.p != 0) {
      auto a = discrete_log(chi.img_x.i, gens.u, ppm);
      if (a) {
        AutCoordinates coords{*a, b, c, *d};
        Automorphism rebuilt = compose(
            compose(aut_pow(gens.beta, coords.b, P),
                    aut_pow(gens.gamma, coords.c, P), P),
            compose(aut_pow(gens.alpha, coords.a, P),
                    aut_pow(gens.delta, coords.d, P), P),
            P);
        if (rebuilt == phi) return coords;
      }
    }
    chi = compose(gamma_inv, chi, P);
  }
  throw InternalError("normal_form: decomposition failed");
}

AutCoordinates normal_form(const Automorphism& phi, const GroupParams& P) {
  return normal_form(phi, P, make_generators(P));
}

HolElement hol_mul(const HolElement& h1, const HolElement& h2,
                   const GroupParams& P) {
  return {mul(h1.g, apply(h1.phi, h2.g, P), P), compose(h1.phi, h2.phi, P)};
}

HolElement hol_inverse(const HolElement& h, const GroupParams& P) {
  Automorphism phi_inv = inverse_aut(h.phi, P);
  return {apply(phi_inv, inverse(h.g, P), P), phi_inv};
}

HolElement hol_pow(const HolElement& h, const Int& e, const GroupParams& P) {
  if (e < 0) return hol_pow(hol_inverse(h, P), -e, P);
  HolElement result = hol_identity();
  HolElement base = h;
  Int exp = e;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) result = hol_mul(result, base, P);
    exp >>= 1;
    if (exp > 0) base = hol_mul(base, base, P);
  }
  return result;
}

GroupElement hol_apply(const HolElement& h, const GroupElement& tau,
                       const GroupParams& P) {
  return mul(apply(h.phi, tau, P), inverse(h.g, P), P);
}

}  // namespace mholo
