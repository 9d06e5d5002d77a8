// Aut(G) for the split metacyclic p-group G.  An automorphism is stored by
// the images of the two generators and validated against the presentation:
// relation preservation plus invertibility on the Frattini quotient
// G/(G^p [G,G]) = (Z/p)^2.  Aut(G) = <beta><gamma><alpha><delta> with
//   alpha(x) = x^u,              alpha(y) = y,
//   beta(x)  = x,                beta(y)  = x^{p^{max(m-n,0)}} y,
//   gamma(x) = x y^{p^{max(n-m+r,0)}},  gamma(y) = y,
//   delta(x) = x,                delta(y) = y^{1+p^r},
// u a fixed generator of the units mod p^m.
#pragma once

#include <vector>

#include "mholo/group.hpp"

namespace mholo {

struct Automorphism {
  GroupElement img_x, img_y;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend std::strong_ordering operator<=>(const Automorphism&,
                                          const Automorphism&) = default;
};

bool is_valid_automorphism(const GroupElement& img_x, const GroupElement& img_y,
                           const GroupParams& P);

// Validating constructor; throws InvalidParams if the pair is not an
// automorphism.
Automorphism make_automorphism(const GroupElement& img_x,
                               const GroupElement& img_y,
                               const GroupParams& P);

inline Automorphism identity_aut() {
  return {{1, 0}, {0, 1}};
}

// phi(x^i y^j) = phi(x)^i phi(y)^j.
GroupElement apply(const Automorphism& phi, const GroupElement& g,
                   const GroupParams& P);

// (phi . psi)(g) = phi(psi(g)).
Automorphism compose(const Automorphism& phi, const Automorphism& psi,
                     const GroupParams& P);

Automorphism inverse_aut(const Automorphism& phi, const GroupParams& P);

// phi^e; negative e through the inverse.
Automorphism aut_pow(const Automorphism& phi, const Int& e,
                     const GroupParams& P);

Int aut_order(const Automorphism& phi, const GroupParams& P);

// |Aut(G)| = (p-1) p^{m-1} p^{min(m,n)} p^{min(m-r,n)} p^{n-r}.
Int aut_order_formula(const GroupParams& P);

struct AutGenerators {
  Automorphism alpha, beta, gamma, delta;
  Int u;  // the fixed primitive root mod p^m
};

AutGenerators make_generators(const GroupParams& P);

// Exhaustive scan of G x G for automorphism pairs; the result must have
// exactly aut_order_formula(P) entries.
std::vector<Automorphism> aut_enumerate(const GroupParams& P,
                                        const Budget& budget = {});

// Least a0 >= 0 with u^{a0} = u S((1+p^{m-r})^q, u^{-1} mod p^m) mod p^m.
// Satisfies alpha gamma alpha^{-1} = alpha^{a0} gamma^{u^{-1}}.
Int solve_a0(const GroupParams& P, const AutGenerators& gens);

// The tilde generators
//   alpha~ = alpha^{(p-1)p^{m-r-1}}, beta~ = beta^{p^{min(m,n)-r}},
//   delta~ = delta^{p^{max(n-2r,0)}},
// of orders p^r, p^r, p^{min(r,n-r)}, together with
//   u~ = u^{(p-1)p^{m-r-1}} mod p^m   (p^{m-r} || u~ - 1)
//   v~ = (1+p^r)^{p^{max(n-2r,0)}}    (p^{max(r,n-r)} || v~ - 1),
// v~ stored mod p^{max(m,n)+1} so that both reductions and the valuation
// of v~ - 1 stay exact.
struct TildeGenerators {
  Automorphism alpha_t, beta_t, delta_t;
  Int u_t;
  Int v_t;
  Int v_modulus;  // p^{max(m,n)+1}
};

TildeGenerators make_tilde(const GroupParams& P, const AutGenerators& gens);

// Coordinates of phi = beta^b gamma^c alpha^a delta^d, reduced modulo the
// generator orders.  Staged solve: d and b come from phi(y) exactly, the
// (c, a) residual is resolved against gamma's order with a discrete log,
// and the result is verified by recomposition (throws InternalError if
// that ever fails).
struct AutCoordinates {
  Int a, b, c, d;
};

AutCoordinates normal_form(const Automorphism& phi, const GroupParams& P);
AutCoordinates normal_form(const Automorphism& phi, const GroupParams& P,
                           const AutGenerators& gens);

// An element rho(g) phi of Hol(G) = rho(G) x| Aut(G), acting as
// tau |-> phi(tau) g^{-1}.  Product: (g1,f1)(g2,f2) = (g1 f1(g2), f1 f2).
struct HolElement {
  GroupElement g;
  Automorphism phi;

  friend bool operator==(const HolElement&, const HolElement&) = default;
  friend std::strong_ordering operator<=>(const HolElement&,
                                          const HolElement&) = default;
};

inline HolElement hol_identity() {
  return {identity_element(), identity_aut()};
}

HolElement hol_mul(const HolElement& h1, const HolElement& h2,
                   const GroupParams& P);
HolElement hol_inverse(const HolElement& h, const GroupParams& P);
HolElement hol_pow(const HolElement& h, const Int& e, const GroupParams& P);
GroupElement hol_apply(const HolElement& h, const GroupElement& tau,
                       const GroupParams& P);

}  // namespace mholo
