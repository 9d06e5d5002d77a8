// Candidate maps Gamma : G -> Aut(G) and their arithmetic.  A triplet
// (a, b, d) on the modulus lattice M = p^r Z x p^r Z x p^{min(r,n-r)} Z
// parametrizes
//   Gamma_{a,b,d}(x) = beta~^b,   Gamma_{a,b,d}(y) = alpha~^a delta~^d,
// which extends to an antihomomorphism exactly when the triplet is
// pre-admissible and is Aut(G)-equivariant exactly when it is admissible.
// The induced subgroup
//   N_Gamma = { rho(x^i y^j) alpha~^{aj} delta~^{dj} beta~^{bi} }
// of Hol(G) is split metacyclic with twist 1 + p^{m-r+s}; it is isomorphic
// to G precisely when s = 0.
#pragma once

#include <optional>
#include <vector>

#include "mholo/aut.hpp"

namespace mholo {

struct Triplet {
  Int a, b, d;

  friend bool operator==(const Triplet&, const Triplet&) = default;
  friend std::strong_ordering operator<=>(const Triplet&,
                                          const Triplet&) = default;
};

struct GammaMap {
  Automorphism psi_x, psi_y;  // Gamma(x), Gamma(y)
};

// Derived per-parameter state shared by every triplet computation.
struct GammaContext {
  GroupParams P;
  AutGenerators gens;
  TildeGenerators tilde;
  Int a0;
  Int d_modulus;  // p^{min(r,n-r)}, the d-range of the lattice

  explicit GammaContext(const GroupParams& P);

  Int u_t_pow(const Int& e) const;                     // u~^e mod p^m
  Int v_t_pow(const Int& e, const Int& modulus) const; // v~^e mod modulus
};

GammaMap gamma_from_triplet(const Triplet& t, const GammaContext& ctx);

// Gamma(x^i y^j) = psi_y^j psi_x^i, the antihomomorphic extension along the
// canonical spelling.  Well-defined once is_antihom holds.
Automorphism gamma_apply(const GammaMap& gm, const GroupElement& sigma,
                         const GroupParams& P);

// psi_x^{p^m} = psi_y^{p^n} = Id and psi_y^{-1} psi_x psi_y = psi_x^k.
bool is_antihom(const GammaMap& gm, const GroupParams& P);

// The eight relations Gamma(phi(x)) = phi Gamma(x) phi^{-1},
// Gamma(phi(y)) = phi Gamma(y) phi^{-1} over the four generators.
// Requires is_antihom.
bool is_equivariant(const GammaMap& gm, const GammaContext& ctx);

// b u~^{-a} = b (1 + p^{m-r}) mod p^r.
bool is_preadmissible(const Triplet& t, const GammaContext& ctx);

// Full congruence battery, valid in every regime (including the open one).
bool is_admissible_general(const Triplet& t, const GammaContext& ctx);

// Two-congruence shortcut of the closed regimes; throws RegimeUnsupported
// in the open regime.
bool is_admissible_fast(const Triplet& t, const GammaContext& ctx);

// mu_a with u~^a = 1 + mu_a p^{m-r} mod p^m; a |-> mu_a is a bijection on
// Z/p^r.
Int mu_coord(const Int& a, const GammaContext& ctx);

// nu_d with v~^d = 1 + nu_d p^{m-r} mod p^m; only meaningful when
// max(r, n-r) = m-r (the m = n, r <= m-r case).
Int nu_coord(const Int& d, const GammaContext& ctx);

// N_Gamma ~ G iff 1 + mu_a - b != 0 mod p.  Only meaningful on admissible
// triplets.
bool iso_criterion_mu(const Triplet& t, const GammaContext& ctx);

struct IsoInvariant {
  unsigned s = 0;  // p^{m-r+s} || u~^a (1 + (1-b) p^{m-r}) - 1, capped at r
  Int j;           // least positive j coprime to p with
                   // (u~^a (1+(1-b)p^{m-r}))^j = 1 + p^{m-r+s} mod p^m
};

// Twist invariant of N_Gamma; throws InvalidParams on a non-admissible
// triplet.
IsoInvariant iso_invariant(const Triplet& t, const GammaContext& ctx);
IsoInvariant iso_invariant_unchecked(const Triplet& t,
                                     const GammaContext& ctx);

// The twist unit w = u~^a (1 + (1-b) p^{m-r}) mod p^m itself.
Int twist_unit(const Triplet& t, const GammaContext& ctx);

struct RegularSubgroupReport {
  Triplet triplet;
  bool preadmissible = false;
  bool admissible = false;
  std::optional<IsoInvariant> invariant;  // present iff admissible
  bool iso_to_G = false;
  // Presentation parameters of N_Gamma = <Phi_x> x| <Phi_y'>: same p, m, n
  // with r replaced by r - s; abelian when s = r.
  unsigned r_presented = 0;
  bool abelian = false;
};

RegularSubgroupReport analyze_triplet(const Triplet& t,
                                      const GammaContext& ctx);

// Phi_x = rho(x) beta~^b and Phi_y = rho(y) alpha~^a delta~^d.
HolElement phi_x_element(const Triplet& t, const GammaContext& ctx);
HolElement phi_y_element(const Triplet& t, const GammaContext& ctx);

// All p^{m+n} elements rho(sigma) Gamma(sigma) of N_Gamma, indexed by
// element_index(sigma).  Requires a pre-admissible triplet.
std::vector<HolElement> n_gamma_elements(const Triplet& t,
                                         const GammaContext& ctx,
                                         const Budget& budget = {});

// Lattice iteration in fixed (a, b, d) lexicographic order.
std::vector<Triplet> all_triplets(const GammaContext& ctx);

// a_lambda with u~^{a_lambda} = (1+p^{m-r})^{-1} mod p^m; the triplet
// (a_lambda, 1, 0) realizes Gamma_lambda (and N = lambda(G)).
Int a_lambda(const GammaContext& ctx);

}  // namespace mholo
