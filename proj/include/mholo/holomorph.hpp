// Hol(G) as a permutation machine: dense permutation tables over the
// element enumeration index(x^i y^j) = i p^n + j, the regular
// representations, Hol- and Aut-membership predicates, the explicit coset
// representatives pi_{a,b,d} of T(G) = NHol(G)/Hol(G), power maps
// pi_l(sigma) = sigma^l, the maps pi'_v, and T(G) coset arithmetic.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mholo/count.hpp"
#include "mholo/gamma.hpp"

namespace mholo {

struct GPermutation {
  std::vector<uint32_t> table;

  uint32_t operator()(uint32_t idx) const { return table[idx]; }
  friend bool operator==(const GPermutation&, const GPermutation&) = default;
  friend auto operator<=>(const GPermutation&, const GPermutation&) = default;
};

template <typename Fn>
GPermutation perm_from_fn(const GroupParams& P, const Budget& budget, Fn&& fn) {
  std::size_t order = group_order_checked(P, budget.max_group_enum);
  GPermutation perm;
  perm.table.resize(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    perm.table[idx] = static_cast<uint32_t>(
        element_index(fn(element_at(idx, P)), P));
  }
  return perm;
}

GPermutation identity_perm(const GroupParams& P, const Budget& budget = {});
bool is_bijection(const GPermutation& f);
// (f . g)(sigma) = f(g(sigma))
GPermutation compose(const GPermutation& f, const GPermutation& g);
GPermutation inverse_perm(const GPermutation& f);

// lambda(sigma): tau -> sigma tau  and  rho(sigma): tau -> tau sigma^{-1}.
std::pair<GPermutation, GPermutation> lambda_rho(const GroupElement& sigma,
                                                 const GroupParams& P,
                                                 const Budget& budget = {});

GPermutation perm_from_hol(const HolElement& h, const GroupParams& P,
                           const Budget& budget = {});
GPermutation perm_from_aut(const Automorphism& phi, const GroupParams& P,
                           const Budget& budget = {});

// f lies in Hol(G) = rho(G) Aut(G) iff sigma -> f(sigma) f(1)^{-1} is an
// automorphism; checked on the generator images and then on the full table.
bool hol_member(const GPermutation& f, const GroupParams& P);

// f lies in Aut(G): fixes 1 and is an automorphism pointwise.
bool aut_member(const GPermutation& f, const GroupParams& P);

// Same coset of Hol(G): f^{-1} . g in Hol(G).
bool coset_equal(const GPermutation& f, const GPermutation& g,
                 const GroupParams& P);

// Congruence mod Aut(G) (strictly stronger than coset_equal).
bool aut_congruent(const GPermutation& f, const GPermutation& g,
                   const GroupParams& P);

// The inversion map iota(sigma) = sigma^{-1} (= pi_{0,0,0}).
GPermutation inversion_map(const GroupParams& P, const Budget& budget = {});

// pi_{a,b,d}(x^i y^j) =
//   x^{-i (1 + b p^{m-r} S(k, E)) k^{-E}} y^{-E},  E = S(v~^d, j0 j),
// for an admissible triplet with s = 0 and j0 = j_{a,b,d}.  Conjugation by
// it carries lambda(G) onto N_Gamma.
GPermutation pi_map(const Triplet& t, const GammaContext& ctx,
                    const Budget& budget = {});
// Same map with an explicit choice of j0 (must satisfy the jabd
// congruence; unchecked).
GPermutation pi_map_with_j(const Triplet& t, const Int& j0,
                           const GammaContext& ctx, const Budget& budget = {});
// Definition-level evaluation (Phi_x^i Phi_y^{j0 j})(1), used as an oracle
// against the closed formula.
GPermutation pi_map_from_definition(const Triplet& t, const GammaContext& ctx,
                                    const Budget& budget = {});

// sigma -> sigma^ell for ell coprime to p.
GPermutation power_map(const Int& ell, const GroupParams& P,
                       const Budget& budget = {});

// x^i y^j -> x^i y^{S(v,j)} for v = 1 mod p.
GPermutation pi_prime_map(const Int& v, const GroupParams& P,
                          const Budget& budget = {});

enum class TMethod { Formula, Triplets, Oracle };

// |T(G)| by the chosen route.  Formula throws RegimeUnsupported in the
// open regime; Oracle runs the independent Aut(G)^2 scan.
Int t_group_order(const GroupParams& P, TMethod method,
                  const Budget& budget = {});

struct TCosetClass {
  GPermutation representative;
  std::optional<Triplet> label;
};

struct TGroupTable {
  std::vector<TCosetClass> classes;
  // product[i][j] = index of the class of classes[i] . classes[j]
  std::vector<std::vector<std::size_t>> product;
  std::size_t identity_index = 0;
};

// Multiplication table of {pi_{a,b,d} Hol(G)} under composition followed
// by coset identification.
TGroupTable t_group_table(const GroupParams& P, const Budget& budget = {});

}  // namespace mholo
