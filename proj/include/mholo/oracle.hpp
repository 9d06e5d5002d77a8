// Independent brute-force validators that bypass the triplet congruences:
// a full Aut(G)^2 scan for equivariant antihomomorphisms classifying each
// N_Gamma by its presentation data, plus permutation-level normality and
// randomized equivariance checks.
#pragma once

#include <cstdint>

#include "mholo/holomorph.hpp"

namespace mholo {

struct OracleVerdict {
  Int p;
  unsigned m = 0, n = 0, r = 0;
  Int n_equivariant_antihoms;  // must equal the admissible-triplet count
  Int n_with_N_iso_G;          // must equal |T(G)|
  // Survivors whose Gamma(x), Gamma(y) escape <beta~> resp. <alpha~><delta~>
  // (must stay 0).
  unsigned long long containment_violations = 0;
  // Reverse lookup of each survivor on the triplet lattice, sorted; must
  // equal the admissible set exactly.
  std::vector<Triplet> recovered_triplets;
  double runtime_seconds = 0.0;
};

// Scans all (psi_x, psi_y) in Aut(G)^2, pre-filtered by the three
// antihomomorphism conditions, keeps the equivariant pairs, and classifies
// each N_Gamma from the orders of Phi_x, Phi_y, the conjugation exponent
// and the cyclic-intersection test.  Shares nothing with the congruence
// checkers.
OracleVerdict aut_pair_scan(const GroupParams& P, const Budget& budget = {});

enum class NormalityMode { Generators, Full };

// Realizes N_Gamma as permutations and conjugates it either by the
// standard generators of Hol(G) or by every element of Hol(G).
bool normality_check(const Triplet& t, const GroupParams& P,
                     NormalityMode mode, const Budget& budget = {});
bool normality_check(const Triplet& t, const GammaContext& ctx,
                     NormalityMode mode, const Budget& budget = {});

// Checks Gamma(phi(sigma)) = phi Gamma(sigma) phi^{-1} on `samples` random
// (sigma, phi) pairs, phi drawn uniformly via normal-form coordinates.
bool equivariance_full_check(const GammaMap& gm, const GroupParams& P,
                             unsigned samples, uint64_t seed = 0x5eed);

}  // namespace mholo
