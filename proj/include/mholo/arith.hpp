// Modular and p-adic arithmetic primitives: canonical residues, geometric
// sums S(z,l) = 1 + z + ... + z^{l-1}, p-adic valuations, multiplicative
// orders, primitive roots and discrete logarithms in (Z/p^e)^*.
#pragma once

#include <optional>

#include "mholo/common.hpp"

namespace mholo {

// Deterministic primality test (trial division; intended for desk-scale p).
bool is_prime(const Int& x);

// A validated prime power p^e with p an odd prime and e >= 0.
class PrimePower {
 public:
  PrimePower(Int p, unsigned e);

  const Int& p() const { return p_; }
  unsigned exponent() const { return e_; }
  const Int& value() const { return value_; }

 private:
  Int p_;
  unsigned e_;
  Int value_;
};

// Canonical representative of x in [0, modulus).
Int mod_reduce(const Int& x, const Int& modulus);

// base^exp mod modulus by square-and-multiply; exp < 0 inverts first (the
// base must then be a unit).
Int pow_mod(const Int& base, const Int& exp, const Int& modulus);

// Modular inverse; throws InvalidParams if gcd(x, modulus) != 1.
Int inv_mod(const Int& x, const Int& modulus);

// S(z, ell) mod modulus via the doubling recursion
//   S(z,2t) = S(z,t)(1+z^t),  S(z,2t+1) = S(z,2t) + z^{2t},
// with S(z,0) = 0 (the empty sum).  O(log ell) multiplications.
Int s_sum(const Int& z, const Int& ell, const Int& modulus);

// Largest e with p^e | x.  Rejects x = 0.
unsigned vp(const Int& x, const Int& p);

// Least l >= 1 with z^l = 1 mod p^e.  Rejects z divisible by p.
Int mult_order(const Int& z, const PrimePower& modulus);

// The smallest integer u >= 2 that is a primitive root mod p^2 (such a u
// generates the units mod p^e for every e >= 1), reduced mod the given
// modulus.  Requires e >= 1.
Int primitive_root(const PrimePower& modulus);

// Smallest e >= 0 with base^e = target mod p^e, or nullopt if target does
// not lie in <base>.  Both arguments must be units.  Scans naively while
// ord(base) stays below brute_threshold and switches to Pohlig-Hellman
// above it.
std::optional<Int> discrete_log(const Int& target, const Int& base,
                                const PrimePower& modulus,
                                unsigned long long brute_threshold = 1000000);

}  // namespace mholo
