// Shared basics: exact integer type, error taxonomy, enumeration budgets.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mholo {

// All arithmetic is exact. Intermediate products (e.g. inside geometric
// sums) must never wrap, so everything runs on arbitrary precision even
// though the moduli we care about fit in machine words.
using Int = mpz_class;

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration or scan would exceed the configured budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A fast-path criterion was requested in the open regime m-r < n < m.
struct RegimeUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A condition that must hold by the underlying theory failed.  Firing
// indicates a bug, never a data error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct Budget {
  // Cap on |G| for full element enumeration (permutation tables, element
  // scans).  Default 3^7.
  unsigned long long max_group_enum = 2187;
  // Cap on |G| for the centre probe, which only multiplies each element
  // against the two generators.  Default 3^10.
  unsigned long long max_center_enum = 59049;
  // Cap on pairwise scan work: |G|^2 for automorphism enumeration and
  // |Aut(G)|^2 for the oracle pair scan.  A partial oracle is worse than
  // none, so past this the scan refuses instead of subsampling.
  unsigned long long max_pair_ops = 100000000ULL;
};

// Narrowing helper for loop bounds and table indices.
unsigned long long to_ull(const Int& x);

// gmpxx has no unsigned-long-long constructor; widen through a string-free
// split instead.
inline Int to_int(unsigned long long v) {
  Int hi = static_cast<unsigned long>(v >> 32);
  return (hi << 32) + static_cast<unsigned long>(v & 0xffffffffULL);
}

}  // namespace mholo
