// The split metacyclic p-group
//   G = < x, y : x^{p^m} = 1, y^{p^n} = 1, y x y^{-1} = x^{1+p^{m-r}} >
// with p odd, m >= 2, n >= 1, 1 <= r <= min(n, m-1).  Elements are kept in
// the normal form x^i y^j with canonical residues, and all arithmetic goes
// through the closed formulas
//   y^j x^i = x^{i k^j} y^j,   (x^i y^j)^l = x^{i S(k^j, l)} y^{jl},
// where k = 1 + p^{m-r}.
#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "mholo/arith.hpp"
#include "mholo/common.hpp"

namespace mholo {

// m <= n and n <= m-r admit closed counting formulas; the strip
// m-r < n < m does not and is only ever enumerated.
enum class Regime { M_LE_N, N_LE_M_MINUS_R, OPEN };

const char* regime_name(Regime regime);

struct GroupParams {
  Int p;
  unsigned m = 0, n = 0, r = 0;

  // Cached powers: p^m, p^n, p^r, p^{m-r}.
  Int pm, pn, pr, pmr;
  // k = 1 + p^{m-r}, the conjugation exponent.
  Int k;
  // q = p^{max(n-m+r,0)}, the y-shift exponent of the generator gamma.
  Int q;
  Regime regime = Regime::OPEN;

  static GroupParams make(const Int& p, unsigned m, unsigned n, unsigned r);

  Int order() const { return pm * pn; }
};

struct GroupElement {
  Int i, j;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend std::strong_ordering operator<=>(const GroupElement& a,
                                          const GroupElement& b) {
    if (auto c = cmp(a.i, b.i); c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    auto c = cmp(a.j, b.j);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
};

inline GroupElement identity_element() { return {0, 0}; }

GroupElement canonical(const Int& i, const Int& j, const GroupParams& P);

GroupElement mul(const GroupElement& g1, const GroupElement& g2,
                 const GroupParams& P);

// g^ell by the closed formula; negative ell goes through the inverse.
GroupElement pow(const GroupElement& g, const Int& ell, const GroupParams& P);

GroupElement inverse(const GroupElement& g, const GroupParams& P);

// [g, h] = g h g^{-1} h^{-1}.
GroupElement commutator(const GroupElement& g, const GroupElement& h,
                        const GroupParams& P);

Int element_order(const GroupElement& g, const GroupParams& P);

// Brute-force centre {g : g commutes with x and y}, sorted.  Must equal
// <x^{p^r}, y^{p^r}>.
std::vector<GroupElement> center(const GroupParams& P,
                                 const Budget& budget = {});

// Length of the lower central series, by iterated commutator-subgroup
// closure.  Equals 2 whenever r <= m-r.
unsigned nilpotency_class(const GroupParams& P, const Budget& budget = {});

// Subgroup generated by a set of elements (breadth-first closure).
std::vector<GroupElement> subgroup_closure(std::vector<GroupElement> gens,
                                           const GroupParams& P);

// Dense enumeration: index(x^i y^j) = i * p^n + j.
std::size_t element_index(const GroupElement& g, const GroupParams& P);
GroupElement element_at(std::size_t index, const GroupParams& P);
// |G| as a machine word; throws BudgetExceeded past the budget cap.
std::size_t group_order_checked(const GroupParams& P,
                                unsigned long long cap);

}  // namespace mholo
