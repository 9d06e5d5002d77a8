#include "mholo/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace mholo {

const char* regime_name(Regime regime) {
  switch (regime) {
    case Regime::M_LE_N: return "M_LE_N";
    case Regime::N_LE_M_MINUS_R: return "N_LE_M_MINUS_R";
    case Regime::OPEN: return "OPEN";
  }
  return "?";
}

GroupParams GroupParams::make(const Int& p, unsigned m, unsigned n,
                              unsigned r) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw InvalidParams("p must be an odd prime, got " + p.get_str());
  }
  if (m < 2) throw InvalidParams("m must be at least 2");
  if (n < 1) throw InvalidParams("n must be at least 1");
  if (r < 1 || r > std::min(n, m - 1)) {
    throw InvalidParams("r must satisfy 1 <= r <= min(n, m-1)");
  }
  GroupParams P;
  P.p = p;
  P.m = m;
  P.n = n;
  P.r = r;
  mpz_pow_ui(P.pm.get_mpz_t(), p.get_mpz_t(), m);
  mpz_pow_ui(P.pn.get_mpz_t(), p.get_mpz_t(), n);
  mpz_pow_ui(P.pr.get_mpz_t(), p.get_mpz_t(), r);
  mpz_pow_ui(P.pmr.get_mpz_t(), p.get_mpz_t(), m - r);
  P.k = 1 + P.pmr;
  unsigned qe = n + r > m ? n + r - m : 0;
  mpz_pow_ui(P.q.get_mpz_t(), p.get_mpz_t(), qe);
  if (m <= n) {
    P.regime = Regime::M_LE_N;
  } else if (n <= m - r) {
    P.regime = Regime::N_LE_M_MINUS_R;
  } else {
    P.regime = Regime::OPEN;
  }
  return P;
}

GroupElement canonical(const Int& i, const Int& j, const GroupParams& P) {
  return {mod_reduce(i, P.pm), mod_reduce(j, P.pn)};
}

GroupElement mul(const GroupElement& g1, const GroupElement& g2,
                 const GroupParams& P) {
  // x^{i1} y^{j1} x^{i2} y^{j2} = x^{i1 + i2 k^{j1}} y^{j1+j2}
  Int i = (g1.i + g2.i * pow_mod(P.k, g1.j, P.pm)) % P.pm;
  Int j = (g1.j + g2.j) % P.pn;
  return {i, j};
}

GroupElement pow(const GroupElement& g, const Int& ell, const GroupParams& P) {
  if (ell < 0) return pow(inverse(g, P), -ell, P);
  Int kj = pow_mod(P.k, g.j, P.pm);
  return {g.i * s_sum(kj, ell, P.pm) % P.pm, g.j * ell % P.pn};
}

GroupElement inverse(const GroupElement& g, const GroupParams& P) {
  // (x^i y^j)^{-1} = x^{-i k^{-j}} y^{-j}
  Int kinvj = pow_mod(inv_mod(P.k, P.pm), g.j, P.pm);
  return {mod_reduce(-g.i * kinvj, P.pm), mod_reduce(-g.j, P.pn)};
}

GroupElement commutator(const GroupElement& g, const GroupElement& h,
                        const GroupParams& P) {
  return mul(mul(g, h, P), mul(inverse(g, P), inverse(h, P), P), P);
}

Int element_order(const GroupElement& g, const GroupParams& P) {
  // Orders divide exp(G) = p^{max(m,n)}; peel the prime away.
  Int order;
  mpz_pow_ui(order.get_mpz_t(), P.p.get_mpz_t(), std::max(P.m, P.n));
  const GroupElement id = identity_element();
  if (pow(g, order, P) != id) throw InternalError("element_order: bad bound");
  while (order % P.p == 0 && pow(g, order / P.p, P) == id) order /= P.p;
  return order;
}

std::size_t group_order_checked(const GroupParams& P,
                                unsigned long long cap) {
  if (P.order() > to_int(cap)) {
    throw BudgetExceeded("|G| = " + P.order().get_str() +
                         " exceeds enumeration budget " + std::to_string(cap));
  }
  return static_cast<std::size_t>(to_ull(P.order()));
}

std::size_t element_index(const GroupElement& g, const GroupParams& P) {
  return static_cast<std::size_t>(to_ull(g.i * P.pn + g.j));
}

GroupElement element_at(std::size_t index, const GroupParams& P) {
  unsigned long long pn = to_ull(P.pn);
  return {Int(static_cast<unsigned long>(index / pn)),
          Int(static_cast<unsigned long>(index % pn))};
}

std::vector<GroupElement> center(const GroupParams& P, const Budget& budget) {
  std::size_t order = group_order_checked(P, budget.max_center_enum);
  const GroupElement x{1, 0}, y{0, 1};
  std::vector<GroupElement> out;
  for (std::size_t idx = 0; idx < order; ++idx) {
    GroupElement g = element_at(idx, P);
    if (mul(g, x, P) == mul(x, g, P) && mul(g, y, P) == mul(y, g, P)) {
      out.push_back(g);
    }
  }
  return out;  // index order is (i, j)-lexicographic, already sorted
}

std::vector<GroupElement> subgroup_closure(std::vector<GroupElement> gens,
                                           const GroupParams& P) {
  std::set<GroupElement> members{identity_element()};
  std::deque<GroupElement> work(gens.begin(), gens.end());
  while (!work.empty()) {
    GroupElement w = work.front();
    work.pop_front();
    if (members.count(w)) continue;
    members.insert(w);
    for (const GroupElement& s : members) {
      work.push_back(mul(s, w, P));
      work.push_back(mul(w, s, P));
    }
    work.push_back(inverse(w, P));
  }
  return {members.begin(), members.end()};
}

namespace {

// Normal closure of a generating set under conjugation by x and y.
std::vector<GroupElement> normal_closure(std::vector<GroupElement> gens,
                                         const GroupParams& P) {
  const GroupElement x{1, 0}, y{0, 1};
  const GroupElement xi = inverse(x, P), yi = inverse(y, P);
  std::vector<GroupElement> sub = subgroup_closure(std::move(gens), P);
  for (;;) {
    std::vector<GroupElement> extra;
    for (const GroupElement& s : sub) {
      for (const auto& [c, ci] : {std::pair{x, xi}, std::pair{y, yi}}) {
        GroupElement conj = mul(mul(c, s, P), ci, P);
        if (!std::binary_search(sub.begin(), sub.end(), conj)) {
          extra.push_back(conj);
        }
      }
    }
    if (extra.empty()) return sub;
    extra.insert(extra.end(), sub.begin(), sub.end());
    sub = subgroup_closure(std::move(extra), P);
  }
}

}  // namespace

unsigned nilpotency_class(const GroupParams& P, const Budget& budget) {
  group_order_checked(P, budget.max_group_enum);
  const GroupElement x{1, 0}, y{0, 1};
  // gamma_2 = [G,G] is the normal closure of [x,y] for a 2-generated group.
  std::vector<GroupElement> cur = normal_closure({commutator(x, y, P)}, P);
  unsigned cls = 1;
  while (!(cur.size() == 1 && cur.front() == identity_element())) {
    ++cls;
    std::vector<GroupElement> gens;
    for (const GroupElement& h : cur) {
      gens.push_back(commutator(x, h, P));
      gens.push_back(commutator(y, h, P));
    }
    std::vector<GroupElement> next = normal_closure(std::move(gens), P);
    if (next.size() >= cur.size()) {
      throw InternalError("nilpotency_class: series not descending");
    }
    cur = std::move(next);
  }
  return cls;
}

}  // namespace mholo
