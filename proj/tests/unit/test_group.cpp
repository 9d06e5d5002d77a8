#include <doctest.h>

#include <random>

#include "mholo/group.hpp"

using namespace mholo;

namespace {

GroupElement elt(long i, long j) { return {Int(i), Int(j)}; }

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(GroupParams::make(3, 2, 1, 1));
  CHECK_THROWS_AS(GroupParams::make(4, 2, 1, 1), InvalidParams);
  CHECK_THROWS_AS(GroupParams::make(2, 2, 1, 1), InvalidParams);
  CHECK_THROWS_AS(GroupParams::make(9, 2, 1, 1), InvalidParams);
  CHECK_THROWS_AS(GroupParams::make(3, 1, 1, 1), InvalidParams);
  CHECK_THROWS_AS(GroupParams::make(3, 2, 0, 1), InvalidParams);
  CHECK_THROWS_AS(GroupParams::make(3, 2, 1, 0), InvalidParams);
  CHECK_THROWS_AS(GroupParams::make(3, 2, 1, 2), InvalidParams);  // r > min
  CHECK_THROWS_AS(GroupParams::make(3, 3, 1, 2), InvalidParams);  // r > n
}

TEST_CASE("regime classification partitions the parameter space") {
  CHECK(GroupParams::make(3, 2, 2, 1).regime == Regime::M_LE_N);
  CHECK(GroupParams::make(3, 3, 3, 2).regime == Regime::M_LE_N);
  CHECK(GroupParams::make(3, 2, 1, 1).regime == Regime::N_LE_M_MINUS_R);
  CHECK(GroupParams::make(3, 3, 2, 1).regime == Regime::N_LE_M_MINUS_R);
  CHECK(GroupParams::make(3, 3, 2, 2).regime == Regime::OPEN);
  CHECK(GroupParams::make(3, 4, 3, 2).regime == Regime::OPEN);
}

TEST_CASE("derived constants") {
  GroupParams P = GroupParams::make(3, 2, 1, 1);
  CHECK(P.k == 4);  // 1 + 3^{m-r}
  CHECK(P.q == 1);  // p^{max(n-m+r,0)} = p^0
  GroupParams Q = GroupParams::make(3, 3, 3, 2);
  CHECK(Q.k == 4);
  CHECK(Q.q == 9);  // p^{3-3+2}
}

TEST_CASE("multiplication in normal form") {
  GroupParams P = GroupParams::make(3, 2, 1, 1);
  CHECK(mul(elt(5, 2), elt(0, 0), P) == elt(5, 2));
  CHECK(mul(elt(0, 0), elt(5, 2), P) == elt(5, 2));
  // The defining relation: y x = x^k y.
  CHECK(mul(elt(0, 1), elt(1, 0), P) == GroupElement{P.k, Int(1)});
  CHECK(mul(elt(1, 1), elt(1, 1), P) == elt(5, 2));  // x^{1+4} y^2
}

TEST_CASE("pow via the closed geometric-sum formula") {
  GroupParams P = GroupParams::make(3, 2, 1, 1);
  CHECK(pow(elt(2, 1), 0, P) == elt(0, 0));
  CHECK(pow(elt(1, 0), P.pm, P) == elt(0, 0));
  // S(4,3) = 21 = 3 mod 9.
  CHECK(pow(elt(1, 1), 3, P) == elt(3, 0));
  GroupElement threefold = mul(mul(elt(1, 1), elt(1, 1), P), elt(1, 1), P);
  CHECK(pow(elt(1, 1), 3, P) == threefold);
}

TEST_CASE("pow equals repeated multiplication, exhaustively at small scale") {
  for (auto [m, n, r] : {std::tuple{2u, 1u, 1u}, {2u, 2u, 1u}, {3u, 2u, 2u}}) {
    GroupParams P = GroupParams::make(3, m, n, r);
    std::size_t order = group_order_checked(P, 1000);
    for (std::size_t idx = 0; idx < order; ++idx) {
      GroupElement g = element_at(idx, P);
      GroupElement acc = identity_element();
      for (long e = 0; e <= 30; ++e) {
        REQUIRE(pow(g, e, P) == acc);
        acc = mul(acc, g, P);
      }
    }
  }
}

TEST_CASE("inverses") {
  GroupParams P = GroupParams::make(3, 2, 1, 1);
  CHECK(inverse(elt(0, 0), P) == elt(0, 0));
  CHECK(inverse(elt(1, 0), P) == GroupElement{P.pm - 1, Int(0)});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    GroupElement g = elt(rng() % 9, rng() % 3);
    CHECK(mul(g, inverse(g, P), P) == elt(0, 0));
    CHECK(mul(inverse(g, P), g, P) == elt(0, 0));
    CHECK(pow(g, -1, P) == inverse(g, P));
  }
}

TEST_CASE("associativity on random triples") {
  GroupParams P = GroupParams::make(3, 3, 2, 1);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    GroupElement a = elt(rng() % 27, rng() % 9);
    GroupElement b = elt(rng() % 27, rng() % 9);
    GroupElement c = elt(rng() % 27, rng() % 9);
    CHECK(mul(mul(a, b, P), c, P) == mul(a, mul(b, c, P), P));
  }
}

TEST_CASE("generator orders and non-commutativity") {
  for (auto [m, n, r] : {std::tuple{2u, 1u, 1u}, {3u, 3u, 2u}, {4u, 1u, 1u}}) {
    GroupParams P = GroupParams::make(3, m, n, r);
    CHECK(element_order(elt(1, 0), P) == P.pm);
    CHECK(element_order(elt(0, 1), P) == P.pn);
    CHECK(mul(elt(1, 0), elt(0, 1), P) != mul(elt(0, 1), elt(1, 0), P));
  }
}

TEST_CASE("center is <x^{p^r}, y^{p^r}>") {
  GroupParams P = GroupParams::make(3, 2, 1, 1);
  std::vector<GroupElement> z = center(P);
  CHECK(z == std::vector<GroupElement>{elt(0, 0), elt(3, 0), elt(6, 0)});
  for (const GroupElement& g : z) CHECK(g.i % P.pr == 0);

  GroupParams Q = GroupParams::make(3, 3, 3, 2);
  std::vector<GroupElement> zq = center(Q);
  CHECK(zq.size() == 9);  // p^{(m-r)+(n-r)}
  std::vector<GroupElement> generated =
      subgroup_closure({GroupElement{Q.pr, 0}, GroupElement{0, Q.pr}}, Q);
  CHECK(zq == generated);
}

TEST_CASE("center respects the enumeration budget") {
  GroupParams P = GroupParams::make(3, 4, 3, 2);  // |G| = 3^7
  Budget tiny;
  tiny.max_center_enum = 100;
  CHECK_THROWS_AS(center(P, tiny), BudgetExceeded);
}

TEST_CASE("nilpotency class") {
  CHECK(nilpotency_class(GroupParams::make(3, 2, 1, 1)) == 2);
  CHECK(nilpotency_class(GroupParams::make(3, 2, 2, 1)) == 2);
  CHECK(nilpotency_class(GroupParams::make(3, 4, 2, 2)) == 2);  // r <= m-r
  // (3,3,3,2) has class p = 3.
  CHECK(nilpotency_class(GroupParams::make(3, 3, 3, 2)) == 3);
  Budget tiny;
  tiny.max_group_enum = 10;
  CHECK_THROWS_AS(nilpotency_class(GroupParams::make(3, 2, 1, 1), tiny),
                  BudgetExceeded);
}

TEST_CASE("commutators lie in <x^{p^{m-r}}>") {
  GroupParams P = GroupParams::make(3, 3, 2, 1);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    GroupElement g = elt(rng() % 27, rng() % 9);
    GroupElement h = elt(rng() % 27, rng() % 9);
    GroupElement c = commutator(g, h, P);
    CHECK(c.j == 0);
    CHECK(c.i % P.pmr == 0);
  }
}

TEST_CASE("element indexing round-trips") {
  GroupParams P = GroupParams::make(3, 2, 2, 1);
  std::size_t order = group_order_checked(P, 100);
  CHECK(order == 81);
  for (std::size_t idx = 0; idx < order; ++idx) {
    CHECK(element_index(element_at(idx, P), P) == idx);
  }
  CHECK(element_index(identity_element(), P) == 0);
}
