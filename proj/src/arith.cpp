#include "mholo/arith.hpp"

#include <map>
#include <utility>
#include <vector>

namespace mholo {

unsigned long long to_ull(const Int& x) {
  if (x < 0 || !x.fits_ulong_p()) {
    throw InternalError("integer does not fit an unsigned machine word: " +
                        x.get_str());
  }
  return x.get_ui();
}

bool is_prime(const Int& x) {
  if (x < 2) return false;
  if (x == 2 || x == 3) return true;
  if (x % 2 == 0) return false;
  for (Int d = 3; d * d <= x; d += 2) {
    if (x % d == 0) return false;
  }
  return true;
}

PrimePower::PrimePower(Int p, unsigned e) : p_(std::move(p)), e_(e) {
  if (p_ < 3 || p_ % 2 == 0 || !is_prime(p_)) {
    throw InvalidParams("PrimePower: p must be an odd prime, got " +
                        p_.get_str());
  }
  mpz_pow_ui(value_.get_mpz_t(), p_.get_mpz_t(), e_);
}

Int mod_reduce(const Int& x, const Int& modulus) {
  if (modulus <= 0) throw InvalidParams("mod_reduce: modulus must be positive");
  Int r = x % modulus;
  if (r < 0) r += modulus;
  return r;
}

Int pow_mod(const Int& base, const Int& exp, const Int& modulus) {
  if (modulus <= 0) throw InvalidParams("pow_mod: modulus must be positive");
  if (modulus == 1) return 0;
  if (exp < 0) {
    Int e = -exp;
    return pow_mod(inv_mod(base, modulus), e, modulus);
  }
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
           modulus.get_mpz_t());
  return r;
}

Int inv_mod(const Int& x, const Int& modulus) {
  if (modulus <= 0) throw InvalidParams("inv_mod: modulus must be positive");
  if (modulus == 1) return 0;
  Int r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw InvalidParams("inv_mod: " + x.get_str() +
                        " is not invertible mod " + modulus.get_str());
  }
  return r;
}

Int s_sum(const Int& z, const Int& ell, const Int& modulus) {
  if (ell < 0) throw InvalidParams("s_sum: ell must be non-negative");
  if (modulus == 1) return 0;
  // Build up the bit prefix of ell, keeping s = S(z,t) and zp = z^t.
  Int zr = mod_reduce(z, modulus);
  Int s = 0;
  Int zp = 1;
  size_t bits = mpz_sizeinbase(ell.get_mpz_t(), 2);
  if (ell == 0) return 0;
  for (size_t b = bits; b-- > 0;) {
    s = s * (1 + zp) % modulus;
    zp = zp * zp % modulus;
    if (mpz_tstbit(ell.get_mpz_t(), b)) {
      s = (s + zp) % modulus;
      zp = zp * zr % modulus;
    }
  }
  return s;
}

unsigned vp(const Int& x, const Int& p) {
  if (x == 0) throw InvalidParams("vp: undefined for x = 0");
  if (p < 2) throw InvalidParams("vp: p must be at least 2");
  Int rest;
  mp_bitcnt_t e = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return static_cast<unsigned>(e);
}

namespace {

// Trial-division factorization, smallest factors first.
std::vector<std::pair<Int, unsigned>> factor(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  for (Int d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

Int mult_order(const Int& z, const PrimePower& modulus) {
  const Int& mod = modulus.value();
  if (mod == 1) return 1;
  Int zr = mod_reduce(z, mod);
  if (zr % modulus.p() == 0) {
    throw InvalidParams("mult_order: argument divisible by p");
  }
  // phi(p^e) = (p-1) p^{e-1}; peel prime factors while the power stays 1.
  Int phi = (modulus.p() - 1);
  for (unsigned i = 1; i < modulus.exponent(); ++i) phi *= modulus.p();
  Int order = phi;
  auto factors = factor(modulus.p() - 1);
  factors.emplace_back(modulus.p(), modulus.exponent() - 1);
  for (const auto& [f, e] : factors) {
    for (unsigned i = 0; i < e; ++i) {
      if (order % f == 0 && pow_mod(zr, order / f, mod) == 1) {
        order /= f;
      } else {
        break;
      }
    }
  }
  if (pow_mod(zr, order, mod) != 1) {
    throw InternalError("mult_order: peeling failed");
  }
  return order;
}

Int primitive_root(const PrimePower& modulus) {
  if (modulus.exponent() < 1) {
    throw InvalidParams("primitive_root: exponent must be >= 1");
  }
  PrimePower psq(modulus.p(), 2);
  Int phi = modulus.p() * (modulus.p() - 1);
  for (Int u = 2;; ++u) {
    if (u % modulus.p() == 0) continue;
    if (mult_order(u, psq) == phi) return mod_reduce(u, modulus.value());
  }
}

namespace {

// Baby-step giant-step in the cyclic group <base> of known order n:
// least e in [0, n) with base^e = target, or nullopt.
std::optional<Int> bsgs(const Int& target, const Int& base, const Int& n,
                        const Int& mod) {
  Int m;
  mpz_sqrt(m.get_mpz_t(), n.get_mpz_t());
  ++m;
  std::map<Int, Int> baby;  // base^j -> smallest such j
  Int cur = 1;
  for (Int j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = cur * base % mod;
  }
  Int giant = inv_mod(cur, mod);  // base^{-m}
  Int gamma = mod_reduce(target, mod);
  for (Int i = 0; i * m <= n; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) {
      Int e = i * m + it->second;
      if (e < n) return e;
    }
    gamma = gamma * giant % mod;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Int> discrete_log(const Int& target, const Int& base,
                                const PrimePower& modulus,
                                unsigned long long brute_threshold) {
  const Int& mod = modulus.value();
  if (mod == 1) return Int(0);
  Int t = mod_reduce(target, mod);
  Int b = mod_reduce(base, mod);
  if (t % modulus.p() == 0 || b % modulus.p() == 0) {
    throw InvalidParams("discrete_log: arguments must be units");
  }
  Int n = mult_order(b, modulus);
  if (n <= to_int(brute_threshold)) {
    Int cur = 1;
    for (Int e = 0; e < n; ++e) {
      if (cur == t) return e;
      cur = cur * b % mod;
    }
    return std::nullopt;
  }
  // Pohlig-Hellman over <base>, one prime power of n at a time.
  Int result = 0;
  Int combined = 1;
  for (const auto& [q, f] : factor(n)) {
    Int qf = 1;
    for (unsigned i = 0; i < f; ++i) qf *= q;
    // Solve base_q^x = target_q in the subgroup of order qf, digit by digit.
    Int bq = pow_mod(b, n / qf, mod);
    Int tq = pow_mod(t, n / qf, mod);
    Int x = 0;
    Int qpow = 1;  // q^i
    Int gamma = pow_mod(bq, qf / q, mod);  // order q
    for (unsigned i = 0; i < f; ++i) {
      Int h = pow_mod(tq * pow_mod(inv_mod(bq, mod), x, mod), qf / (qpow * q),
                      mod);
      auto d = bsgs(h, gamma, q, mod);
      if (!d) return std::nullopt;
      x += *d * qpow;
      qpow *= q;
    }
    // CRT-combine x mod qf into result mod combined*qf.
    Int g, s, u;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(),
               combined.get_mpz_t(), qf.get_mpz_t());
    Int merged = mod_reduce(result + combined * mod_reduce(s * (x - result), qf),
                            combined * qf);
    result = merged;
    combined *= qf;
  }
  if (pow_mod(b, result, mod) != t) return std::nullopt;
  return result;
}

}  // namespace mholo
