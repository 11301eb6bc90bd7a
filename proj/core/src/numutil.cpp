#include "mcert/numutil.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcert {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) {
  i64 t = 0, nt = 1;
  i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
  while (nr != 0) {
    i64 q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::domain_error("invmod: not invertible");
  return static_cast<u64>(t < 0 ? t + static_cast<i64>(m) : t);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // Deterministic Miller-Rabin base set for the full 64-bit range.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<u32> primes_below(u32 bound) {
  std::vector<u32> out;
  if (bound <= 2) return out;
  std::vector<bool> sieve(bound, true);
  sieve[0] = sieve[1] = false;
  for (u64 i = 2; i < bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(static_cast<u32>(i));
    for (u64 j = i * i; j < bound; j += i) sieve[j] = false;
  }
  return out;
}

namespace {

u64 brent_rho_u64(u64 n) {
  if ((n & 1) == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    int lam = 1;
    while (d == 1) {
      x = y;
      for (int i = 0; i < lam; ++i) y = (mulmod(y, y, n) + c) % n;
      int k = 0;
      while (k < lam && d == 1) {
        u64 ys = y;
        int lim = std::min(128, lam - k);
        for (int i = 0; i < lim; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::__gcd(q, n);
        if (d == n) {
          // Backtrack one step at a time.
          d = 1;
          y = ys;
          do {
            y = (mulmod(y, y, n) + c) % n;
            d = std::__gcd(x > y ? x - y : y - x, n);
          } while (d == 1);
        }
        k += lim;
      }
      lam *= 2;
    }
    if (d != n) return d;
  }
}

void factor_u64_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = brent_rho_u64(n);
  factor_u64_rec(d, out);
  factor_u64_rec(n / d, out);
}

// Pollard-Brent on mpz. Returns a nontrivial factor of n (composite, odd,
// not a perfect power of a small prime) or 0 when the iteration budget ran out.
mpz_class brent_rho_mpz(const mpz_class& n, u64& budget) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xc0ffee);
  for (int attempt = 0; attempt < 64 && budget > 0; ++attempt) {
    mpz_class c = rng.get_z_range(n - 3) + 1;
    mpz_class x = rng.get_z_range(n - 2) + 1, y = x, d = 1, q = 1, ys;
    u64 lam = 1;
    while (d == 1 && budget > 0) {
      x = y;
      for (u64 i = 0; i < lam && budget > 0; ++i, --budget) y = (y * y + c) % n;
      u64 k = 0;
      while (k < lam && d == 1 && budget > 0) {
        ys = y;
        u64 lim = std::min<u64>(256, lam - k);
        for (u64 i = 0; i < lim && budget > 0; ++i, --budget) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        if (d == n) {
          d = 1;
          y = ys;
          while (d == 1 && budget > 0) {
            --budget;
            y = (y * y + c) % n;
            mpz_class diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
          }
        }
        k += lim;
      }
      lam *= 2;
    }
    if (d != 1 && d != n) return d;
  }
  return 0;
}

void factor_mpz_rec(const mpz_class& n, u64& budget,
                    std::vector<mpz_class>& primes, std::vector<mpz_class>& stuck) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    primes.push_back(n);
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    // Peel a perfect power down to its base before recursing.
    for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
      mpz_class root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        for (unsigned long i = 0; i < k; ++i) factor_mpz_rec(root, budget, primes, stuck);
        return;
      }
    }
  }
  mpz_class d = brent_rho_mpz(n, budget);
  if (d == 0) {
    stuck.push_back(n);
    return;
  }
  factor_mpz_rec(d, budget, primes, stuck);
  factor_mpz_rec(n / d, budget, primes, stuck);
}

} // namespace

std::vector<std::pair<u64, unsigned>> factor_u64(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  if (n < 2) return out;
  std::vector<u64> ps;
  factor_u64_rec(n, ps);
  std::sort(ps.begin(), ps.end());
  for (u64 q : ps) {
    if (!out.empty() && out.back().first == q)
      ++out.back().second;
    else
      out.emplace_back(q, 1);
  }
  return out;
}

FactorResult factor_with_cap(const mpz_class& n, u64 trial_bound, u64 rho_iteration_cap) {
  FactorResult res;
  res.cofactor = 1;
  mpz_class m = abs(n);
  if (m <= 1) return res;

  std::vector<mpz_class> primes;
  static const std::vector<u32> small = primes_below(1u << 16);
  for (u32 q : small) {
    if (q > trial_bound) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      primes.push_back(q);
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
    }
  }
  if (trial_bound > (1u << 16)) {
    for (u64 q = (1u << 16) | 1; q <= trial_bound && m > 1; q += 2) {
      while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
        primes.push_back(static_cast<unsigned long>(q));
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
      }
    }
  }

  std::vector<mpz_class> stuck;
  u64 budget = rho_iteration_cap;
  if (m > 1) factor_mpz_rec(m, budget, primes, stuck);

  std::sort(primes.begin(), primes.end());
  for (const mpz_class& q : primes) {
    if (!res.primes.empty() && res.primes.back().first == q)
      ++res.primes.back().second;
    else
      res.primes.emplace_back(q, 1);
  }
  for (const mpz_class& s : stuck) res.cofactor *= s;
  return res;
}

bool is_perfect_cube(const mpz_class& n, mpz_class* root) {
  mpz_class r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
  if (exact == 0) return false;
  if (root) *root = r;
  return true;
}

int valuation(const mpz_class& n, unsigned long ell) {
  if (n == 0) throw std::domain_error("valuation of zero");
  mpz_class m = n;
  int v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), ell)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), ell);
    ++v;
  }
  return v;
}

} // namespace mcert
