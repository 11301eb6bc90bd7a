#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mcert {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
u64 invmod(u64 a, u64 m); // m need not be prime; requires gcd(a,m)=1

bool is_prime_u64(u64 n);
std::vector<u32> primes_below(u32 bound);

// Prime factorization of a word-sized integer (trial division + Brent rho).
std::vector<std::pair<u64, unsigned>> factor_u64(u64 n);

// Best-effort factorization of |n|: trial division up to trial_bound, then
// Pollard-Brent rho with a global iteration cap. Whatever remains composite
// when the cap is hit goes into `cofactor` (1 when the factorization is
// complete). Prime factors are sorted.
struct FactorResult {
  std::vector<std::pair<mpz_class, unsigned>> primes;
  mpz_class cofactor;
  bool complete() const { return cofactor == 1; }
};
FactorResult factor_with_cap(const mpz_class& n, u64 trial_bound, u64 rho_iteration_cap);

// Exact integer cube root test, sign-aware.
bool is_perfect_cube(const mpz_class& n, mpz_class* root = nullptr);

int valuation(const mpz_class& n, unsigned long ell); // requires n != 0

} // namespace mcert
