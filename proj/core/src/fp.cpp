#include "mcert/fp.hpp"

namespace mcert {

Fp::Fp(u64 p) : p_(p) {
  if (p < 3 || p >= (1ull << 62) || !is_prime_u64(p))
    throw std::invalid_argument("Fp: modulus must be an odd prime below 2^62");
}

u64 Fp::inv(u64 a) const {
  if (a == 0) throw std::domain_error("Fp::inv(0)");
  return invmod(a, p_);
}

bool Fp::is_qr(u64 a) const {
  if (a % p_ == 0) throw std::domain_error("Fp::is_qr(0)");
  return pow(a % p_, (p_ - 1) / 2) == 1;
}

u64 Fp::smallest_nonresidue() const {
  for (u64 a = 2; a < p_; ++a)
    if (!is_qr(a)) return a;
  throw std::logic_error("no quadratic non-residue found");
}

CubicCoset coset_mul(CubicCoset a, CubicCoset b) {
  return static_cast<CubicCoset>((static_cast<int>(a) + static_cast<int>(b)) % 3);
}

const char* coset_name(CubicCoset t) {
  switch (t) {
    case CubicCoset::One: return "1";
    case CubicCoset::J: return "j";
    case CubicCoset::Jp: return "j'";
  }
  return "?";
}

Fp2::Fp2(u64 p, u64 z) : fp_(p), z_(z % p) {
  if (z_ == 0 || fp_.is_qr(z_))
    throw std::invalid_argument("Fp2: z must be a quadratic non-residue");
  group_order_ = p * p - 1;
  group_order_factors_ = factor_u64(group_order_);
  if (p % 3 == 2) {
    generator_ = canonical_generator();
    omega_ = pow(*generator_, group_order_ / 3);
    omega2_ = mul(omega_, omega_);
  }
}

Fp2Elem Fp2::pow(Fp2Elem x, u64 e) const {
  Fp2Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Fp2Elem Fp2::inv(Fp2Elem x) const {
  if (is_zero(x)) throw std::domain_error("Fp2::inv(0)");
  // (a + b s)^-1 = (a - b s) / (a^2 - b^2 z)
  u64 n = norm(x);
  u64 ninv = fp_.inv(n);
  return {fp_.mul(x.a, ninv), fp_.mul(fp_.neg(x.b), ninv)};
}

u64 Fp2::order(Fp2Elem x) const {
  if (is_zero(x)) throw std::domain_error("Fp2::order(0)");
  u64 ord = group_order_;
  for (auto [q, e] : group_order_factors_) {
    for (unsigned i = 0; i < e; ++i) {
      Fp2Elem t = pow(x, ord / q);
      if (t == one())
        ord /= q;
      else
        break;
    }
  }
  return ord;
}

Fp2Elem Fp2::canonical_generator() const {
  if (generator_) return *generator_;
  for (u64 a = 0; a < p(); ++a) {
    for (u64 b = 0; b < p(); ++b) {
      Fp2Elem x{a, b};
      if (is_zero(x)) continue;
      if (order(x) == group_order_) return x;
    }
  }
  throw std::logic_error("F_{p^2}^x has a generator; search must succeed");
}

CubicCoset Fp2::cubic_coset(Fp2Elem x) const {
  if (is_zero(x)) throw std::domain_error("cubic_coset: nonzero element required");
  if (p() % 3 != 2) throw std::domain_error("cubic_coset: cubes not index 3");
  Fp2Elem y = pow(x, group_order_ / 3);
  if (y == one()) return CubicCoset::One;
  if (y == omega_) return CubicCoset::J;
  if (y == omega2_) return CubicCoset::Jp;
  throw std::logic_error("x^((p^2-1)/3) must be a cube root of unity");
}

} // namespace mcert
