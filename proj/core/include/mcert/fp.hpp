#pragma once

#include <optional>
#include <stdexcept>

#include "mcert/numutil.hpp"

namespace mcert {

// Arithmetic context for F_p, p an odd prime below 2^62.
class Fp {
public:
  explicit Fp(u64 p);

  u64 p() const { return p_; }
  u64 reduce(i64 a) const {
    i64 r = a % static_cast<i64>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(p_) : r);
  }
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p_ ? s - p_ : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const { return mulmod(a, b, p_); }
  u64 pow(u64 a, u64 e) const { return powmod(a, e, p_); }
  u64 inv(u64 a) const;

  bool is_qr(u64 a) const; // a != 0
  u64 smallest_nonresidue() const;

private:
  u64 p_;
};

enum class CubicCoset { One = 0, J = 1, Jp = 2 };
CubicCoset coset_mul(CubicCoset a, CubicCoset b);
const char* coset_name(CubicCoset t);

struct Fp2Elem {
  u64 a = 0, b = 0; // a + b*sqrt(z)
  bool operator==(const Fp2Elem&) const = default;
};

// F_{p^2} = F_p(sqrt(z)) for a fixed quadratic non-residue z.
//
// When p = 2 mod 3 the cubes have index 3 in the multiplicative group and the
// constructor fixes the coset orientation: J is the coset of the canonical
// generator (the generator of F_{p^2}^x that is smallest in the lexicographic
// order on (a,b)), Jp the coset of its square.
class Fp2 {
public:
  Fp2(u64 p, u64 z);

  const Fp& base() const { return fp_; }
  u64 p() const { return fp_.p(); }
  u64 z() const { return z_; }

  bool is_zero(Fp2Elem x) const { return x.a == 0 && x.b == 0; }
  Fp2Elem one() const { return {1, 0}; }
  Fp2Elem add(Fp2Elem x, Fp2Elem y) const { return {fp_.add(x.a, y.a), fp_.add(x.b, y.b)}; }
  Fp2Elem sub(Fp2Elem x, Fp2Elem y) const { return {fp_.sub(x.a, y.a), fp_.sub(x.b, y.b)}; }
  Fp2Elem mul(Fp2Elem x, Fp2Elem y) const {
    // (a + b s)(c + d s) = (ac + bd z) + (ad + bc) s, s^2 = z
    return {fp_.add(fp_.mul(x.a, y.a), fp_.mul(fp_.mul(x.b, y.b), z_)),
            fp_.add(fp_.mul(x.a, y.b), fp_.mul(x.b, y.a))};
  }
  Fp2Elem pow(Fp2Elem x, u64 e) const;
  Fp2Elem inv(Fp2Elem x) const;
  Fp2Elem frobenius(Fp2Elem x) const { return pow(x, p()); }
  u64 norm(Fp2Elem x) const { return fp_.sub(fp_.mul(x.a, x.a), fp_.mul(fp_.mul(x.b, x.b), z_)); }

  u64 order(Fp2Elem x) const; // multiplicative order, x != 0

  // Canonical generator of F_{p^2}^x (smallest (a,b) lexicographically).
  Fp2Elem canonical_generator() const;

  // Coset of x in F_{p^2}^x modulo cubes. Requires x != 0 and p = 2 mod 3.
  CubicCoset cubic_coset(Fp2Elem x) const;

private:
  Fp fp_;
  u64 z_;
  u64 group_order_;
  std::vector<std::pair<u64, unsigned>> group_order_factors_;
  std::optional<Fp2Elem> generator_; // set when p = 2 mod 3
  Fp2Elem omega_ = {0, 0};           // generator^((p^2-1)/3)
  Fp2Elem omega2_ = {0, 0};
};

} // namespace mcert
