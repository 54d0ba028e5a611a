#pragma once

#include <cstdint>
#include <vector>

#include "arith.hpp"

namespace tame::fp {

/// Arithmetic in F_p for a word-sized prime p (p < 2^62).  Big moduli stay in
/// the Integer layer; everything that factors polynomials or counts points
/// lives here.
class PrimeField {
 public:
  explicit PrimeField(uint64_t p);
  uint64_t p() const { return p_; }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t neg(uint64_t a) const { return a ? p_ - a : 0; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return uint64_t((__uint128_t)a * b % p_);
  }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t pow(uint64_t a, const Integer& e) const;
  uint64_t inv(uint64_t a) const;  // NotAUnit on zero
  uint64_t reduce(const Integer& v) const;

 private:
  uint64_t p_;
};

/// Dense polynomial over F_p, coefficients ascending by degree, canonical
/// representatives, no trailing zero.
struct FpPoly {
  std::vector<uint64_t> c;

  int degree() const { return int(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  uint64_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
  uint64_t leading() const { return c.back(); }
  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool operator==(const FpPoly&) const = default;

  static FpPoly zero() { return {}; }
  static FpPoly one() { return {{1}}; }
  static FpPoly x() { return {{0, 1}}; }
  static FpPoly monomial(size_t deg, uint64_t lead = 1);

  /// Deterministic total order: degree first, then coefficients from the
  /// constant term upward.
  static bool less(const FpPoly& a, const FpPoly& b);
};

FpPoly add(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly sub(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly mul(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly mul_scalar(const PrimeField& F, const FpPoly& a, uint64_t s);
void divrem(const PrimeField& F, const FpPoly& num, const FpPoly& den,
            FpPoly* quot, FpPoly* rem);
FpPoly poly_mod(const PrimeField& F, const FpPoly& a, const FpPoly& m);
FpPoly poly_div_exact(const PrimeField& F, const FpPoly& num, const FpPoly& den);
FpPoly gcd(const PrimeField& F, FpPoly a, FpPoly b);  // monic (or zero)
FpPoly make_monic(const PrimeField& F, const FpPoly& a);
FpPoly derivative(const PrimeField& F, const FpPoly& a);
FpPoly pow_mod(const PrimeField& F, FpPoly base, const Integer& e, const FpPoly& m);
uint64_t eval(const PrimeField& F, const FpPoly& a, uint64_t x);

/// Rabin irreducibility test (deterministic).
bool is_irreducible(const PrimeField& F, const FpPoly& f);

/// First monic irreducible of degree r over F_p, enumerating the lower
/// coefficients as little-endian base-p digits of an ascending counter.
FpPoly find_irreducible(uint64_t p, uint32_t r);

struct FactorMult {
  FpPoly factor;        // monic irreducible
  unsigned multiplicity = 0;
  bool operator==(const FactorMult&) const = default;
};

/// Complete factorization over F_p: squarefree split, then distinct-degree,
/// then seeded Cantor-Zassenhaus equal-degree splitting.  Output sorted by
/// FpPoly::less; deterministic for a fixed seed (and canonical regardless).
std::vector<FactorMult> factor(const PrimeField& F, const FpPoly& f, uint64_t seed = 0);

/// F_{p^r} as F_p[x]/(modulus); the modulus is verified irreducible at
/// construction.  Elements are fixed-length digit vectors.
class ExtField {
 public:
  using Elem = std::vector<uint64_t>;

  ExtField(uint64_t p, uint32_t r);
  ExtField(uint64_t p, FpPoly modulus);

  const PrimeField& base() const { return F_; }
  uint32_t deg() const { return r_; }
  uint64_t q() const { return q_; }
  const FpPoly& modulus() const { return mod_; }

  Elem zero() const { return Elem(r_, 0); }
  Elem one() const;
  Elem from_base(uint64_t a) const;
  /// Element whose digits are the base-p expansion of index (0 <= index < q).
  Elem element_at(uint64_t index) const;

  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem mul_base(const Elem& a, uint64_t s) const;
  Elem pow(Elem a, Integer e) const;

  /// Quadratic character (p odd): 0 on zero, +1 on nonzero squares, -1 else.
  int chi(const Elem& a) const;

 private:
  PrimeField F_;
  uint32_t r_;
  FpPoly mod_;
  uint64_t q_;
};

}  // namespace tame::fp
