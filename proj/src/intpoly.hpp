#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"
#include "fp.hpp"

namespace tame {

/// Dense univariate polynomial with exact integer coefficients, ascending by
/// degree.  The zero polynomial has an empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static IntPoly from_ll(std::initializer_list<long long> coeffs);
  static IntPoly monomial(size_t deg, Integer lead = 1);
  static IntPoly x() { return from_ll({0, 1}); }

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Integer& coeff(size_t i) const;
  const Integer& leading() const;
  std::span<const Integer> coeffs() const { return c_; }

  IntPoly derivative() const;
  Integer eval(const Integer& x) const;
  Integer content() const;  // gcd of coefficients, 0 for the zero polynomial
  IntPoly reduced_mod(const Integer& m) const;  // coefficients to [0, m)
  std::string str(std::string_view var = "x") const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& s, const IntPoly& a);
  bool operator==(const IntPoly&) const = default;

 private:
  std::vector<Integer> c_;
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

/// Exact quotient num/den over Z, or nullopt when the division is not exact.
std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den);

/// Resultant over Z via the subresultant PRS (no rational intermediates).
Integer resultant(IntPoly a, IntPoly b);

/// (-1)^{d(d-1)/2} Res(f, f') / lc(f); zero iff f has a repeated root.
/// Throws DegreeTooSmall for constants.
Integer discriminant(const IntPoly& f);

/// d-th cyclotomic polynomial, by exact division of x^d - 1 by the product of
/// the lower cyclotomics.  Memoized.
IntPoly cyclotomic(uint64_t d);

/// (t^n - 1)/(t - 1) for odd n, (t^n - 1)/(t^2 - 1) for even n.  n >= 3.
IntPoly pn_poly(uint64_t n);

/// Reduction of f into F_ell[x].
fp::FpPoly reduce_mod_prime(const IntPoly& f, const fp::PrimeField& F);

/// True iff f mod ell keeps the degree of f and gcd(f, f') = 1 over F_ell.
bool is_separable_mod(const IntPoly& f, uint64_t ell);

/// Factorization of f mod ell (ell prime); ZeroPolynomial when f = 0 mod ell.
std::vector<fp::FactorMult> factor_mod(const IntPoly& f, uint64_t ell,
                                       uint64_t seed = 0);

}  // namespace tame
