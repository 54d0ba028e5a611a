#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "error.hpp"

namespace tame {

/// Arbitrary-precision signed integer used everywhere exactness matters
/// (polynomial coefficients, moduli, group orders).
using Integer = boost::multiprecision::cpp_int;

/// Canonical representative of a mod m in [0, m).  m >= 1.
Integer mod_floor(const Integer& a, const Integer& m);

/// Representative of a mod m in (-m/2, m/2].
Integer mod_centered(const Integer& a, const Integer& m);

/// base^exp mod m, exp >= 0, m >= 1.
Integer pow_mod(const Integer& base, const Integer& exp, const Integer& m);

/// Returns g = gcd(a, b) and Bezout coefficients with a*x + b*y = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);

/// Modular inverse; throws NotAUnit when gcd(a, m) != 1.
Integer inv_mod(const Integer& a, const Integer& m);

/// Deterministic Miller-Rabin with the 13-prime witness set {2,...,41},
/// proven complete below 3.317e24; every integer the pipeline handles sits
/// far under that bound.
bool is_prime(const Integer& n);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of n >= 1 (1 -> empty list), sorted by prime.
/// Trial division below 1e6 first, then a deterministic Pollard rho split.
std::vector<PrimePower> factorize(Integer n);

Integer euler_phi(const Integer& n);

/// Smallest k >= 1 with a^k = 1 mod m, computed by reducing phi(m) along its
/// prime factorization.  Throws NotAUnit when gcd(a, m) != 1.
Integer mult_order(const Integer& a, const Integer& m);

/// p-adic valuation of n != 0.
unsigned valuation(Integer n, const Integer& p);

/// All positive divisors of n >= 1, sorted ascending.
std::vector<Integer> divisors_of(const Integer& n);

/// Primes below 1e6, shared sieve.
const std::vector<uint32_t>& small_primes();

/// Primes <= bound.
std::vector<uint64_t> primes_up_to(uint64_t bound);

/// A congruence class: 0 <= residue < modulus, modulus >= 1.
struct ResidueClass {
  Integer residue;
  Integer modulus;
  bool operator==(const ResidueClass&) const = default;
};

ResidueClass make_residue(const Integer& value, const Integer& modulus);

/// Chinese-remainder amalgamation over pairwise coprime moduli.  Non-coprime
/// input moduli are rejected: ConflictingConstraints when the residues are
/// inconsistent, NonCoprimeModuli when consistent (caller must pre-merge).
ResidueClass crt_combine(const std::vector<ResidueClass>& classes);

}  // namespace tame
