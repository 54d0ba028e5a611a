#include "arith.hpp"

#include <algorithm>
#include <map>

namespace tame {

namespace mp = boost::multiprecision;

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "modulus must be >= 1");
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer mod_centered(const Integer& a, const Integer& m) {
  Integer r = mod_floor(a, m);
  if (2 * r > m) r -= m;
  return r;
}

Integer pow_mod(const Integer& base, const Integer& exp, const Integer& m) {
  if (exp < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  if (m == 1) return 0;
  return mp::powm(mod_floor(base, m), exp, m);
}

Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b;
  Integer old_x = 1, cur_x = 0;
  Integer old_y = 0, cur_y = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * cur_x;
    old_x = cur_x;
    cur_x = t;
    t = old_y - q * cur_y;
    old_y = cur_y;
    cur_y = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

Integer inv_mod(const Integer& a, const Integer& m) {
  if (m == 1) return 0;
  Integer x, y;
  Integer g = ext_gcd(mod_floor(a, m), m, x, y);
  if (g != 1)
    fail(ErrorCode::NotAUnit,
         "not invertible: gcd(" + a.str() + ", " + m.str() + ") = " + g.str());
  return mod_floor(x, m);
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr uint32_t kSmall[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                        29, 31, 37, 41, 43, 47, 53, 59, 61,
                                        67, 71, 73, 79, 83, 89, 97};
  for (uint32_t q : kSmall) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  Integer d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Witness set complete for n < 3.317e24 (first 13 primes).
  static constexpr uint32_t kWitness[] = {2,  3,  5,  7,  11, 13, 17,
                                          19, 23, 29, 31, 37, 41};
  for (uint32_t a : kWitness) {
    Integer x = mp::powm(Integer(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    constexpr uint32_t kBound = 1'000'000;
    std::vector<bool> sieve(kBound, true);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i < kBound; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t(i) * i; j < kBound; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

std::vector<uint64_t> primes_up_to(uint64_t bound) {
  std::vector<uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(bound + 1, true);
  for (uint64_t i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

namespace {

// Deterministic Pollard rho (Floyd cycle), bumping the increment until a
// proper factor appears.  Inputs here are composite and odd.
Integer rho_split(const Integer& n) {
  for (Integer c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = mp::gcd(mp::abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  Integer d = rho_split(n);
  factor_into(d, acc);
  factor_into(n / d, acc);
}

}  // namespace

std::vector<PrimePower> factorize(Integer n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "factorize requires n >= 1");
  std::map<Integer, unsigned> acc;
  for (uint32_t q : small_primes()) {
    if (Integer(q) * q > n) break;
    while (n % q == 0) {
      ++acc[q];
      n /= q;
    }
  }
  if (n > 1) factor_into(n, acc);
  std::vector<PrimePower> out;
  out.reserve(acc.size());
  for (const auto& [p, e] : acc) out.push_back({p, e});
  return out;
}

Integer euler_phi(const Integer& n) {
  Integer phi = 1;
  for (const auto& [p, e] : factorize(n)) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

Integer mult_order(const Integer& a, const Integer& m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "modulus must be >= 1");
  if (mp::gcd(mod_floor(a, m), m) != 1)
    fail(ErrorCode::NotAUnit, a.str() + " is not a unit mod " + m.str());
  if (m == 1) return 1;
  Integer t = euler_phi(m);
  for (const auto& [q, e] : factorize(t)) {
    (void)e;
    while (t % q == 0 && pow_mod(a, t / q, m) == 1) t /= q;
  }
  return t;
}

unsigned valuation(Integer n, const Integer& p) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "valuation of zero");
  if (p < 2) fail(ErrorCode::InvalidArgument, "valuation base must be >= 2");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<Integer> divisors_of(const Integer& n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "divisors of n >= 1 only");
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    size_t base = divs.size();
    Integer pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

ResidueClass make_residue(const Integer& value, const Integer& modulus) {
  if (modulus < 1) fail(ErrorCode::InvalidArgument, "modulus must be >= 1");
  return {mod_floor(value, modulus), modulus};
}

ResidueClass crt_combine(const std::vector<ResidueClass>& classes) {
  Integer r = 0, m = 1;
  for (const auto& cls : classes) {
    if (cls.modulus < 1) fail(ErrorCode::InvalidArgument, "modulus must be >= 1");
    if (cls.residue < 0 || cls.residue >= cls.modulus)
      fail(ErrorCode::InvalidArgument, "residue not canonical");
    Integer g = mp::gcd(m, cls.modulus);
    if (g != 1) {
      if (mod_floor(r, g) != mod_floor(cls.residue, g))
        fail(ErrorCode::ConflictingConstraints,
             "inconsistent congruences with non-coprime moduli (gcd " + g.str() + ")");
      fail(ErrorCode::NonCoprimeModuli,
           "moduli share the factor " + g.str() + "; pre-merge the congruences");
    }
    Integer t = mod_floor((cls.residue - r) * inv_mod(m, cls.modulus), cls.modulus);
    r += m * t;
    m *= cls.modulus;
  }
  return {mod_floor(r, m), m};
}

}  // namespace tame
