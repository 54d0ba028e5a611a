#include "fp.hpp"

#include <algorithm>

namespace tame::fp {

namespace mp = boost::multiprecision;

PrimeField::PrimeField(uint64_t p) : p_(p) {
  if (p < 2 || p >= (uint64_t(1) << 62) || !is_prime(Integer(p)))
    fail(ErrorCode::InvalidArgument,
         "field characteristic must be a prime below 2^62");
}

uint64_t PrimeField::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t PrimeField::pow(uint64_t a, const Integer& e) const {
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  uint64_t r = 1 % p_;
  a %= p_;
  if (e == 0) return r;
  for (long i = long(mp::msb(e)); i >= 0; --i) {
    r = mul(r, r);
    if (mp::bit_test(e, unsigned(i))) r = mul(r, a);
  }
  return r;
}

uint64_t PrimeField::inv(uint64_t a) const {
  a %= p_;
  if (a == 0) fail(ErrorCode::NotAUnit, "zero has no inverse");
  return pow(a, p_ - 2);
}

uint64_t PrimeField::reduce(const Integer& v) const {
  return mod_floor(v, Integer(p_)).convert_to<uint64_t>();
}

FpPoly FpPoly::monomial(size_t deg, uint64_t lead) {
  FpPoly out;
  if (lead == 0) return out;
  out.c.assign(deg + 1, 0);
  out.c[deg] = lead;
  return out;
}

bool FpPoly::less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  return false;
}

FpPoly add(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  FpPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = F.add(a.coeff(i), b.coeff(i));
  out.normalize();
  return out;
}

FpPoly sub(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  FpPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = F.sub(a.coeff(i), b.coeff(i));
  out.normalize();
  return out;
}

FpPoly mul(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  FpPoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  out.normalize();
  return out;
}

FpPoly mul_scalar(const PrimeField& F, const FpPoly& a, uint64_t s) {
  s %= F.p();
  if (s == 0) return {};
  FpPoly out = a;
  for (auto& v : out.c) v = F.mul(v, s);
  out.normalize();
  return out;
}

void divrem(const PrimeField& F, const FpPoly& num, const FpPoly& den,
            FpPoly* quot, FpPoly* rem) {
  if (den.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero polynomial");
  FpPoly r = num;
  FpPoly q;
  if (num.degree() >= den.degree()) q.c.assign(num.degree() - den.degree() + 1, 0);
  uint64_t dinv = F.inv(den.leading());
  while (!r.is_zero() && r.degree() >= den.degree()) {
    size_t shift = size_t(r.degree() - den.degree());
    uint64_t t = F.mul(r.leading(), dinv);
    q.c[shift] = t;
    for (size_t j = 0; j < den.c.size(); ++j)
      r.c[shift + j] = F.sub(r.c[shift + j], F.mul(t, den.c[j]));
    r.normalize();
  }
  q.normalize();
  if (quot) *quot = std::move(q);
  if (rem) *rem = std::move(r);
}

FpPoly poly_mod(const PrimeField& F, const FpPoly& a, const FpPoly& m) {
  FpPoly r;
  divrem(F, a, m, nullptr, &r);
  return r;
}

FpPoly poly_div_exact(const PrimeField& F, const FpPoly& num, const FpPoly& den) {
  FpPoly q, r;
  divrem(F, num, den, &q, &r);
  if (!r.is_zero()) fail(ErrorCode::Internal, "inexact polynomial division");
  return q;
}

FpPoly make_monic(const PrimeField& F, const FpPoly& a) {
  if (a.is_zero() || a.leading() == 1) return a;
  return mul_scalar(F, a, F.inv(a.leading()));
}

FpPoly gcd(const PrimeField& F, FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, a);
}

FpPoly derivative(const PrimeField& F, const FpPoly& a) {
  FpPoly out;
  if (a.degree() < 1) return out;
  out.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    out.c[i - 1] = F.mul(a.c[i], i % F.p());
  out.normalize();
  return out;
}

FpPoly pow_mod(const PrimeField& F, FpPoly base, const Integer& e, const FpPoly& m) {
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  FpPoly r = poly_mod(F, FpPoly::one(), m);
  base = poly_mod(F, base, m);
  if (e == 0) return r;
  for (long i = long(mp::msb(e)); i >= 0; --i) {
    r = poly_mod(F, mul(F, r, r), m);
    if (mp::bit_test(e, unsigned(i))) r = poly_mod(F, mul(F, r, base), m);
  }
  return r;
}

uint64_t eval(const PrimeField& F, const FpPoly& a, uint64_t x) {
  uint64_t acc = 0;
  for (size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
  return acc;
}

bool is_irreducible(const PrimeField& F, const FpPoly& f0) {
  FpPoly f = make_monic(F, f0);
  int r = f.degree();
  if (r < 1) return false;
  if (r == 1) return true;
  // frob[i] = x^{p^i} mod f, built by repeated p-th powering.
  std::vector<FpPoly> frob(size_t(r) + 1);
  frob[0] = poly_mod(F, FpPoly::x(), f);
  for (int i = 1; i <= r; ++i)
    frob[i] = pow_mod(F, frob[i - 1], Integer(F.p()), f);
  if (!(frob[size_t(r)] == poly_mod(F, FpPoly::x(), f))) return false;
  for (const auto& [q, e] : factorize(Integer(r))) {
    (void)e;
    int k = r / q.convert_to<int>();
    FpPoly g = gcd(F, sub(F, frob[size_t(k)], FpPoly::x()), f);
    if (g.degree() != 0) return false;
  }
  return true;
}

FpPoly find_irreducible(uint64_t p, uint32_t r) {
  PrimeField F(p);
  if (r < 1) fail(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  for (uint64_t counter = 0;; ++counter) {
    FpPoly cand = FpPoly::monomial(r, 1);
    uint64_t k = counter;
    for (uint32_t i = 0; i < r && k; ++i) {
      cand.c[i] = k % p;
      k /= p;
    }
    if (k) fail(ErrorCode::Internal, "irreducible search exhausted");
    if (is_irreducible(F, cand)) return cand;
  }
}

namespace {

struct SplitMix64 {
  uint64_t s;
  explicit SplitMix64(uint64_t seed) : s(seed) {}
  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// p-th root of f when f' == 0, i.e. f = g(x^p).  Over the prime field the
// coefficient Frobenius is the identity.
FpPoly pth_root(const PrimeField& F, const FpPoly& f) {
  FpPoly out;
  out.c.resize(f.c.size() / size_t(F.p()) + 1, 0);
  for (size_t i = 0; i * F.p() < f.c.size(); ++i) out.c[i] = f.c[i * F.p()];
  out.normalize();
  return out;
}

// (squarefree monic part, multiplicity) pairs whose weighted product is f.
std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(
    const PrimeField& F, FpPoly f) {
  std::vector<std::pair<FpPoly, unsigned>> out;
  unsigned pmult = 1;
  while (f.degree() > 0) {
    FpPoly df = derivative(F, f);
    if (df.is_zero()) {
      f = pth_root(F, f);
      pmult *= unsigned(F.p());
      continue;
    }
    FpPoly g = gcd(F, f, df);
    FpPoly w = poly_div_exact(F, f, g);
    unsigned i = 1;
    while (w.degree() > 0) {
      FpPoly y = gcd(F, w, g);
      FpPoly z = poly_div_exact(F, w, y);
      if (z.degree() > 0) out.push_back({z, pmult * i});
      w = std::move(y);
      g = poly_div_exact(F, g, w);
      ++i;
    }
    // g is now a p-th power (possibly 1)
    if (g.degree() == 0) break;
    f = pth_root(F, g);
    pmult *= unsigned(F.p());
  }
  return out;
}

// Distinct-degree decomposition of a squarefree monic polynomial.
std::vector<std::pair<FpPoly, int>> distinct_degree(const PrimeField& F, FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly h = poly_mod(F, FpPoly::x(), f);
  int d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      out.push_back({f, f.degree()});
      break;
    }
    h = pow_mod(F, h, Integer(F.p()), f);
    FpPoly g = gcd(F, sub(F, h, FpPoly::x()), f);
    if (g.degree() > 0) {
      out.push_back({g, d});
      f = poly_div_exact(F, f, g);
      h = poly_mod(F, h, f);
    }
  }
  return out;
}

FpPoly random_poly(const PrimeField& F, int max_deg, SplitMix64& rng) {
  FpPoly out;
  out.c.resize(size_t(max_deg) + 1);
  for (auto& v : out.c) v = rng.next() % F.p();
  out.normalize();
  return out;
}

// Cantor-Zassenhaus split of a product of distinct irreducibles of degree d.
void equal_degree(const PrimeField& F, const FpPoly& f, int d, SplitMix64& rng,
                  std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(make_monic(F, f));
    return;
  }
  while (true) {
    FpPoly a = random_poly(F, f.degree() - 1, rng);
    if (a.degree() < 1) continue;
    FpPoly g = gcd(F, a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, poly_div_exact(F, f, g), d, rng, out);
      return;
    }
    if (F.p() == 2) {
      // trace map over F_2
      FpPoly t = a, acc = a;
      for (int i = 1; i < d; ++i) {
        t = poly_mod(F, mul(F, t, t), f);
        acc = add(F, acc, t);
      }
      g = gcd(F, acc, f);
    } else {
      Integer e = (pow(Integer(F.p()), unsigned(d)) - 1) / 2;
      FpPoly b = pow_mod(F, a, e, f);
      g = gcd(F, sub(F, b, FpPoly::one()), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, poly_div_exact(F, f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FactorMult> factor(const PrimeField& F, const FpPoly& f0, uint64_t seed) {
  if (f0.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  FpPoly f = make_monic(F, f0);
  std::vector<FactorMult> out;
  if (f.degree() == 0) return out;
  SplitMix64 rng(seed ^ (0x5bf03635ULL * F.p()));
  for (const auto& [sqf, mult] : squarefree_decomposition(F, f)) {
    for (const auto& [prod, d] : distinct_degree(F, sqf)) {
      std::vector<FpPoly> irr;
      equal_degree(F, prod, d, rng, irr);
      for (auto& g : irr) {
        if (!is_irreducible(F, g))
          fail(ErrorCode::Internal, "factor failed irreducibility certification");
        out.push_back({std::move(g), mult});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FactorMult& a, const FactorMult& b) {
    return FpPoly::less(a.factor, b.factor);
  });
  return out;
}

ExtField::ExtField(uint64_t p, uint32_t r)
    : ExtField(p, find_irreducible(p, r)) {}

ExtField::ExtField(uint64_t p, FpPoly modulus)
    : F_(p), r_(uint32_t(std::max(modulus.degree(), 0))), mod_(std::move(modulus)) {
  if (mod_.degree() < 1 || !is_irreducible(F_, mod_))
    fail(ErrorCode::InvalidArgument, "extension modulus must be irreducible");
  mod_ = make_monic(F_, mod_);
  Integer q = mp::pow(Integer(p), r_);
  if (q >= (Integer(1) << 62))
    fail(ErrorCode::BudgetExceeded, "field size exceeds the supported range");
  q_ = q.convert_to<uint64_t>();
}

ExtField::Elem ExtField::one() const {
  Elem e(r_, 0);
  e[0] = 1 % F_.p();
  return e;
}

ExtField::Elem ExtField::from_base(uint64_t a) const {
  Elem e(r_, 0);
  e[0] = a % F_.p();
  return e;
}

ExtField::Elem ExtField::element_at(uint64_t index) const {
  Elem e(r_, 0);
  for (uint32_t i = 0; i < r_ && index; ++i) {
    e[i] = index % F_.p();
    index /= F_.p();
  }
  return e;
}

bool ExtField::is_zero(const Elem& a) const {
  for (uint64_t v : a)
    if (v) return false;
  return true;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem out(r_);
  for (uint32_t i = 0; i < r_; ++i) out[i] = F_.add(a[i], b[i]);
  return out;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem out(r_);
  for (uint32_t i = 0; i < r_; ++i) out[i] = F_.sub(a[i], b[i]);
  return out;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  std::vector<uint64_t> conv(2 * size_t(r_) - 1, 0);
  for (uint32_t i = 0; i < r_; ++i) {
    if (a[i] == 0) continue;
    for (uint32_t j = 0; j < r_; ++j)
      conv[i + j] = F_.add(conv[i + j], F_.mul(a[i], b[j]));
  }
  // reduce by the monic modulus
  for (size_t k = conv.size(); k-- > r_;) {
    uint64_t t = conv[k];
    if (t == 0) continue;
    conv[k] = 0;
    for (uint32_t j = 0; j < r_; ++j)
      conv[k - r_ + j] = F_.sub(conv[k - r_ + j], F_.mul(t, mod_.c[j]));
  }
  conv.resize(r_);
  return conv;
}

ExtField::Elem ExtField::mul_base(const Elem& a, uint64_t s) const {
  Elem out(r_);
  s %= F_.p();
  for (uint32_t i = 0; i < r_; ++i) out[i] = F_.mul(a[i], s);
  return out;
}

ExtField::Elem ExtField::pow(Elem a, Integer e) const {
  if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
  Elem r = one();
  if (e == 0) return r;
  for (long i = long(mp::msb(e)); i >= 0; --i) {
    r = mul(r, r);
    if (mp::bit_test(e, unsigned(i))) r = mul(r, a);
  }
  return r;
}

int ExtField::chi(const Elem& a) const {
  if (F_.p() == 2) fail(ErrorCode::InvalidArgument, "quadratic character needs odd p");
  if (is_zero(a)) return 0;
  Elem t = pow(a, (Integer(q_) - 1) / 2);
  return t == one() ? 1 : -1;
}

}  // namespace tame::fp
