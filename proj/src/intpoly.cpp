#include "intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace tame {

namespace mp = boost::multiprecision;

IntPoly IntPoly::from_ll(std::initializer_list<long long> coeffs) {
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(size_t deg, Integer lead) {
  if (lead == 0) return {};
  std::vector<Integer> c(deg + 1, Integer(0));
  c[deg] = std::move(lead);
  return IntPoly(std::move(c));
}

const Integer& IntPoly::coeff(size_t i) const {
  static const Integer kZero = 0;
  return i < c_.size() ? c_[i] : kZero;
}

const Integer& IntPoly::leading() const {
  if (c_.empty()) fail(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
  return c_.back();
}

IntPoly IntPoly::derivative() const {
  if (c_.size() < 2) return {};
  std::vector<Integer> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Integer(i) * c_[i];
  return IntPoly(std::move(d));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& v : c_) g = mp::gcd(g, v);
  return g;
}

IntPoly IntPoly::reduced_mod(const Integer& m) const {
  std::vector<Integer> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = mod_floor(c_[i], m);
  return IntPoly(std::move(c));
}

std::string IntPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Integer a = c_[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Integer mag = mp::abs(a);
    if (mag != 1 || i == 0) os << mag.str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const Integer& s, const IntPoly& a) {
  std::vector<Integer> c(a.c_.size());
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] = s * a.c_[i];
  return IntPoly(std::move(c));
}

std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return IntPoly{};
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<Integer> r(num.coeffs().begin(), num.coeffs().end());
  std::vector<Integer> q(size_t(num.degree() - den.degree()) + 1, Integer(0));
  const Integer& lc = den.leading();
  for (int i = num.degree() - den.degree(); i >= 0; --i) {
    Integer top = r[size_t(i) + size_t(den.degree())];
    if (top % lc != 0) return std::nullopt;
    Integer t = top / lc;
    if (t != 0) {
      q[size_t(i)] = t;
      for (int j = 0; j <= den.degree(); ++j)
        r[size_t(i + j)] -= t * den.coeff(size_t(j));
    }
  }
  for (const auto& v : r)
    if (v != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

namespace {

// Pseudo-remainder: the remainder of lc(den)^{deg num - deg den + 1} * num
// divided by den (all operations stay in Z[x]).
IntPoly prem(IntPoly num, const IntPoly& den) {
  const Integer d = den.leading();
  int e = num.degree() - den.degree() + 1;
  while (!num.is_zero() && num.degree() >= den.degree()) {
    IntPoly t = IntPoly::monomial(size_t(num.degree() - den.degree()), num.leading());
    num = d * num - t * den;
    --e;
  }
  Integer scale = 1;
  for (; e > 0; --e) scale *= d;
  return scale * num;
}

Integer int_pow(const Integer& b, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Integer div_exact_int(const Integer& a, const Integer& b) {
  if (b == 0 || a % b != 0) fail(ErrorCode::Internal, "inexact integer division in PRS");
  return a / b;
}

IntPoly div_coeffs_exact(const IntPoly& a, const Integer& d) {
  std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : c) v = div_exact_int(v, d);
  return IntPoly(std::move(c));
}

}  // namespace

Integer resultant(IntPoly a, IntPoly b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() == 0 && b.degree() == 0) return 1;
  Integer cont_a = a.content(), cont_b = b.content();
  a = div_coeffs_exact(a, cont_a);
  b = div_coeffs_exact(b, cont_b);
  Integer mult = int_pow(cont_a, b.degree()) * int_pow(cont_b, a.degree());
  int sign = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    std::swap(a, b);
  }
  Integer g = 1, h = 1;
  while (b.degree() > 0) {
    int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    IntPoly r = prem(a, b);
    a = std::move(b);
    b = div_coeffs_exact(r, g * int_pow(h, delta));
    g = a.leading();
    if (delta > 0) h = div_exact_int(int_pow(g, delta), int_pow(h, delta - 1));
    if (b.is_zero()) return 0;
  }
  // deg b == 0
  Integer res;
  if (a.degree() == 0) {
    res = h;
  } else {
    res = div_exact_int(int_pow(b.leading(), a.degree()), int_pow(h, a.degree() - 1));
  }
  return sign * mult * res;
}

Integer discriminant(const IntPoly& f) {
  if (f.degree() < 1)
    fail(ErrorCode::DegreeTooSmall, "discriminant needs degree >= 1");
  Integer res = resultant(f, f.derivative());
  if (res % f.leading() != 0)
    fail(ErrorCode::Internal, "resultant not divisible by the leading coefficient");
  Integer disc = res / f.leading();
  int d = f.degree();
  if (((d * (d - 1) / 2) % 2) != 0) disc = -disc;
  return disc;
}

IntPoly cyclotomic(uint64_t d) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "cyclotomic index must be >= 1");
  static std::map<uint64_t, IntPoly> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  IntPoly result;
  if (d == 1) {
    result = IntPoly::from_ll({-1, 1});
  } else {
    IntPoly num = IntPoly::monomial(d) - IntPoly::from_ll({1});
    IntPoly den = IntPoly::from_ll({1});
    for (const auto& e : divisors_of(Integer(d))) {
      uint64_t ev = e.convert_to<uint64_t>();
      if (ev == d) continue;
      den = den * cyclotomic(ev);
    }
    auto q = divide_exact(num, den);
    if (!q) fail(ErrorCode::Internal, "cyclotomic division was not exact");
    result = *q;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(d, result);
  return result;
}

IntPoly pn_poly(uint64_t n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "pn_poly needs n >= 3");
  IntPoly num = IntPoly::monomial(n) - IntPoly::from_ll({1});
  IntPoly den = (n % 2 == 1) ? IntPoly::from_ll({-1, 1}) : IntPoly::from_ll({-1, 0, 1});
  auto q = divide_exact(num, den);
  if (!q) fail(ErrorCode::Internal, "pn_poly division was not exact");
  return *q;
}

fp::FpPoly reduce_mod_prime(const IntPoly& f, const fp::PrimeField& F) {
  fp::FpPoly out;
  out.c.resize(size_t(f.degree() + 1));
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = F.reduce(f.coeff(i));
  out.normalize();
  return out;
}

bool is_separable_mod(const IntPoly& f, uint64_t ell) {
  fp::PrimeField F(ell);
  fp::FpPoly fbar = reduce_mod_prime(f, F);
  if (fbar.degree() != f.degree()) return false;
  if (fbar.degree() < 1) return true;
  fp::FpPoly g = fp::gcd(F, fbar, fp::derivative(F, fbar));
  return g.degree() == 0;
}

std::vector<fp::FactorMult> factor_mod(const IntPoly& f, uint64_t ell, uint64_t seed) {
  fp::PrimeField F(ell);
  fp::FpPoly fbar = reduce_mod_prime(f, F);
  if (fbar.is_zero())
    fail(ErrorCode::ZeroPolynomial, "polynomial vanishes mod " + std::to_string(ell));
  return fp::factor(F, fbar, seed);
}

}  // namespace tame
