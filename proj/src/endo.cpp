#include "endo.hpp"

#include <numeric>
#include <set>

namespace tame {

namespace mp = boost::multiprecision;

std::vector<Integer> endo_ring(const Integer& n) {
  if (n < 3)
    fail(ErrorCode::GenusZero, "n = " + n.str() + " gives a genus-zero curve");
  std::vector<Integer> out;
  for (const auto& d : divisors_of(n))
    if (d > 2) out.push_back(d);
  return out;
}

SplittingDatum splitting_data(const Integer& d, const Integer& p) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "conductor must be >= 1");
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, p.str() + " is not prime");
  Integer pv = 1;
  Integer m = d;
  while (m % p == 0) {
    m /= p;
    pv *= p;
  }
  Integer e = euler_phi(pv);
  Integer f = mult_order(p, m);
  Integer phi = euler_phi(d);
  if (phi % (e * f) != 0)
    fail(ErrorCode::Internal, "splitting bookkeeping failed");
  return {d, e, f, phi / (e * f)};
}

Integer unit_group_order(const Integer& n, const Integer& p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, p.str() + " is not prime");
  if (n % p == 0)
    fail(ErrorCode::RamifiedCase,
         "p = " + p.str() + " divides n = " + n.str() + "; p ramifies in the CM algebra");
  Integer order = 1;
  for (const auto& d : endo_ring(n)) {
    SplittingDatum sd = splitting_data(d, p);
    Integer pf = 1;
    for (Integer i = 0; i < sd.f; ++i) pf *= p;
    for (Integer i = 0; i < sd.g_count; ++i) order *= (pf - 1);
  }
  return order;
}

Integer local_unit_group_order(const Integer& n, const Integer& p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, p.str() + " is not prime");
  Integer order = 1;
  for (const auto& d : endo_ring(n)) {
    SplittingDatum sd = splitting_data(d, p);
    Integer pf = 1;
    for (Integer i = 0; i < sd.f; ++i) pf *= p;
    Integer unit_local = pf - 1;  // residue field units
    Integer nilpotent = 1;        // 1 + eps * (...) part
    Integer steps = sd.f * (sd.e - 1);
    for (Integer i = 0; i < steps; ++i) nilpotent *= p;
    Integer per_place = unit_local * nilpotent;
    Integer factor = 1;
    for (Integer i = 0; i < sd.g_count; ++i) factor *= per_place;
    order *= factor;
  }
  return order;
}

EndoStructure endo_structure(const Integer& n, const Integer& p) {
  EndoStructure es;
  es.n = n;
  es.genus = (n - 1) / 2;
  es.unit_group_order = local_unit_group_order(n, p);
  bool unram = true;
  for (const auto& d : endo_ring(n)) {
    SplittingDatum sd = splitting_data(d, p);
    if (sd.e != 1) unram = false;
    es.factors.push_back(std::move(sd));
  }
  es.p_unramified = unram;
  return es;
}

CertificateEntry tame_at_p_criterion(const Integer& n, const Integer& p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, p.str() + " is not prime");
  CertificateEntry entry;
  entry.scope = p.str();
  entry.justification = Justification::CMAtP;
  if (n % p != 0) {
    Integer order = unit_group_order(n, p);
    Integer g = mp::gcd(order, p);
    if (g != 1) fail(ErrorCode::Internal, "unit-group order not coprime to p");
    entry.pass = true;
    entry.witness = CMOrderWitness{n, order, g};
  } else {
    Integer order = local_unit_group_order(n, p);
    entry.pass = false;
    entry.witness = CMOrderWitness{n, order, mp::gcd(order, p)};
    entry.detail = "p divides n; the CM algebra ramifies at p";
  }
  return entry;
}

bool verify_pn_via_eigenvalues(uint64_t n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "n >= 3 required");
  uint64_t g = (n - 1) / 2;
  std::set<uint64_t> orders;
  for (uint64_t k = 1; k <= g; ++k)
    orders.insert(n / std::gcd(n, k));
  IntPoly prod = IntPoly::from_ll({1});
  for (uint64_t d : orders) prod = prod * cyclotomic(d);
  return prod == pn_poly(n);
}

}  // namespace tame
