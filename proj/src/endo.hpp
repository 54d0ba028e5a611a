#pragma once

#include <vector>

#include "certdata.hpp"

namespace tame {

/// Splitting of p in the cyclotomic field Q(zeta_d): ramification degree e,
/// residue degree f, and the number g of primes above p.  e*f*g = phi(d),
/// with e = phi(p^{v_p(d)}) and f = ord of p modulo d/p^{v_p(d)}.
struct SplittingDatum {
  Integer d;
  Integer e;
  Integer f;
  Integer g_count;
  bool operator==(const SplittingDatum&) const = default;
};

/// CM structure of Jac(y^2 = x^n - a): one cyclotomic factor Z[zeta_d] per
/// divisor d | n with d > 2, together with the splitting of p in each.
struct EndoStructure {
  Integer n;
  Integer genus;
  std::vector<SplittingDatum> factors;
  Integer unit_group_order;  // |(O_F tensor F_p)^x|, the full local-unit order
  bool p_unramified = false;
};

/// Divisors d | n with d > 2, sorted ascending.  GenusZero when n < 3.
std::vector<Integer> endo_ring(const Integer& n);

SplittingDatum splitting_data(const Integer& d, const Integer& p);

/// prod over d | n, d > 2 of (p^f - 1)^g; requires p coprime to n
/// (RamifiedCase otherwise).  The result is coprime to p.
Integer unit_group_order(const Integer& n, const Integer& p);

/// Unit-group order without the unramified restriction: each place above p
/// contributes (p^f - 1) * p^{f(e-1)}.  Diagnostic only.
Integer local_unit_group_order(const Integer& n, const Integer& p);

EndoStructure endo_structure(const Integer& n, const Integer& p);

/// PASS entry iff p does not divide n; records the unit-group order and the
/// gcd witness either way.
CertificateEntry tame_at_p_criterion(const Integer& n, const Integer& p);

/// Checks that the minimal polynomial of {zeta_n^{i+1} : 0 <= i < g} — the
/// product of the cyclotomics at the distinct orders n/gcd(n, i+1) — equals
/// pn_poly(n).
bool verify_pn_via_eigenvalues(uint64_t n);

}  // namespace tame
