#pragma once

#include "certdata.hpp"
#include "construct.hpp"
#include "endo.hpp"

namespace tame {

/// Per-prime tameness certificate for a curve: good reduction at the small
/// primes, the Serre-Tate range above 2g+1, and the CM criterion at p.
struct TamenessCertificate {
  CurveSpec curve;
  std::vector<CertificateEntry> entries;
  bool overall = false;  // PASS iff every entry passes
};

/// PASS iff ell divides neither lc(f) nor disc(f); the witness records both
/// valuations.  WrongPrime for ell = 2 (route through the two-adic check).
CertificateEntry good_reduction_odd(const IntPoly& f, const Integer& ell);

/// Builds the full certificate: ascending specific primes <= 2g+1 (skipping
/// p), the symbolic range, then the CM entry at p (always flagged
/// kisin-conditional).  Stored congruences are replayed against f; a mismatch
/// fails the corresponding entry.  IncompleteSpec when the prime-2 witness is
/// missing.
TamenessCertificate certify(const CurveSpec& curve);

}  // namespace tame
