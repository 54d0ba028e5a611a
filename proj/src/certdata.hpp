#pragma once

#include <string>
#include <variant>

#include "intpoly.hpp"

namespace tame {

enum class Justification { GoodReduction, SerreTateBound, CMAtP };

inline const char* justification_name(Justification j) {
  switch (j) {
    case Justification::GoodReduction: return "GoodReduction";
    case Justification::SerreTateBound: return "SerreTateBound";
    case Justification::CMAtP: return "CMAtP";
  }
  return "Unknown";
}

/// ell odd: valuations of the discriminant and leading coefficient.
struct OddReductionWitness {
  unsigned disc_valuation = 0;
  unsigned lc_valuation = 0;
  bool operator==(const OddReductionWitness&) const = default;
};

/// ell = 2: the smooth integral model y^2 + h y = k with f = h^2 + 4k.
struct TwoAdicModelWitness {
  IntPoly h;
  IntPoly k;
  bool operator==(const TwoAdicModelWitness&) const = default;
};

/// Symbolic range entry: tame for all ell above the bound, no computation.
struct RangeBoundWitness {
  uint64_t bound = 0;
  bool operator==(const RangeBoundWitness&) const = default;
};

/// ell = p: the unit-group order of the CM algebra mod p and its gcd with p.
struct CMOrderWitness {
  Integer n;
  Integer unit_group_order;
  Integer order_gcd_p;
  bool operator==(const CMOrderWitness&) const = default;
};

using EntryWitness = std::variant<std::monostate, OddReductionWitness,
                                  TwoAdicModelWitness, RangeBoundWitness,
                                  CMOrderWitness>;

/// One per-prime line of a tameness certificate.
struct CertificateEntry {
  std::string scope;  // a decimal prime, or "ell>B" for the symbolic range
  bool pass = false;
  Justification justification = Justification::GoodReduction;
  EntryWitness witness;
  bool kisin_conditional = false;
  std::string detail;  // empty unless there is something to say (usually on FAIL)
};

}  // namespace tame
