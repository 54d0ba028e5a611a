#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "construct.hpp"

namespace tame {

/// Point counts and the characteristic polynomial of Frobenius at a good
/// prime ell, plus its reduction mod p.
struct FrobeniusRecord {
  uint64_t ell = 0;
  std::vector<Integer> counts;  // N_1 .. N_g
  IntPoly charpoly;             // degree 2g: T^{2g} - a_1 T^{2g-1} + ...
  std::vector<uint64_t> charpoly_mod_p;  // ascending coefficients in [0, p)
  uint64_t multiplier = 0;               // ell mod p (the Weil-pairing character)
  bool irreducible_mod_p = false;
};

enum class ImageVerdict { ConsistentWithFullImage, Inconclusive, ObstructionFound };

inline const char* image_verdict_name(ImageVerdict v) {
  switch (v) {
    case ImageVerdict::ConsistentWithFullImage: return "ConsistentWithFullImage";
    case ImageVerdict::Inconclusive: return "Inconclusive";
    case ImageVerdict::ObstructionFound: return "ObstructionFound";
  }
  return "Unknown";
}

/// Aggregated sampling evidence for surjectivity of the mod-p image.
/// Statistical evidence only, never a proof; the thresholds are artifact
/// policy and are echoed in the policy string.
struct ImageEvidence {
  Integer p;
  uint64_t sampled = 0;
  std::vector<uint64_t> multiplier_classes_hit;            // sorted
  std::pair<Integer, Integer> irreducible_fraction{0, 1};  // lowest terms
  std::pair<Integer, Integer> zero_trace_fraction{0, 1};   // lowest terms
  std::optional<Integer> order_lcm;  // lcm of companion-matrix orders mod p
  ImageVerdict verdict = ImageVerdict::Inconclusive;
  std::string policy;
};

struct CensusOptions {
  uint64_t budget = 10'000'000;  // enumeration cap on ell^r
  uint32_t workers = 0;          // 0 = TAMECURVE_WORKERS env or hardware
  uint64_t seed = 0;             // equal-degree-splitting PRNG
  bool self_check = false;       // re-enumerate N_{g+1}..N_{2g} against predictions
};

/// Projective points of the smooth model of y^2 = f(x) over F_{ell^r},
/// counted with the quadratic character.  Requires ell odd and disc-unit
/// reduction at ell (BadReduction otherwise); ell^r above the budget raises
/// BudgetExceeded.
Integer count_points(const IntPoly& f, uint64_t ell, uint32_t r,
                     uint64_t budget = 10'000'000);

/// Counts N_1..N_g, Newton's identities, and the functional equation give the
/// degree-2g characteristic polynomial; Weil bounds and positivity of the
/// predicted counts are verified on every record.
FrobeniusRecord frobenius_charpoly(const IntPoly& f, uint64_t ell, uint32_t g,
                                   const Integer& p, const CensusOptions& opts = {});

struct Census {
  std::vector<FrobeniusRecord> records;  // sorted by ell
  ImageEvidence evidence;
};

/// Frobenius census over good odd primes ell <= ell_bound (ell != p).
/// Fewer than 5 usable primes raises InsufficientData.
Census image_evidence(const IntPoly& f, uint32_t genus, const Integer& p,
                      uint64_t ell_bound, const CensusOptions& opts = {});

Census image_evidence(const CurveSpec& curve, uint64_t ell_bound,
                      const CensusOptions& opts = {});

/// Genus of the smooth hyperelliptic model y^2 = f(x).
uint32_t genus_of(const IntPoly& f);

}  // namespace tame
