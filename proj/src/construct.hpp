#pragma once

#include <optional>
#include <vector>

#include "intpoly.hpp"

namespace tame {

enum class ConstraintPurpose { SeparabilityAtOddEll, GoodReductionAtTwo, CMShapeAtP };

inline const char* constraint_purpose_name(ConstraintPurpose p) {
  switch (p) {
    case ConstraintPurpose::SeparabilityAtOddEll: return "SeparabilityAtOddEll";
    case ConstraintPurpose::GoodReductionAtTwo: return "GoodReductionAtTwo";
    case ConstraintPurpose::CMShapeAtP: return "CMShapeAtP";
  }
  return "Unknown";
}

/// Witness for good reduction at 2: f = h^2 + 4k with y^2 + h y = k smooth
/// over F_2.
struct TwoAdicWitness {
  IntPoly h;
  IntPoly k;
  bool operator==(const TwoAdicWitness&) const = default;
};

/// A coefficientwise congruence f = residue_poly mod modulus, tagged with the
/// prime it serves and the condition it enforces.
struct CongruenceConstraint {
  Integer prime;
  Integer modulus;  // a power of prime
  IntPoly residue_poly;
  ConstraintPurpose purpose = ConstraintPurpose::SeparabilityAtOddEll;
  std::optional<TwoAdicWitness> witness;  // prime-2 constraints only
};

/// The assembled curve y^2 = f(x) together with every congruence it was built
/// from, so a third party can replay the construction without re-searching.
struct CurveSpec {
  uint32_t genus = 0;
  Integer p;
  Integer n;
  uint32_t kisin_depth = 0;
  IntPoly f;  // degree 2g+2, squarefree over Q
  std::vector<CongruenceConstraint> constraints;
  Integer assembled_modulus;
};

/// The n in {2g+1, 2g+2} with p not dividing n; ties break to 2g+1.
Integer choose_n(uint32_t g, const Integer& p);

/// x^n - 1 for even n; the substitution x -> 1/u turns odd n into the
/// degree-(n+1) model u - u^{n+1} of the same curve.
IntPoly even_degree_model(uint64_t n);

/// First monic degree-(2g+2) residue mod ell that is separable, enumerating
/// the lower coefficients as little-endian base-ell digits of an ascending
/// counter.
CongruenceConstraint local_condition_odd_ell(uint32_t g, uint64_t ell);

/// Transform-and-check criterion for good reduction at 2: the unique
/// candidate h (coefficients in {0,1}) with f = h^2 mod 4, when it exists,
/// gives k = (f - h^2)/4; the witness is returned iff y^2 + h y = k is smooth
/// over F_2 (affine gcd test plus the point(s) at infinity).
std::optional<TwoAdicWitness> good_reduction_two_check(const IntPoly& f, uint32_t g);

/// Deterministic search for a residue class mod 2^{2g+2} passing
/// good_reduction_two_check; h runs over {0,1}-coefficient polynomials with
/// top coefficient x^{g+1}, k over digit counters below 2^{2g}.
CongruenceConstraint mod2_class_for_genus(uint32_t g);

/// The full pipeline: per-prime constraints, coefficientwise CRT with
/// representatives in (-M/2, M/2], and a deterministic repair schedule should
/// the discriminant vanish.  p = 2 is rejected (UnsupportedPrime).
CurveSpec assemble(uint32_t g, const Integer& p, uint32_t kisin_depth);

/// The genus-g curve y^2 = prod_{j=0}^{2g} (x - j), whose 2-torsion field is
/// Q.  Provided for completeness; it carries no tameness certificate.
IntPoly two_torsion_split_curve(uint32_t g);

}  // namespace tame
