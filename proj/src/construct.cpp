#include "construct.hpp"

namespace tame {

Integer choose_n(uint32_t g, const Integer& p) {
  if (g < 1) fail(ErrorCode::InvalidArgument, "genus must be >= 1");
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, p.str() + " is not prime");
  Integer n1 = 2 * Integer(g) + 1;
  if (n1 % p != 0) return n1;
  Integer n2 = n1 + 1;
  if (n2 % p == 0) fail(ErrorCode::Internal, "p divides two consecutive integers");
  return n2;
}

IntPoly even_degree_model(uint64_t n) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "n >= 3 required");
  if (n % 2 == 0) return IntPoly::monomial(n) - IntPoly::from_ll({1});
  // u^{n+1} * ((1/u)^n - 1) = u - u^{n+1}
  return IntPoly::monomial(1) - IntPoly::monomial(n + 1);
}

CongruenceConstraint local_condition_odd_ell(uint32_t g, uint64_t ell) {
  if (g < 1) fail(ErrorCode::InvalidArgument, "genus must be >= 1");
  if (ell == 2 || !is_prime(Integer(ell)))
    fail(ErrorCode::InvalidArgument, "odd prime required");
  size_t deg = 2 * size_t(g) + 2;
  Integer counter = 0;
  Integer bound = 1;
  for (size_t i = 0; i < deg; ++i) bound *= ell;
  for (; counter < bound; ++counter) {
    std::vector<Integer> c(deg + 1, Integer(0));
    c[deg] = 1;
    Integer k = counter;
    for (size_t i = 0; i < deg && k != 0; ++i) {
      c[i] = k % ell;
      k /= ell;
    }
    IntPoly cand(std::move(c));
    if (is_separable_mod(cand, ell)) {
      CongruenceConstraint out;
      out.prime = ell;
      out.modulus = ell;
      out.residue_poly = cand;
      out.purpose = ConstraintPurpose::SeparabilityAtOddEll;
      return out;
    }
  }
  fail(ErrorCode::ConstructionFailed, "no separable residue found");  // unreachable
}

std::optional<TwoAdicWitness> good_reduction_two_check(const IntPoly& f, uint32_t g) {
  if (f.is_zero() || g < 1) return std::nullopt;
  int deg_f = f.degree();
  if (deg_f > 2 * int(g) + 2) return std::nullopt;

  // f = h^2 mod 4 pins h: over Z/2, h(x)^2 = sum h_i x^{2i}, so h_i is the
  // parity of f_{2i} and every odd coefficient of f must be even.
  std::vector<Integer> hc(size_t(deg_f / 2) + 1, Integer(0));
  for (size_t i = 0; i < hc.size(); ++i) hc[i] = mod_floor(f.coeff(2 * i), 2);
  IntPoly h{std::move(hc)};
  if (h.degree() > int(g) + 1) return std::nullopt;

  IntPoly diff = f - h * h;
  for (const auto& v : diff.coeffs())
    if (mod_floor(v, 4) != 0) return std::nullopt;
  auto k = divide_exact(diff, IntPoly::from_ll({4}));
  if (!k) return std::nullopt;

  fp::PrimeField F2(2);
  fp::FpPoly hbar = reduce_mod_prime(h, F2);
  fp::FpPoly kbar = reduce_mod_prime(*k, F2);

  // Affine smoothness of y^2 + h y = k over F_2: no common root of h and
  // h'^2 k - k'^2.
  fp::FpPoly hp = fp::derivative(F2, hbar);
  fp::FpPoly kp = fp::derivative(F2, kbar);
  fp::FpPoly crit = fp::sub(F2, fp::mul(F2, fp::mul(F2, hp, hp), kbar), fp::mul(F2, kp, kp));
  fp::FpPoly gcd_hk = fp::gcd(F2, hbar, crit);
  if (!(gcd_hk.degree() == 0 && !gcd_hk.is_zero())) return std::nullopt;

  // Smoothness at infinity: either h has top coefficient x^{g+1} (two smooth
  // points), or the reduction of k has odd degree 2g+1 with deg h <= g.
  bool h_top = mod_floor(h.coeff(size_t(g) + 1), 2) == 1;
  bool odd_model = kbar.degree() == 2 * int(g) + 1 && h.degree() <= int(g);
  if (!(h_top || odd_model)) return std::nullopt;

  return TwoAdicWitness{h, *k};
}

CongruenceConstraint mod2_class_for_genus(uint32_t g) {
  if (g < 1) fail(ErrorCode::InvalidArgument, "genus must be >= 1");
  size_t deg = 2 * size_t(g) + 2;
  Integer two_mod = Integer(1) << (2 * g + 2);
  Integer digit_base = Integer(1) << (2 * g);

  for (uint64_t hc = 0; hc < (uint64_t(1) << (g + 1)); ++hc) {
    std::vector<Integer> hcoeffs(size_t(g) + 2, Integer(0));
    hcoeffs[size_t(g) + 1] = 1;
    for (uint32_t i = 0; i <= g; ++i) hcoeffs[i] = (hc >> i) & 1;
    IntPoly h{std::move(hcoeffs)};
    // Only k of degree 2g+2 can pass the infinity check when deg h = g+1, so
    // the counter enumerates the lower digits with the top digit pinned to 1.
    Integer inner_bound = digit_base * digit_base;  // generous; first hit is tiny
    for (Integer c = 0; c < inner_bound; ++c) {
      std::vector<Integer> kc(deg + 1, Integer(0));
      kc[deg] = 1;
      Integer rest = c;
      for (size_t i = 0; i < deg && rest != 0; ++i) {
        kc[i] = rest % digit_base;
        rest /= digit_base;
      }
      IntPoly k{std::move(kc)};
      IntPoly f2 = (h * h + IntPoly::from_ll({4}) * k).reduced_mod(two_mod);
      if (f2.degree() != int(deg)) continue;
      auto wit = good_reduction_two_check(f2, g);
      if (wit) {
        CongruenceConstraint out;
        out.prime = 2;
        out.modulus = two_mod;
        out.residue_poly = f2;
        out.purpose = ConstraintPurpose::GoodReductionAtTwo;
        out.witness = TwoAdicWitness{h, k};
        return out;
      }
    }
  }
  fail(ErrorCode::ConstructionFailed, "two-adic search exhausted");
}

CurveSpec assemble(uint32_t g, const Integer& p, uint32_t kisin_depth) {
  if (g < 1) fail(ErrorCode::InvalidArgument, "genus must be >= 1");
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, p.str() + " is not prime");
  if (p == 2)
    fail(ErrorCode::UnsupportedPrime,
         "p = 2 is outside the pipeline; use the split 2-torsion curve instead");
  if (kisin_depth < 1) fail(ErrorCode::InvalidArgument, "congruence depth must be >= 1");

  CurveSpec spec;
  spec.genus = g;
  spec.p = p;
  spec.kisin_depth = kisin_depth;
  spec.n = choose_n(g, p);

  for (uint64_t ell : primes_up_to(2 * uint64_t(g) + 1)) {
    if (ell == 2 || Integer(ell) == p) continue;
    spec.constraints.push_back(local_condition_odd_ell(g, ell));
  }
  spec.constraints.push_back(mod2_class_for_genus(g));

  CongruenceConstraint cm;
  cm.prime = p;
  cm.modulus = 1;
  for (uint32_t i = 0; i < kisin_depth; ++i) cm.modulus *= p;
  cm.residue_poly = even_degree_model(spec.n.convert_to<uint64_t>()).reduced_mod(cm.modulus);
  cm.purpose = ConstraintPurpose::CMShapeAtP;
  spec.constraints.push_back(std::move(cm));

  Integer modulus = 1;
  for (const auto& cons : spec.constraints) modulus *= cons.modulus;
  spec.assembled_modulus = modulus;

  size_t ncoeff = 2 * size_t(g) + 3;
  std::vector<Integer> coeffs(ncoeff);
  for (size_t i = 0; i < ncoeff; ++i) {
    std::vector<ResidueClass> classes;
    classes.reserve(spec.constraints.size());
    for (const auto& cons : spec.constraints)
      classes.push_back(make_residue(cons.residue_poly.coeff(i), cons.modulus));
    coeffs[i] = mod_centered(crt_combine(classes).residue, modulus);
  }

  IntPoly f{std::vector<Integer>(coeffs)};
  if (f.degree() != int(ncoeff) - 1)
    fail(ErrorCode::Internal, "assembled polynomial lost its degree");
  // Repair schedule: add the full modulus to c_0, then c_1, ... (cyclically)
  // until the discriminant is nonzero.  Congruences are preserved.
  size_t bump = 0;
  for (int guard = 0; discriminant(f) == 0; ++guard) {
    if (guard > 1000) fail(ErrorCode::Internal, "discriminant repair did not terminate");
    coeffs[bump % ncoeff] += modulus;
    bump++;
    f = IntPoly{std::vector<Integer>(coeffs)};
  }
  spec.f = std::move(f);
  return spec;
}

IntPoly two_torsion_split_curve(uint32_t g) {
  if (g < 1) fail(ErrorCode::InvalidArgument, "genus must be >= 1");
  IntPoly f = IntPoly::from_ll({1});
  for (uint32_t j = 0; j <= 2 * g; ++j)
    f = f * IntPoly{std::vector<Integer>{Integer(-int64_t(j)), Integer(1)}};
  return f;
}

}  // namespace tame
