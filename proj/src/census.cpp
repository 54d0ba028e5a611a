#include "census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

namespace tame {

namespace mp = boost::multiprecision;

uint32_t genus_of(const IntPoly& f) {
  if (f.degree() < 3) fail(ErrorCode::InvalidArgument, "degree >= 3 required");
  return uint32_t((f.degree() - 1) / 2);
}

namespace {

bool good_reduction_at(const IntPoly& f, uint64_t ell) {
  Integer disc = discriminant(f);
  if (disc == 0) return false;
  return disc % ell != 0 && f.leading() % ell != 0;
}

Integer ipow(uint64_t base, uint32_t e) {
  Integer r = 1;
  for (uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

Integer binom(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

Integer count_points(const IntPoly& f, uint64_t ell, uint32_t r, uint64_t budget) {
  if (ell == 2 || !is_prime(Integer(ell)))
    fail(ErrorCode::InvalidArgument, "counting requires an odd prime");
  if (r < 1) fail(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  if (f.degree() < 1) fail(ErrorCode::InvalidArgument, "constant polynomial");
  if (!good_reduction_at(f, ell))
    fail(ErrorCode::BadReduction,
         "bad reduction at " + std::to_string(ell) + "; disc or lc vanishes");
  Integer q_big = ipow(ell, r);
  if (q_big > budget)
    fail(ErrorCode::BudgetExceeded,
         "ell^r = " + q_big.str() + " exceeds the enumeration budget");
  uint64_t q = q_big.convert_to<uint64_t>();

  Integer total = 0;
  if (r == 1) {
    fp::PrimeField F(ell);
    std::vector<int8_t> chi(ell, -1);
    chi[0] = 0;
    for (uint64_t x = 1; x < ell; ++x) chi[F.mul(x, x)] = 1;
    std::vector<uint64_t> fc(size_t(f.degree()) + 1);
    for (size_t i = 0; i < fc.size(); ++i) fc[i] = F.reduce(f.coeff(i));
    for (uint64_t x = 0; x < ell; ++x) {
      uint64_t acc = 0;
      for (size_t i = fc.size(); i-- > 0;) acc = F.add(F.mul(acc, x), fc[i]);
      total += 1 + chi[acc];
    }
    if (f.degree() % 2 == 1)
      total += 1;
    else
      total += 1 + chi[F.reduce(f.leading())];
  } else {
    fp::ExtField E(ell, r);
    std::vector<fp::ExtField::Elem> fc(size_t(f.degree()) + 1);
    for (size_t i = 0; i < fc.size(); ++i)
      fc[i] = E.from_base(E.base().reduce(f.coeff(i)));
    for (uint64_t idx = 0; idx < q; ++idx) {
      fp::ExtField::Elem x = E.element_at(idx);
      fp::ExtField::Elem acc = E.zero();
      for (size_t i = fc.size(); i-- > 0;) acc = E.add(E.mul(acc, x), fc[i]);
      total += 1 + E.chi(acc);
    }
    if (f.degree() % 2 == 1)
      total += 1;
    else
      total += 1 + E.chi(E.from_base(E.base().reduce(f.leading())));
  }
  return total;
}

namespace {

// Power sums s_1..s_m of the Frobenius eigenvalues from the elementary
// symmetric functions e_1..e_{2g} (Newton's identities), m <= 2g.
std::vector<Integer> power_sums(const std::vector<Integer>& e, unsigned m) {
  std::vector<Integer> s(m + 1, Integer(0));
  for (unsigned k = 1; k <= m; ++k) {
    Integer acc = (k % 2 == 1) ? Integer(k) * e[k] : -Integer(k) * e[k];
    for (unsigned i = 1; i < k; ++i) {
      Integer term = e[i] * s[k - i];
      acc += (i % 2 == 1) ? term : -term;
    }
    s[k] = acc;
  }
  return s;
}

}  // namespace

FrobeniusRecord frobenius_charpoly(const IntPoly& f, uint64_t ell, uint32_t g,
                                   const Integer& p, const CensusOptions& opts) {
  if (g < 1) fail(ErrorCode::InvalidArgument, "genus must be >= 1");
  FrobeniusRecord rec;
  rec.ell = ell;

  std::vector<Integer> s(2 * g + 1, Integer(0));  // s[r] = ell^r + 1 - N_r
  for (uint32_t r = 1; r <= g; ++r) {
    Integer nr = count_points(f, ell, r, opts.budget);
    rec.counts.push_back(nr);
    s[r] = ipow(ell, r) + 1 - nr;
  }

  // Newton: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} s_i, exact division.
  std::vector<Integer> e(2 * g + 1, Integer(0));
  e[0] = 1;
  for (uint32_t k = 1; k <= g; ++k) {
    Integer acc = 0;
    for (uint32_t i = 1; i <= k; ++i) {
      Integer term = e[k - i] * s[i];
      acc += (i % 2 == 1) ? term : -term;
    }
    if (acc % k != 0) fail(ErrorCode::Internal, "Newton identities gave a non-integer");
    e[k] = acc / k;
  }
  // Functional equation a_{2g-i} = ell^{g-i} a_i.
  for (uint32_t i = 0; i < g; ++i) e[2 * g - i] = ipow(ell, g - i) * e[i];

  std::vector<Integer> coeffs(2 * g + 1);
  for (uint32_t i = 0; i <= 2 * g; ++i)
    coeffs[2 * g - i] = (i % 2 == 0) ? e[i] : -e[i];
  rec.charpoly = IntPoly(std::move(coeffs));

  // Weil bounds: a_i^2 <= C(2g, i)^2 ell^i, and all predicted counts positive.
  for (uint32_t i = 1; i <= 2 * g; ++i) {
    Integer b = binom(2 * g, i);
    if (e[i] * e[i] > b * b * ipow(ell, i))
      fail(ErrorCode::Internal, "Weil coefficient bound violated");
  }
  std::vector<Integer> all_s = power_sums(e, 2 * g);
  for (uint32_t r = 1; r <= 2 * g; ++r) {
    Integer pred = ipow(ell, r) + 1 - all_s[r];
    if (pred <= 0) fail(ErrorCode::Internal, "predicted point count not positive");
    if (opts.self_check && r > g && ipow(ell, r) <= opts.budget) {
      Integer direct = count_points(f, ell, r, opts.budget);
      if (direct != pred)
        fail(ErrorCode::Internal,
             "predicted N_" + std::to_string(r) + " disagrees with enumeration");
    }
  }

  if (p < 2 || p >= (Integer(1) << 62))
    fail(ErrorCode::InvalidArgument, "census requires 2 <= p < 2^62");
  fp::PrimeField Fp(p.convert_to<uint64_t>());
  fp::FpPoly cp = reduce_mod_prime(rec.charpoly, Fp);
  rec.charpoly_mod_p.assign(2 * g + 1, 0);
  for (size_t i = 0; i < rec.charpoly_mod_p.size(); ++i)
    rec.charpoly_mod_p[i] = cp.coeff(i);
  rec.multiplier = Fp.reduce(Integer(ell));
  rec.irreducible_mod_p = fp::is_irreducible(Fp, cp);

  // Constant term mod p must be ell^g (functional-equation consequence).
  if (rec.charpoly_mod_p[0] != Fp.pow(rec.multiplier, uint64_t(g)))
    fail(ErrorCode::Internal, "constant term of charpoly mod p is not ell^g");
  return rec;
}

namespace {

uint32_t resolve_workers(uint32_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TAMECURVE_WORKERS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0 && v < 1024) return uint32_t(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Order of the companion matrix of cp in GL_{2g}(F_p): lcm over irreducible
// factors q of the order of T in F_p[T]/(q), times a p-power for repeated
// factors.  Skipped (nullopt) when p^{deg} - 1 is too large to factor
// comfortably.
std::optional<Integer> companion_order(const fp::PrimeField& Fp,
                                       const std::vector<uint64_t>& coeffs,
                                       uint64_t seed) {
  fp::FpPoly cp;
  cp.c = coeffs;
  cp.normalize();
  if (cp.degree() < 1) return std::nullopt;
  if (cp.coeff(0) == 0) return std::nullopt;  // T not invertible
  Integer order = 1;
  unsigned max_mult = 1;
  for (const auto& fm : fp::factor(Fp, cp, seed)) {
    Integer qorder = ipow(Fp.p(), uint32_t(fm.factor.degree())) - 1;
    if (qorder > Integer("1000000000000000000")) return std::nullopt;
    Integer t = qorder;
    for (const auto& [qq, ee] : factorize(t)) {
      (void)ee;
      while (t % qq == 0) {
        fp::FpPoly probe =
            fp::pow_mod(Fp, fp::FpPoly::x(), t / qq, fm.factor);
        if (!(probe == fp::FpPoly::one())) break;
        t /= qq;
      }
    }
    order = mp::lcm(order, t);
    max_mult = std::max(max_mult, fm.multiplicity);
  }
  Integer ppow = 1;
  for (Integer cover = 1; cover < max_mult; cover *= Fp.p()) ppow *= Fp.p();
  return order * ppow;
}

std::pair<Integer, Integer> reduced_fraction(uint64_t num, uint64_t den) {
  if (den == 0) return {0, 1};
  Integer g = mp::gcd(Integer(num), Integer(den));
  if (g == 0) return {0, 1};
  return {Integer(num) / g, Integer(den) / g};
}

}  // namespace

Census image_evidence(const IntPoly& f, uint32_t genus, const Integer& p,
                      uint64_t ell_bound, const CensusOptions& opts) {
  if (ell_bound < 3) fail(ErrorCode::InvalidArgument, "ell bound must be >= 3");
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, p.str() + " is not prime");
  if (genus < 1 || f.degree() < 3) fail(ErrorCode::InvalidArgument, "bad curve");

  std::vector<uint64_t> candidates;
  for (uint64_t ell : primes_up_to(ell_bound)) {
    if (ell == 2 || Integer(ell) == p) continue;
    if (!good_reduction_at(f, ell)) continue;
    if (ipow(ell, genus) > opts.budget) continue;
    candidates.push_back(ell);
  }
  if (candidates.size() < 5)
    fail(ErrorCode::InsufficientData,
         "only " + std::to_string(candidates.size()) +
             " usable primes below the bound; need at least 5");

  std::vector<FrobeniusRecord> records(candidates.size());
  std::vector<std::string> errors(candidates.size());
  std::atomic<size_t> next{0};
  uint32_t nworkers =
      std::min<uint32_t>(resolve_workers(opts.workers), uint32_t(candidates.size()));
  auto run = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= candidates.size()) break;
      try {
        records[i] = frobenius_charpoly(f, candidates[i], genus, p, opts);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    }
  };
  if (nworkers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (uint32_t w = 0; w < nworkers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  for (size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty())
      fail(ErrorCode::Internal,
           "census at ell = " + std::to_string(candidates[i]) + ": " + errors[i]);

  Census census;
  census.records = std::move(records);  // candidates were ascending already

  ImageEvidence& ev = census.evidence;
  ev.p = p;
  ev.sampled = census.records.size();
  std::set<uint64_t> classes;
  uint64_t irr = 0, zero_trace = 0;
  Integer lcm_acc = 1;
  bool lcm_ok = true;
  fp::PrimeField Fp(p.convert_to<uint64_t>());
  for (const auto& rec : census.records) {
    classes.insert(rec.multiplier);
    if (rec.irreducible_mod_p) ++irr;
    if (rec.charpoly_mod_p[2 * genus - 1] == 0) ++zero_trace;
    if (lcm_ok) {
      auto o = companion_order(Fp, rec.charpoly_mod_p, opts.seed);
      if (o)
        lcm_acc = mp::lcm(lcm_acc, *o);
      else
        lcm_ok = false;
    }
  }
  ev.multiplier_classes_hit.assign(classes.begin(), classes.end());
  ev.irreducible_fraction = reduced_fraction(irr, ev.sampled);
  ev.zero_trace_fraction = reduced_fraction(zero_trace, ev.sampled);
  if (lcm_ok) ev.order_lcm = lcm_acc;

  // Verdict policy (artifact policy, not from any theorem): full multiplier
  // coverage and some irreducible samples with no visible bias reads as
  // consistent; >= 50 samples that are all reducible, or a zero-trace rate
  // above 1/p + 1/4, reads as an obstruction (CM-style signature).
  bool full_coverage = Integer(ev.multiplier_classes_hit.size()) == p - 1;
  bool bias = false;
  if (ev.sampled >= 50) {
    if (irr == 0) bias = true;
    // zero_trace/sampled >= 1/p + 1/4, compared in integers.
    if (Integer(4) * p * zero_trace >= Integer(ev.sampled) * (Integer(4) + p))
      bias = true;
  }
  if (bias) {
    ev.verdict = ImageVerdict::ObstructionFound;
  } else if (full_coverage && irr > 0) {
    ev.verdict = ImageVerdict::ConsistentWithFullImage;
  } else {
    ev.verdict = ImageVerdict::Inconclusive;
  }
  ev.policy =
      "statistical evidence only, never a proof; thresholds are tool policy: "
      "ConsistentWithFullImage needs every unit mod p hit as a multiplier, a "
      "nonzero irreducible fraction, and no bias; ObstructionFound needs >= 50 "
      "samples with zero irreducible fraction or zero-trace fraction >= 1/p + 1/4";
  return census;
}

Census image_evidence(const CurveSpec& curve, uint64_t ell_bound,
                      const CensusOptions& opts) {
  return image_evidence(curve.f, curve.genus, curve.p, ell_bound, opts);
}

}  // namespace tame
