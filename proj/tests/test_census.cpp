#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "census.hpp"
#include "test_util.hpp"

using namespace tame;

TEST_CASE("count_points fixed values") {
  // cubing is a bijection on F_5, so one affine point per x, plus infinity
  CHECK(count_points(IntPoly::from_ll({-1, 0, 0, 1}), 5, 1) == 6);
  CHECK(count_points(IntPoly::from_ll({-1, 0, 0, 0, 1}), 3, 1) == 4);
  CHECK(count_points(IntPoly::from_ll({-1, 0, 0, 0, 0, 1}), 3, 1) == 4);
}

TEST_CASE("count_points matches the brute-force oracle") {
  const IntPoly curves[] = {
      IntPoly::from_ll({-1, 0, 0, 1}),        // x^3 - 1
      IntPoly::from_ll({-1, 0, 0, 0, 1}),     // x^4 - 1
      IntPoly::from_ll({-1, 0, 0, 0, 0, 1}),  // x^5 - 1
      IntPoly::from_ll({3, 1, 0, 2, 0, 0, 5}),
      IntPoly::from_ll({0, 2, -3, 1}),
  };
  for (const auto& f : curves)
    for (uint64_t ell : {3, 5, 7, 11, 13}) {
      Integer disc = discriminant(f);
      if (disc % ell == 0 || f.leading() % ell == 0) continue;
      CHECK(count_points(f, ell, 1) == oracle::brute_points(f, ell));
    }
  // extension fields
  CHECK(count_points(IntPoly::from_ll({-1, 0, 0, 0, 0, 1}), 3, 2) ==
        oracle::brute_points_ext(IntPoly::from_ll({-1, 0, 0, 0, 0, 1}), 3, 2));
  CHECK(count_points(IntPoly::from_ll({-1, 0, 0, 1}), 5, 2) ==
        oracle::brute_points_ext(IntPoly::from_ll({-1, 0, 0, 1}), 5, 2));
  CHECK(count_points(IntPoly::from_ll({3, 1, 0, 2, 0, 0, 5}), 7, 2) ==
        oracle::brute_points_ext(IntPoly::from_ll({3, 1, 0, 2, 0, 0, 5}), 7, 2));
}

TEST_CASE("count_points error paths") {
  try {
    count_points(IntPoly::from_ll({-1, 0, 0, 1}), 3, 1);  // disc = -27
    FAIL("expected BadReduction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadReduction);
  }
  try {
    count_points(IntPoly::from_ll({-1, 0, 0, 1}), 5, 12);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("frobenius_charpoly fixed values") {
  auto rec = frobenius_charpoly(IntPoly::from_ll({-1, 0, 0, 1}), 5, 1, 7);
  CHECK(rec.charpoly == IntPoly::from_ll({5, 0, 1}));  // T^2 + 5
  CHECK(rec.counts == std::vector<Integer>{6});
  CHECK(rec.multiplier == 5);

  rec = frobenius_charpoly(IntPoly::from_ll({-1, 0, 0, 0, 1}), 3, 1, 7);
  CHECK(rec.charpoly == IntPoly::from_ll({3, 0, 1}));  // T^2 + 3
}

TEST_CASE("genus-2 charpoly predicts the higher counts (self-check)") {
  CensusOptions opts;
  opts.self_check = true;
  IntPoly f = IntPoly::from_ll({-1, 0, 0, 0, 0, 1});  // x^5 - 1
  for (uint64_t ell : {3, 7, 11, 13}) {
    auto rec = frobenius_charpoly(f, ell, 2, 7, opts);  // throws on mismatch
    CHECK(rec.charpoly.degree() == 4);
    // functional equation: a_{2g-i} = ell^{g-i} a_i; in coefficients,
    // c_{i} = ell^{g-i} c_{2g-i} for the reciprocal pairing
    const auto& cp = rec.charpoly;
    Integer ell2 = Integer(ell) * ell;
    CHECK(cp.coeff(0) == ell2 * cp.coeff(4));
    CHECK(cp.coeff(1) == Integer(ell) * cp.coeff(3));
  }
}

TEST_CASE("CM signature: a_ell = 0 for inert primes") {
  // y^2 = x^3 - 1 has CM by Z[zeta_3]: traces vanish at ell = 2 mod 3
  IntPoly c3 = IntPoly::from_ll({-1, 0, 0, 1});
  for (uint64_t ell : primes_up_to(200)) {
    if (ell < 5 || ell % 3 != 2) continue;
    auto rec = frobenius_charpoly(c3, ell, 1, 5);
    CHECK(rec.charpoly.coeff(1) == 0);
  }
  // y^2 = x^4 - 1 has CM by Z[i]: traces vanish at ell = 3 mod 4
  IntPoly c4 = IntPoly::from_ll({-1, 0, 0, 0, 1});
  for (uint64_t ell : primes_up_to(200)) {
    if (ell < 3 || ell % 4 != 3) continue;
    auto rec = frobenius_charpoly(c4, ell, 1, 5);
    CHECK(rec.charpoly.coeff(1) == 0);
  }
}

TEST_CASE("every record satisfies the multiplier and constant-term relation") {
  IntPoly f = assemble(1, 5, 2).f;
  auto census = image_evidence(f, 1, 5, 100, {});
  for (const auto& rec : census.records) {
    CHECK(rec.multiplier == rec.ell % 5);
    CHECK(rec.charpoly_mod_p[0] == rec.ell % 5);  // ell^g mod p, g = 1
    CHECK(rec.charpoly.coeff(0) == Integer(rec.ell));  // a_2 = ell exactly
  }
}

TEST_CASE("image_evidence on the constructed (1,5) curve") {
  CurveSpec spec = assemble(1, 5, 2);
  auto census = image_evidence(spec, 500, {});
  const auto& ev = census.evidence;
  CHECK(ev.multiplier_classes_hit == std::vector<uint64_t>{1, 2, 3, 4});
  CHECK(ev.verdict == ImageVerdict::ConsistentWithFullImage);
  CHECK(ev.irreducible_fraction.first > 0);
  CHECK(ev.sampled >= 50);
  CHECK(ev.policy.find("never a proof") != std::string::npos);
}

TEST_CASE("image_evidence flags the CM curve as an obstruction") {
  // y^2 = x^3 - 1 with p = 7: half the traces vanish
  auto census = image_evidence(IntPoly::from_ll({-1, 0, 0, 1}), 1, 7, 500, {});
  CHECK(census.evidence.verdict == ImageVerdict::ObstructionFound);
  // zero-trace fraction should be roughly 1/2, far above 1/7 + 1/4
  CHECK(2 * census.evidence.zero_trace_fraction.first >=
        census.evidence.zero_trace_fraction.second);
}

TEST_CASE("image_evidence requires at least 5 usable primes") {
  try {
    image_evidence(IntPoly::from_ll({-1, 0, 0, 1}), 1, 7, 3, {});
    FAIL("expected InsufficientData");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientData);
  }
}

TEST_CASE("census is deterministic regardless of worker count") {
  IntPoly f = assemble(1, 5, 2).f;
  CensusOptions one;
  one.workers = 1;
  CensusOptions many;
  many.workers = 8;
  auto a = image_evidence(f, 1, 5, 200, one);
  auto b = image_evidence(f, 1, 5, 200, many);
  REQUIRE(a.records.size() == b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].ell == b.records[i].ell);
    CHECK(a.records[i].charpoly == b.records[i].charpoly);
  }
  CHECK(a.evidence.order_lcm == b.evidence.order_lcm);
}

TEST_CASE("Weil bounds hold on every sampled record") {
  IntPoly f = IntPoly::from_ll({-1, 0, 0, 0, 0, 1});  // genus 2
  for (uint64_t ell : {3, 7, 11}) {
    auto rec = frobenius_charpoly(f, ell, 2, 5);
    // |a_1| <= 4 sqrt(ell): compare squares
    Integer a1 = -rec.charpoly.coeff(3);
    CHECK(a1 * a1 <= Integer(16) * ell);
  }
}
