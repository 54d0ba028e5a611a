#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "intpoly.hpp"
#include "test_util.hpp"

using namespace tame;

TEST_CASE("resultant agrees with the Sylvester/Bareiss oracle") {
  uint64_t state = 4242;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return int64_t(state >> 36) - 100;
  };
  for (int trial = 0; trial < 300; ++trial) {
    int da = 1 + int(uint64_t(next()) % 6), db = 1 + int(uint64_t(next()) % 6);
    std::vector<Integer> a(size_t(da) + 1), b(size_t(db) + 1);
    for (auto& v : a) v = next();
    for (auto& v : b) v = next();
    if (a.back() == 0) a.back() = 1;
    if (b.back() == 0) b.back() = 1;
    IntPoly fa{std::move(a)}, fb{std::move(b)};
    CHECK(resultant(fa, fb) == oracle::sylvester_resultant(fa, fb));
  }
}

TEST_CASE("discriminant fixed values") {
  CHECK(discriminant(IntPoly::from_ll({-1, 0, 1})) == 4);     // x^2 - 1
  CHECK(discriminant(IntPoly::from_ll({-1, 0, 0, 1})) == -27);  // x^3 - 1
  IntPoly sq = IntPoly::from_ll({-1, 1}) * IntPoly::from_ll({-1, 1});
  CHECK(discriminant(sq) == 0);  // (x-1)^2
  CHECK(discriminant(IntPoly::from_ll({-1, 0, 0, 0, 1})) == -256);   // x^4 - 1
  CHECK(discriminant(IntPoly::from_ll({-1, 0, 0, 0, 0, 1})) == 3125);  // x^5 - 1
  CHECK_THROWS_AS(discriminant(IntPoly::from_ll({7})), Error);
}

TEST_CASE("is_separable_mod spec cases, including the char-p traps") {
  CHECK(is_separable_mod(IntPoly::from_ll({2, 1, 0, 0, 1}), 3));   // x^4+x+2 mod 3
  CHECK_FALSE(is_separable_mod(IntPoly::from_ll({0, 1, 0, 0, 1}), 3));  // x^4+x mod 3
  // the derivative-in-char-p traps: both are separable
  CHECK(is_separable_mod(IntPoly::from_ll({-1, 0, 0, 0, 1}), 5));  // x^4-1 mod 5
  CHECK(is_separable_mod(IntPoly::from_ll({0, -1, 0, 0, 0, 1}), 5));  // x^5-x mod 5
  // visible repeated factor
  IntPoly f = IntPoly::from_ll({-1, 1}) * IntPoly::from_ll({-1, 1}) *
              IntPoly::from_ll({1, 0, 1});
  CHECK_FALSE(is_separable_mod(f, 7));
  // degree drop counts as inseparable
  CHECK_FALSE(is_separable_mod(IntPoly::from_ll({1, 1, 3}), 3));
}

TEST_CASE("discriminant vs separability cross-check") {
  uint64_t state = 777;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return int64_t(state >> 36) - 100;
  };
  const uint64_t odd_primes[] = {3, 5, 7, 11, 13};
  for (int trial = 0; trial < 400; ++trial) {
    int d = 2 + int(uint64_t(next()) % 5);
    std::vector<Integer> c(size_t(d) + 1);
    for (auto& v : c) v = next();
    if (c.back() == 0) c.back() = 1;
    IntPoly f{std::move(c)};
    Integer disc = discriminant(f);
    if (disc == 0) continue;
    for (uint64_t ell : odd_primes) {
      if (f.leading() % ell == 0) continue;
      CHECK(is_separable_mod(f, ell) == (disc % ell != 0));
    }
  }
}

TEST_CASE("factor_mod spec cases") {
  // x^3 - 1 mod 7: roots 1, 2, 4
  auto fs = factor_mod(IntPoly::from_ll({-1, 0, 0, 1}), 7);
  REQUIRE(fs.size() == 3);
  for (const auto& fm : fs) {
    CHECK(fm.factor.degree() == 1);
    CHECK(fm.multiplicity == 1);
  }
  // x^3 - 1 mod 5: linear times irreducible quadratic
  fs = factor_mod(IntPoly::from_ll({-1, 0, 0, 1}), 5);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].factor.degree() == 1);
  CHECK(fs[1].factor.degree() == 2);
  CHECK(fs[0].multiplicity == 1);
  CHECK(fs[1].multiplicity == 1);
  // x^2 - 1 mod 2 = (x+1)^2
  fs = factor_mod(IntPoly::from_ll({-1, 0, 1}), 2);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].factor == fp::FpPoly{{1, 1}});
  CHECK(fs[0].multiplicity == 2);

  CHECK_THROWS_AS(factor_mod(IntPoly::from_ll({7, 14}), 7), Error);
}

TEST_CASE("factor_mod re-multiplies to the input") {
  uint64_t state = 31337;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  const uint64_t primes[] = {2, 3, 5, 7, 13, 31, 97};
  for (uint64_t ell : primes) {
    fp::PrimeField F(ell);
    for (int trial = 0; trial < 60; ++trial) {
      int d = 1 + int(next() % 8);
      std::vector<Integer> c(size_t(d) + 1);
      for (auto& v : c) v = Integer(next() % ell);
      if (c.back() == 0) c.back() = 1;
      IntPoly f{std::move(c)};
      auto fs = factor_mod(f, ell, /*seed=*/trial);
      fp::FpPoly back = oracle::remultiply(F, fs, F.reduce(f.leading()));
      CHECK(back == reduce_mod_prime(f, F));
      for (const auto& fm : fs) CHECK(fp::is_irreducible(F, fm.factor));
    }
  }
}

TEST_CASE("cyclotomic fixed values") {
  CHECK(cyclotomic(1) == IntPoly::from_ll({-1, 1}));
  CHECK(cyclotomic(6) == IntPoly::from_ll({1, -1, 1}));
  CHECK(cyclotomic(12) == IntPoly::from_ll({1, 0, -1, 0, 1}));
}

TEST_CASE("product of cyclotomics over divisors is x^n - 1") {
  for (uint64_t n = 1; n <= 64; ++n) {
    IntPoly prod = IntPoly::from_ll({1});
    for (const auto& d : divisors_of(Integer(n)))
      prod = prod * cyclotomic(d.convert_to<uint64_t>());
    CHECK(prod == IntPoly::monomial(n) - IntPoly::from_ll({1}));
  }
}

TEST_CASE("pn_poly displayed cases and cyclotomic factorization") {
  CHECK(pn_poly(5) == IntPoly::from_ll({1, 1, 1, 1, 1}));
  CHECK(pn_poly(6) == IntPoly::from_ll({1, 0, 1, 0, 1}));
  CHECK(pn_poly(3) == IntPoly::from_ll({1, 1, 1}));
  for (uint64_t n = 3; n <= 64; ++n) {
    IntPoly prod = IntPoly::from_ll({1});
    for (const auto& d : divisors_of(Integer(n)))
      if (d > 2) prod = prod * cyclotomic(d.convert_to<uint64_t>());
    CHECK(pn_poly(n) == prod);
    CHECK(pn_poly(n).degree() == int(n % 2 == 1 ? n - 1 : n - 2));
  }
}

TEST_CASE("find_irreducible fixed values and certification") {
  CHECK(fp::find_irreducible(2, 1) == fp::FpPoly{{0, 1}});           // x
  CHECK(fp::find_irreducible(3, 2) == fp::FpPoly{{1, 0, 1}});        // x^2 + 1
  CHECK(fp::find_irreducible(2, 3) == fp::FpPoly{{1, 1, 0, 1}});     // x^3 + x + 1
  for (uint64_t p : {2, 3, 5, 7, 13}) {
    fp::PrimeField F(p);
    for (uint32_t r = 1; r <= 5; ++r) {
      auto f = fp::find_irreducible(p, r);
      CHECK(f.degree() == int(r));
      CHECK(f.leading() == 1);
      CHECK(fp::is_irreducible(F, f));
    }
  }
}

TEST_CASE("divide_exact detects inexact division") {
  IntPoly num = IntPoly::from_ll({-1, 0, 1});
  CHECK(divide_exact(num, IntPoly::from_ll({-1, 1})) == IntPoly::from_ll({1, 1}));
  CHECK_FALSE(divide_exact(num, IntPoly::from_ll({1, 1, 1})).has_value());
  CHECK_FALSE(divide_exact(IntPoly::from_ll({1, 2}), IntPoly::from_ll({2})).has_value());
}

TEST_CASE("IntPoly string form") {
  CHECK(IntPoly::from_ll({400, 276, 0, 0, -251}).str() == "-251x^4 + 276x + 400");
  CHECK(IntPoly{}.str() == "0");
}
