// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Criterion 9 drives the CLI binary; set TAMECURVE_CLI to its path (ctest
// does this automatically).

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "census.hpp"
#include "certify.hpp"
#include "jsonio.hpp"
#include "test_util.hpp"

using namespace tame;

namespace {

struct CheckFailure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure{what};
}

// ---- criterion bodies -------------------------------------------------

// 1. prod_{d|n} Phi_d = x^n - 1 and pn_poly(n) = prod_{d|n, d>2} Phi_d,
//    3 <= n <= 200, exact.
void cyclotomic_identity() {
  for (uint64_t n = 3; n <= 200; ++n) {
    IntPoly full = IntPoly::from_ll({1});
    IntPoly high = IntPoly::from_ll({1});
    for (const auto& dI : divisors_of(Integer(n))) {
      uint64_t d = dI.convert_to<uint64_t>();
      full = full * cyclotomic(d);
      if (d > 2) high = high * cyclotomic(d);
    }
    expect(full == IntPoly::monomial(n) - IntPoly::from_ll({1}),
           "cyclotomic product mismatch at n = " + std::to_string(n));
    expect(pn_poly(n) == high, "pn_poly mismatch at n = " + std::to_string(n));
  }
}

// 2. splitting_data(d, p) matches the degree/multiplicity multiset of
//    factor_mod(Phi_d, p) for n <= 60, p <= 30, d | n, d > 2.
void splitting_law_oracle() {
  for (uint64_t n = 3; n <= 60; ++n)
    for (uint64_t p : primes_up_to(30))
      for (const auto& dI : endo_ring(Integer(n))) {
        uint64_t d = dI.convert_to<uint64_t>();
        auto sd = splitting_data(dI, Integer(p));
        auto fs = factor_mod(cyclotomic(d), p);
        expect(Integer(fs.size()) == sd.g_count,
               "factor count mismatch at (d, p) = (" + std::to_string(d) + ", " +
                   std::to_string(p) + ")");
        for (const auto& fm : fs) {
          expect(Integer(fm.factor.degree()) == sd.f,
                 "residue degree mismatch at (d, p) = (" + std::to_string(d) +
                     ", " + std::to_string(p) + ")");
          expect(Integer(fm.multiplicity) == sd.e,
                 "multiplicity mismatch at (d, p) = (" + std::to_string(d) +
                     ", " + std::to_string(p) + ")");
        }
      }
}

// 3. unit_group_order(n, p) coprime to p for p not dividing n,
//    n <= 100, p <= 50.
void tameness_engine() {
  namespace mp = boost::multiprecision;
  for (Integer n = 3; n <= 100; ++n)
    for (uint64_t p : primes_up_to(50)) {
      if (n % p == 0) continue;
      Integer order = unit_group_order(n, Integer(p));
      expect(mp::gcd(order, Integer(p)) == 1,
             "order not coprime to p at (n, p) = (" + n.str() + ", " +
                 std::to_string(p) + ")");
    }
}

// 4. assemble + certify PASS with every constraint replayed and disc != 0,
//    for 1 <= g <= 5, odd p <= 13, N <= 3.
void end_to_end_construction() {
  for (uint32_t g = 1; g <= 5; ++g)
    for (uint64_t p : {3, 5, 7, 11, 13})
      for (uint32_t N = 1; N <= 3; ++N) {
        CurveSpec spec = assemble(g, Integer(p), N);
        std::string tag = " at (g, p, N) = (" + std::to_string(g) + ", " +
                          std::to_string(p) + ", " + std::to_string(N) + ")";
        expect(spec.f.degree() == 2 * int(g) + 2, "degree" + tag);
        expect(discriminant(spec.f) != 0, "discriminant" + tag);
        for (const auto& c : spec.constraints)
          expect(spec.f.reduced_mod(c.modulus) == c.residue_poly,
                 "constraint replay" + tag);
        TamenessCertificate cert = certify(spec);
        expect(cert.overall, "certificate" + tag);
      }
}

// 5. Two-adic witnesses: f = h^2 + 4k exactly on certificate witnesses, the
//    residue class reproduced on constraint witnesses, the F_2 smoothness gcd
//    check everywhere; x^4 - 1 yields None.
void prime_two_witness_soundness() {
  for (uint32_t g = 1; g <= 5; ++g) {
    auto cons = mod2_class_for_genus(g);
    expect(cons.witness.has_value(), "missing witness at g = " + std::to_string(g));
    Integer m = Integer(1) << (2 * g + 2);
    IntPoly lifted = (cons.witness->h * cons.witness->h +
                      IntPoly::from_ll({4}) * cons.witness->k)
                         .reduced_mod(m);
    expect(lifted == cons.residue_poly,
           "witness does not reproduce the class at g = " + std::to_string(g));

    CurveSpec spec = assemble(g, 5, 1);
    auto fresh = good_reduction_two_check(spec.f, g);
    expect(fresh.has_value(), "no fresh witness at g = " + std::to_string(g));
    expect(spec.f == fresh->h * fresh->h + IntPoly::from_ll({4}) * fresh->k,
           "f != h^2 + 4k at g = " + std::to_string(g));
    // the F_2 gcd test is part of good_reduction_two_check; re-run it on the
    // witness pair explicitly
    fp::PrimeField F2(2);
    auto hbar = reduce_mod_prime(fresh->h, F2);
    auto kbar = reduce_mod_prime(fresh->k, F2);
    auto hp = fp::derivative(F2, hbar);
    auto kp = fp::derivative(F2, kbar);
    auto crit = fp::sub(F2, fp::mul(F2, fp::mul(F2, hp, hp), kbar),
                        fp::mul(F2, kp, kp));
    auto gg = fp::gcd(F2, hbar, crit);
    expect(gg.degree() == 0 && !gg.is_zero(),
           "F_2 smoothness gcd failed at g = " + std::to_string(g));
  }
  expect(!good_reduction_two_check(IntPoly::from_ll({-1, 0, 0, 0, 1}), 1).has_value(),
         "negative control x^4 - 1 produced a witness");
}

// 6. For y^2 = x^5 - 1 and ell in {3, 7, 11, 13}: the charpoly built from
//    N_1, N_2 predicts the enumerated N_3, N_4 exactly; functional equation
//    and Weil bounds hold (frobenius_charpoly enforces them internally).
void frobenius_oracle() {
  IntPoly f = IntPoly::from_ll({-1, 0, 0, 0, 0, 1});
  CensusOptions opts;
  opts.self_check = true;  // throws if predicted N_3, N_4 disagree
  for (uint64_t ell : {3, 7, 11, 13}) {
    auto rec = frobenius_charpoly(f, ell, 2, 7, opts);
    const auto& cp = rec.charpoly;
    expect(cp.degree() == 4, "charpoly degree at ell = " + std::to_string(ell));
    Integer ell2 = Integer(ell) * ell;
    expect(cp.coeff(0) == ell2 * cp.coeff(4) && cp.coeff(1) == Integer(ell) * cp.coeff(3),
           "functional equation at ell = " + std::to_string(ell));
  }
}

// 7. CM signatures: a_ell = 0 for good ell = 2 mod 3 (y^2 = x^3 - 1) and for
//    ell = 3 mod 4 (y^2 = x^4 - 1), ell <= 200.
void cm_signatures() {
  IntPoly c3 = IntPoly::from_ll({-1, 0, 0, 1});
  IntPoly c4 = IntPoly::from_ll({-1, 0, 0, 0, 1});
  for (uint64_t ell : primes_up_to(200)) {
    if (ell > 3 && ell % 3 == 2) {
      auto rec = frobenius_charpoly(c3, ell, 1, 5);
      expect(rec.charpoly.coeff(1) == 0,
             "nonzero trace on x^3 - 1 at ell = " + std::to_string(ell));
    }
    if (ell > 2 && ell % 4 == 3) {
      auto rec = frobenius_charpoly(c4, ell, 1, 5);
      expect(rec.charpoly.coeff(1) == 0,
             "nonzero trace on x^4 - 1 at ell = " + std::to_string(ell));
    }
  }
}

// 8. Census of the constructed (g=1, p=5) curve up to 500: multipliers hit
//    {1,2,3,4}, constant term of each charpoly mod 5 is ell mod 5, and the
//    verdict reads ConsistentWithFullImage (never a proof).
void image_evidence_desk_scale() {
  CurveSpec spec = assemble(1, 5, 2);
  auto census = image_evidence(spec, 500, {});
  expect(census.evidence.multiplier_classes_hit == std::vector<uint64_t>{1, 2, 3, 4},
         "multiplier classes not fully covered");
  for (const auto& rec : census.records)
    expect(rec.charpoly_mod_p[0] == rec.ell % 5,
           "constant term mod 5 wrong at ell = " + std::to_string(rec.ell));
  expect(census.evidence.verdict == ImageVerdict::ConsistentWithFullImage,
         std::string("verdict is ") + image_verdict_name(census.evidence.verdict));
}

// 9. Determinism: every CLI command run twice produces byte-identical output,
//    and construct piped into certify reproduces the identical certificate.
std::string run_cli(const std::string& cli, const std::string& args, int* exit_code) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  expect(pipe != nullptr, "popen failed for: " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int rc = pclose(pipe);
  if (exit_code) *exit_code = WEXITSTATUS(rc);
  return out;
}

void cli_determinism() {
  const char* cli_env = std::getenv("TAMECURVE_CLI");
  expect(cli_env != nullptr && *cli_env,
         "TAMECURVE_CLI not set; point it at the tamecurve binary");
  std::string cli(cli_env);

  const std::vector<std::string> commands = {
      "construct --genus 1 --prime 5 --kisin-depth 2",
      "construct --genus 2 --prime 7 --format pretty",
      "endo --n 6 --prime 7",
      "pn-check --n-max 50",
      "frobenius --poly -1,0,0,1 --prime 7 --ell-bound 100",
  };
  for (const auto& args : commands) {
    int rc1 = 0, rc2 = 0;
    std::string a = run_cli(cli, args, &rc1);
    std::string b = run_cli(cli, args, &rc2);
    expect(!a.empty(), "no output from: " + args);
    expect(a == b, "outputs differ between runs of: " + args);
    expect(rc1 == rc2, "exit codes differ between runs of: " + args);
  }

  // round trip: construct output piped into certify gives the same bytes
  int rc = 0;
  std::string cert = run_cli(cli, "construct --genus 1 --prime 5 --kisin-depth 2", &rc);
  expect(rc == 0, "construct exited nonzero");
  std::string path = "/tmp/tamecurve_acceptance_curve.json";
  {
    FILE* f = fopen(path.c_str(), "wb");
    expect(f != nullptr, "cannot write temp file");
    fwrite(cert.data(), 1, cert.size(), f);
    fclose(f);
  }
  std::string recert = run_cli(cli, "certify --in " + path, &rc);
  expect(rc == 0, "certify exited nonzero");
  expect(cert == recert, "certify output differs from construct output");
  std::remove(path.c_str());

  // a tampered curve must fail with exit code 2
  const std::string needle = "\"coeffs\":[\"1\",\"0\",\"0\",\"0\",\"1\"]";
  auto pos = cert.find(needle);
  expect(pos != std::string::npos, "expected residue not found in certificate");
  {
    std::string tampered = cert;
    tampered.replace(pos, needle.size(), "\"coeffs\":[\"2\",\"0\",\"0\",\"0\",\"1\"]");
    FILE* f = fopen(path.c_str(), "wb");
    fwrite(tampered.data(), 1, tampered.size(), f);
    fclose(f);
    run_cli(cli, "certify --in " + path, &rc);
    expect(rc == 2, "tampered certificate did not exit 2");
    std::remove(path.c_str());
  }
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    const char* name;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria = {
      {"1 cyclotomic identity suite (n <= 200)", cyclotomic_identity},
      {"2 splitting-law oracle (n <= 60, p <= 30)", splitting_law_oracle},
      {"3 tameness engine (n <= 100, p <= 50)", tameness_engine},
      {"4 end-to-end construction (g <= 5, p <= 13, N <= 3)", end_to_end_construction},
      {"5 prime-2 witness soundness", prime_two_witness_soundness},
      {"6 Frobenius oracle on y^2 = x^5 - 1", frobenius_oracle},
      {"7 CM signatures (ell <= 200)", cm_signatures},
      {"8 image evidence at desk scale (p = 5, ell <= 500)", image_evidence_desk_scale},
      {"9 CLI determinism (byte-identical reruns)", cli_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    std::string failure;
    try {
      c.body();
    } catch (const CheckFailure& f) {
      failure = f.what;
    } catch (const std::exception& e) {
      failure = e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    char line[256];
    std::snprintf(line, sizeof(line), "criterion %-55s %s  (%.2fs)", c.name,
                  failure.empty() ? "PASS" : "FAIL", secs);
    std::cout << line << "\n";
    if (!failure.empty()) {
      std::cout << "    " << failure << "\n";
      ++failures;
    }
  }
  std::cout << (criteria.size() - size_t(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
