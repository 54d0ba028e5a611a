// Command-line front end for libtamecurve.  Talks to the core exclusively
// through the C API; all state moves as JSON strings.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tamecurve.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;

struct Output {
  std::string path;  // empty = stdout
  int write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << "\n";
      return kExitOk;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot open " << path << " for writing\n";
      return kExitError;
    }
    os << text;
    if (!text.empty() && text.back() != '\n') os << "\n";
    return kExitOk;
  }
};

int report(tc_status st, const char* what) {
  std::cerr << "error: " << what << ": " << tc_status_name(st);
  const char* msg = tc_last_error();
  if (msg && *msg) std::cerr << " (" << msg << ")";
  std::cerr << "\n";
  return kExitError;
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream is(path, std::ios::binary);
  if (!is) return false;
  std::ostringstream ss;
  ss << is.rdbuf();
  out = ss.str();
  return true;
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { tc_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tamecurve: curves over Q with tame mod-p torsion fields"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "json (compact) or pretty")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();
  app.add_option("-o,--out", out_path, "write output to a file instead of stdout");

  // construct
  auto* construct = app.add_subcommand(
      "construct", "assemble a curve for (genus, prime) and certify it");
  uint32_t genus = 1;
  std::string prime;
  uint32_t kisin_depth = 0;
  uint64_t seed = 0;
  construct->add_option("--genus", genus, "target genus (>= 1)")->required();
  construct->add_option("--prime", prime, "odd prime p, decimal string")->required();
  construct->add_option("--kisin-depth", kisin_depth,
                        "congruence depth N at p (default 2g+2)");
  construct->add_option("--seed", seed, "PRNG seed for equal-degree splitting");

  // endo
  auto* endo = app.add_subcommand(
      "endo", "endomorphism structure of Jac(y^2 = x^n - a) at a prime");
  std::string endo_n;
  std::string endo_prime;
  endo->add_option("--n", endo_n, "exponent n >= 3, decimal string")->required();
  endo->add_option("--prime", endo_prime, "prime p, decimal string")->required();

  // certify
  auto* certify = app.add_subcommand(
      "certify", "re-certify a stored curve (accepts a curve or a certificate)");
  std::string certify_in;
  certify->add_option("--in", certify_in, "input JSON path, or - for stdin")
      ->required();

  // frobenius
  auto* frobenius = app.add_subcommand(
      "frobenius", "Frobenius census: JSON lines of records, then the evidence");
  std::string frob_in;
  std::string frob_poly;
  std::string frob_prime;
  uint64_t ell_bound = 0;
  uint64_t budget = 0;
  uint64_t frob_seed = 0;
  frobenius->add_option("--in", frob_in, "curve or certificate JSON path, or -");
  frobenius->add_option("--poly", frob_poly,
                        "bare polynomial instead of --in: \"c0,c1,...\"");
  frobenius->add_option("--prime", frob_prime, "p for --poly, decimal string");
  frobenius->add_option("--ell-bound", ell_bound, "census over good ell <= bound")
      ->required();
  frobenius->add_option("--budget", budget, "enumeration cap on ell^r (default 1e7)");
  frobenius->add_option("--seed", frob_seed, "PRNG seed for equal-degree splitting");

  // pn-check
  auto* pncheck = app.add_subcommand(
      "pn-check", "verify the endomorphism polynomial against its eigenvalue orders");
  uint64_t n_min = 3;
  uint64_t n_max = 0;
  pncheck->add_option("--n-min", n_min, "lower end of the range (default 3)");
  pncheck->add_option("--n-max", n_max, "upper end of the range")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  const int pretty = (format == "pretty") ? 1 : 0;
  Output out{out_path};

  if (construct->parsed()) {
    tc_curve* curve = nullptr;
    tc_status st = tc_construct(genus, prime.c_str(), kisin_depth, &curve);
    if (st != TC_OK) return report(st, "construct");
    tc_certificate* cert = nullptr;
    st = tc_certify(curve, &cert);
    if (st != TC_OK) {
      tc_curve_free(curve);
      return report(st, "certify");
    }
    OwnedString json;
    st = tc_certificate_to_json(cert, pretty, &json.ptr);
    int overall = tc_certificate_overall(cert);
    tc_certificate_free(cert);
    tc_curve_free(curve);
    if (st != TC_OK) return report(st, "serialize");
    int rc = out.write(json.str());
    if (rc != kExitOk) return rc;
    return overall ? kExitOk : kExitFail;
  }

  if (endo->parsed()) {
    OwnedString json;
    tc_status st = tc_endo_structure(endo_n.c_str(), endo_prime.c_str(), pretty, &json.ptr);
    if (st != TC_OK) return report(st, "endo");
    return out.write(json.str());
  }

  if (certify->parsed()) {
    std::string text;
    if (!read_input(certify_in, text)) {
      std::cerr << "error: cannot read " << certify_in << "\n";
      return kExitError;
    }
    tc_curve* curve = nullptr;
    tc_status st = tc_curve_from_json(text.c_str(), &curve);
    if (st != TC_OK) return report(st, "parse curve");
    tc_certificate* cert = nullptr;
    st = tc_certify(curve, &cert);
    if (st != TC_OK) {
      tc_curve_free(curve);
      return report(st, "certify");
    }
    OwnedString json;
    st = tc_certificate_to_json(cert, pretty, &json.ptr);
    int overall = tc_certificate_overall(cert);
    tc_certificate_free(cert);
    tc_curve_free(curve);
    if (st != TC_OK) return report(st, "serialize");
    int rc = out.write(json.str());
    if (rc != kExitOk) return rc;
    if (!overall) {
      std::cerr << "certificate FAILED; see the entries above\n";
      return kExitFail;
    }
    return kExitOk;
  }

  if (frobenius->parsed()) {
    if (frob_in.empty() == frob_poly.empty()) {
      std::cerr << "error: give exactly one of --in or --poly\n";
      return kExitError;
    }
    tc_census* census = nullptr;
    tc_status st;
    if (!frob_in.empty()) {
      std::string text;
      if (!read_input(frob_in, text)) {
        std::cerr << "error: cannot read " << frob_in << "\n";
        return kExitError;
      }
      tc_curve* curve = nullptr;
      st = tc_curve_from_json(text.c_str(), &curve);
      if (st != TC_OK) return report(st, "parse curve");
      st = tc_frobenius_census(curve, ell_bound, budget, 0, frob_seed, &census);
      tc_curve_free(curve);
    } else {
      if (frob_prime.empty()) {
        std::cerr << "error: --poly requires --prime\n";
        return kExitError;
      }
      st = tc_frobenius_census_poly(frob_poly.c_str(), frob_prime.c_str(),
                                    ell_bound, budget, 0, frob_seed, &census);
    }
    if (st != TC_OK) return report(st, "frobenius");
    OwnedString text;
    st = tc_census_format(census, pretty, &text.ptr);
    std::string verdict = tc_census_verdict(census);
    tc_census_free(census);
    if (st != TC_OK) return report(st, "serialize");
    int rc = out.write(text.str());
    if (rc != kExitOk) return rc;
    return verdict == "ObstructionFound" ? kExitFail : kExitOk;
  }

  if (pncheck->parsed()) {
    OwnedString json;
    int all_ok = 0;
    tc_status st = tc_pn_check(n_min, n_max, pretty, &all_ok, &json.ptr);
    if (st != TC_OK) return report(st, "pn-check");
    int rc = out.write(json.str());
    if (rc != kExitOk) return rc;
    return all_ok ? kExitOk : kExitFail;
  }

  return kExitError;
}
