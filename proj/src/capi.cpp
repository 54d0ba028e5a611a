#include "tamecurve.h"

#include <cstring>
#include <string>

#include "census.hpp"
#include "certify.hpp"
#include "endo.hpp"
#include "jsonio.hpp"

using namespace tame;

struct tc_curve {
  CurveSpec spec;
};
struct tc_certificate {
  TamenessCertificate cert;
};
struct tc_census {
  Census census;
};

namespace {

thread_local std::string g_last_error;

tc_status map_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return TC_ERROR_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return TC_ERROR_PARSE;
    case ErrorCode::UnsupportedPrime: return TC_ERROR_UNSUPPORTED_PRIME;
    case ErrorCode::ConflictingConstraints: return TC_ERROR_CONFLICTING_CONSTRAINTS;
    case ErrorCode::NonCoprimeModuli: return TC_ERROR_NON_COPRIME_MODULI;
    case ErrorCode::NotAUnit: return TC_ERROR_NOT_A_UNIT;
    case ErrorCode::ZeroPolynomial: return TC_ERROR_ZERO_POLYNOMIAL;
    case ErrorCode::DegreeTooSmall: return TC_ERROR_DEGREE_TOO_SMALL;
    case ErrorCode::GenusZero: return TC_ERROR_GENUS_ZERO;
    case ErrorCode::RamifiedCase: return TC_ERROR_RAMIFIED_CASE;
    case ErrorCode::WrongPrime: return TC_ERROR_WRONG_PRIME;
    case ErrorCode::IncompleteSpec: return TC_ERROR_INCOMPLETE_SPEC;
    case ErrorCode::ConstructionFailed: return TC_ERROR_CONSTRUCTION_FAILED;
    case ErrorCode::BadReduction: return TC_ERROR_BAD_REDUCTION;
    case ErrorCode::BudgetExceeded: return TC_ERROR_BUDGET_EXCEEDED;
    case ErrorCode::InsufficientData: return TC_ERROR_INSUFFICIENT_DATA;
    case ErrorCode::Internal: return TC_ERROR_INTERNAL;
  }
  return TC_ERROR_INTERNAL;
}

template <typename Fn>
tc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TC_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TC_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Integer parse_prime_arg(const char* prime) {
  if (!prime) fail(ErrorCode::InvalidArgument, "null prime argument");
  std::string s(prime);
  if (s.empty()) fail(ErrorCode::InvalidArgument, "empty prime argument");
  for (char ch : s)
    if (ch < '0' || ch > '9')
      fail(ErrorCode::ParseError, "prime must be a decimal string");
  return Integer(s);
}

}  // namespace

extern "C" {

const char* tc_version(void) { return "tamecurve 1.0.0"; }

const char* tc_status_name(tc_status s) {
  switch (s) {
    case TC_OK: return "OK";
    case TC_ERROR_INVALID_ARGUMENT: return "InvalidArgument";
    case TC_ERROR_PARSE: return "ParseError";
    case TC_ERROR_UNSUPPORTED_PRIME: return "UnsupportedPrime";
    case TC_ERROR_CONFLICTING_CONSTRAINTS: return "ConflictingConstraints";
    case TC_ERROR_NON_COPRIME_MODULI: return "NonCoprimeModuli";
    case TC_ERROR_NOT_A_UNIT: return "NotAUnit";
    case TC_ERROR_ZERO_POLYNOMIAL: return "ZeroPolynomial";
    case TC_ERROR_DEGREE_TOO_SMALL: return "DegreeTooSmall";
    case TC_ERROR_GENUS_ZERO: return "GenusZero";
    case TC_ERROR_RAMIFIED_CASE: return "RamifiedCase";
    case TC_ERROR_WRONG_PRIME: return "WrongPrime";
    case TC_ERROR_INCOMPLETE_SPEC: return "IncompleteSpec";
    case TC_ERROR_CONSTRUCTION_FAILED: return "ConstructionFailed";
    case TC_ERROR_BAD_REDUCTION: return "BadReduction";
    case TC_ERROR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case TC_ERROR_INSUFFICIENT_DATA: return "InsufficientData";
    case TC_ERROR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* tc_last_error(void) { return g_last_error.c_str(); }

void tc_string_free(char* s) { delete[] s; }

tc_status tc_construct(uint32_t genus, const char* prime, uint32_t kisin_depth,
                       tc_curve** out) {
  return guarded([&] {
    if (!out) fail(ErrorCode::InvalidArgument, "null output pointer");
    Integer p = parse_prime_arg(prime);
    uint32_t depth = kisin_depth ? kisin_depth : 2 * genus + 2;
    auto* handle = new tc_curve{assemble(genus, p, depth)};
    *out = handle;
  });
}

tc_status tc_curve_from_json(const char* json, tc_curve** out) {
  return guarded([&] {
    if (!out || !json) fail(ErrorCode::InvalidArgument, "null argument");
    *out = new tc_curve{io::curve_from_string(json)};
  });
}

tc_status tc_curve_to_json(const tc_curve* curve, int pretty, char** out) {
  return guarded([&] {
    if (!out || !curve) fail(ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(io::dump(io::curve_to_json(curve->spec), pretty != 0));
  });
}

void tc_curve_free(tc_curve* curve) { delete curve; }

tc_status tc_certify(const tc_curve* curve, tc_certificate** out) {
  return guarded([&] {
    if (!out || !curve) fail(ErrorCode::InvalidArgument, "null argument");
    *out = new tc_certificate{certify(curve->spec)};
  });
}

int tc_certificate_overall(const tc_certificate* cert) {
  return cert && cert->cert.overall ? 1 : 0;
}

tc_status tc_certificate_to_json(const tc_certificate* cert, int pretty, char** out) {
  return guarded([&] {
    if (!out || !cert) fail(ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(io::dump(io::certificate_to_json(cert->cert), pretty != 0));
  });
}

void tc_certificate_free(tc_certificate* cert) { delete cert; }

tc_status tc_endo_structure(const char* n, const char* prime, int pretty,
                            char** out_json) {
  return guarded([&] {
    if (!out_json || !n) fail(ErrorCode::InvalidArgument, "null argument");
    std::string ns(n);
    for (char ch : ns)
      if (ch < '0' || ch > '9') fail(ErrorCode::ParseError, "n must be a decimal string");
    if (ns.empty()) fail(ErrorCode::ParseError, "empty n");
    Integer p = parse_prime_arg(prime);
    if (!is_prime(p)) fail(ErrorCode::InvalidArgument, p.str() + " is not prime");
    EndoStructure es = endo_structure(Integer(ns), p);
    *out_json = dup_string(io::dump(io::endo_to_json(es), pretty != 0));
  });
}

namespace {

tc_status census_impl(const IntPoly& f, uint32_t genus, const Integer& p,
                      uint64_t ell_bound, uint64_t budget, uint32_t workers,
                      uint64_t seed, tc_census** out) {
  return guarded([&] {
    if (!out) fail(ErrorCode::InvalidArgument, "null output pointer");
    CensusOptions opts;
    if (budget) opts.budget = budget;
    opts.workers = workers;
    opts.seed = seed;
    *out = new tc_census{image_evidence(f, genus, p, ell_bound, opts)};
  });
}

}  // namespace

tc_status tc_frobenius_census(const tc_curve* curve, uint64_t ell_bound,
                              uint64_t budget, uint32_t workers, uint64_t seed,
                              tc_census** out) {
  if (!curve) {
    g_last_error = "null curve";
    return TC_ERROR_INVALID_ARGUMENT;
  }
  return census_impl(curve->spec.f, curve->spec.genus, curve->spec.p, ell_bound,
                     budget, workers, seed, out);
}

tc_status tc_frobenius_census_poly(const char* poly, const char* prime,
                                   uint64_t ell_bound, uint64_t budget,
                                   uint32_t workers, uint64_t seed,
                                   tc_census** out) {
  tc_status pre = guarded([&] {
    if (!poly) fail(ErrorCode::InvalidArgument, "null polynomial");
  });
  if (pre != TC_OK) return pre;
  try {
    IntPoly f = io::poly_from_text(poly);
    Integer p = parse_prime_arg(prime);
    if (!is_prime(p)) fail(ErrorCode::InvalidArgument, p.str() + " is not prime");
    return census_impl(f, genus_of(f), p, ell_bound, budget, workers, seed, out);
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TC_ERROR_INTERNAL;
  }
}

tc_status tc_census_format(const tc_census* census, int pretty, char** out) {
  return guarded([&] {
    if (!out || !census) fail(ErrorCode::InvalidArgument, "null argument");
    *out = dup_string(pretty ? io::census_to_pretty(census->census)
                             : io::census_to_jsonl(census->census));
  });
}

const char* tc_census_verdict(const tc_census* census) {
  if (!census) return "";
  return image_verdict_name(census->census.evidence.verdict);
}

void tc_census_free(tc_census* census) { delete census; }

tc_status tc_pn_check(uint64_t n_min, uint64_t n_max, int pretty, int* all_ok,
                      char** out_json) {
  return guarded([&] {
    if (!out_json || !all_ok) fail(ErrorCode::InvalidArgument, "null argument");
    if (n_min < 3 || n_max < n_min)
      fail(ErrorCode::InvalidArgument, "need 3 <= n_min <= n_max");
    io::Json results = io::Json::array();
    bool ok = true;
    for (uint64_t n = n_min; n <= n_max; ++n) {
      bool good = verify_pn_via_eigenvalues(n);
      ok = ok && good;
      io::Json row;
      row["n"] = std::to_string(n);
      row["ok"] = good;
      results.push_back(std::move(row));
    }
    io::Json j;
    j["n_min"] = std::to_string(n_min);
    j["n_max"] = std::to_string(n_max);
    j["results"] = std::move(results);
    j["all_ok"] = ok;
    *all_ok = ok ? 1 : 0;
    *out_json = dup_string(io::dump(j, pretty != 0));
  });
}

tc_status tc_two_torsion_split_curve(uint32_t genus, char** out_json) {
  return guarded([&] {
    if (!out_json) fail(ErrorCode::InvalidArgument, "null argument");
    *out_json =
        dup_string(io::dump(io::poly_to_json(two_torsion_split_curve(genus)), false));
  });
}

}  // extern "C"
