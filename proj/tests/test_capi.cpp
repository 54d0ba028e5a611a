#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "tamecurve.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { tc_string_free(p); }
  std::string get() const { return p ? std::string(p) : std::string(); }
};

}  // namespace

TEST_CASE("construct -> json -> parse -> certify round trip") {
  tc_curve* curve = nullptr;
  REQUIRE(tc_construct(1, "5", 2, &curve) == TC_OK);
  Str json;
  REQUIRE(tc_curve_to_json(curve, 0, &json.p) == TC_OK);
  CHECK(json.get().find("\"genus\":\"1\"") != std::string::npos);

  tc_curve* back = nullptr;
  REQUIRE(tc_curve_from_json(json.p, &back) == TC_OK);
  Str json2;
  REQUIRE(tc_curve_to_json(back, 0, &json2.p) == TC_OK);
  CHECK(json.get() == json2.get());

  tc_certificate* cert = nullptr;
  REQUIRE(tc_certify(back, &cert) == TC_OK);
  CHECK(tc_certificate_overall(cert) == 1);
  Str cert_json;
  REQUIRE(tc_certificate_to_json(cert, 0, &cert_json.p) == TC_OK);
  CHECK(cert_json.get().find("\"overall\":\"PASS\"") != std::string::npos);

  // certifying the curve parsed back out of the certificate reproduces it
  tc_curve* from_cert = nullptr;
  REQUIRE(tc_curve_from_json(cert_json.p, &from_cert) == TC_OK);
  tc_certificate* cert2 = nullptr;
  REQUIRE(tc_certify(from_cert, &cert2) == TC_OK);
  Str cert_json2;
  REQUIRE(tc_certificate_to_json(cert2, 0, &cert_json2.p) == TC_OK);
  CHECK(cert_json.get() == cert_json2.get());

  tc_certificate_free(cert2);
  tc_curve_free(from_cert);
  tc_certificate_free(cert);
  tc_curve_free(back);
  tc_curve_free(curve);
}

TEST_CASE("error codes and last-error messages") {
  tc_curve* curve = nullptr;
  CHECK(tc_construct(1, "2", 1, &curve) == TC_ERROR_UNSUPPORTED_PRIME);
  CHECK(std::strlen(tc_last_error()) > 0);
  CHECK(tc_construct(1, "15", 1, &curve) == TC_ERROR_INVALID_ARGUMENT);
  CHECK(tc_construct(1, "abc", 1, &curve) == TC_ERROR_PARSE);
  CHECK(tc_curve_from_json("{not json", &curve) == TC_ERROR_PARSE);
  CHECK(tc_curve_from_json("{\"genus\":\"1\"}", &curve) == TC_ERROR_PARSE);
  CHECK(tc_construct(1, "5", 1, nullptr) == TC_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("endo structure JSON") {
  Str json;
  REQUIRE(tc_endo_structure("6", "7", 0, &json.p) == TC_OK);
  CHECK(json.get() ==
        "{\"n\":\"6\",\"genus\":\"2\",\"factors\":[{\"d\":\"3\",\"e\":\"1\",\"f\":"
        "\"1\",\"g\":\"2\"},{\"d\":\"6\",\"e\":\"1\",\"f\":\"1\",\"g\":\"2\"}],"
        "\"unit_group_order\":\"1296\",\"p_unramified\":true}");
  Str ramified;
  REQUIRE(tc_endo_structure("5", "5", 0, &ramified.p) == TC_OK);
  CHECK(ramified.get().find("\"p_unramified\":false") != std::string::npos);
  char* out = nullptr;
  CHECK(tc_endo_structure("2", "7", 0, &out) == TC_ERROR_GENUS_ZERO);
}

TEST_CASE("census over the C API") {
  tc_census* census = nullptr;
  REQUIRE(tc_frobenius_census_poly("-1,0,0,1", "7", 200, 0, 0, 0, &census) == TC_OK);
  Str jsonl;
  REQUIRE(tc_census_format(census, 0, &jsonl.p) == TC_OK);
  std::string text = jsonl.get();
  CHECK(text.find("\"ell\":\"5\"") != std::string::npos);
  CHECK(text.find("\"verdict\"") != std::string::npos);
  CHECK(std::string(tc_census_verdict(census)).size() > 0);
  tc_census_free(census);

  tc_census* tiny = nullptr;
  CHECK(tc_frobenius_census_poly("-1,0,0,1", "7", 3, 0, 0, 0, &tiny) ==
        TC_ERROR_INSUFFICIENT_DATA);
}

TEST_CASE("pn-check and the split-torsion helper") {
  Str json;
  int all_ok = 0;
  REQUIRE(tc_pn_check(3, 40, 0, &all_ok, &json.p) == TC_OK);
  CHECK(all_ok == 1);
  CHECK(json.get().find("\"all_ok\":true") != std::string::npos);

  Str poly;
  REQUIRE(tc_two_torsion_split_curve(1, &poly.p) == TC_OK);
  CHECK(poly.get() == "{\"coeffs\":[\"0\",\"2\",\"-3\",\"1\"]}");
}
