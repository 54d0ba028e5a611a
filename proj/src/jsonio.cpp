#include "jsonio.hpp"

#include <sstream>

namespace tame::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  fail(ErrorCode::ParseError, what);
}

bool decimal_string(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string fraction_str(const std::pair<Integer, Integer>& f) {
  return f.first.str() + "/" + f.second.str();
}

}  // namespace

std::string dump(const Json& j, bool pretty) {
  return pretty ? j.dump(2) : j.dump();
}

Json integer_to_json(const Integer& v) { return Json(v.str()); }

Integer integer_from_json(const Json& j) {
  if (!j.is_string()) parse_fail("integers must be decimal strings");
  const std::string s = j.get<std::string>();
  if (!decimal_string(s)) parse_fail("not a decimal integer: \"" + s + "\"");
  return Integer(s);
}

Json poly_to_json(const IntPoly& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.str());
  Json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

IntPoly poly_from_json(const Json& j) {
  const Json& coeffs = require(j, "coeffs");
  if (!coeffs.is_array()) parse_fail("\"coeffs\" must be an array");
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.push_back(integer_from_json(v));
  return IntPoly(std::move(c));
}

namespace {

Json fppoly_to_json(const std::vector<uint64_t>& coeffs) {
  Json arr = Json::array();
  for (uint64_t v : coeffs) arr.push_back(std::to_string(v));
  Json j;
  j["coeffs"] = std::move(arr);
  return j;
}

Json constraint_to_json(const CongruenceConstraint& c) {
  Json j;
  j["prime"] = c.prime.str();
  j["modulus"] = c.modulus.str();
  j["residue_poly"] = poly_to_json(c.residue_poly);
  j["purpose"] = constraint_purpose_name(c.purpose);
  if (c.witness) {
    Json w;
    w["h"] = poly_to_json(c.witness->h);
    w["k"] = poly_to_json(c.witness->k);
    j["witness"] = std::move(w);
  }
  return j;
}

CongruenceConstraint constraint_from_json(const Json& j) {
  CongruenceConstraint c;
  c.prime = integer_from_json(require(j, "prime"));
  c.modulus = integer_from_json(require(j, "modulus"));
  c.residue_poly = poly_from_json(require(j, "residue_poly"));
  const std::string purpose = require(j, "purpose").get<std::string>();
  if (purpose == "SeparabilityAtOddEll")
    c.purpose = ConstraintPurpose::SeparabilityAtOddEll;
  else if (purpose == "GoodReductionAtTwo")
    c.purpose = ConstraintPurpose::GoodReductionAtTwo;
  else if (purpose == "CMShapeAtP")
    c.purpose = ConstraintPurpose::CMShapeAtP;
  else
    parse_fail("unknown constraint purpose \"" + purpose + "\"");
  if (j.contains("witness") && !j.at("witness").is_null()) {
    const Json& w = j.at("witness");
    c.witness = TwoAdicWitness{poly_from_json(require(w, "h")),
                               poly_from_json(require(w, "k"))};
  }
  return c;
}

}  // namespace

Json curve_to_json(const CurveSpec& c) {
  Json j;
  j["genus"] = std::to_string(c.genus);
  j["p"] = c.p.str();
  j["n"] = c.n.str();
  j["kisin_depth"] = std::to_string(c.kisin_depth);
  j["f"] = poly_to_json(c.f);
  Json cons = Json::array();
  for (const auto& cc : c.constraints) cons.push_back(constraint_to_json(cc));
  j["constraints"] = std::move(cons);
  j["assembled_modulus"] = c.assembled_modulus.str();
  return j;
}

CurveSpec curve_from_json(const Json& j) {
  CurveSpec c;
  Integer genus = integer_from_json(require(j, "genus"));
  if (genus < 1 || genus > 1'000'000) parse_fail("genus out of range");
  c.genus = genus.convert_to<uint32_t>();
  c.p = integer_from_json(require(j, "p"));
  c.n = integer_from_json(require(j, "n"));
  Integer depth = integer_from_json(require(j, "kisin_depth"));
  if (depth < 1 || depth > 1'000'000) parse_fail("kisin_depth out of range");
  c.kisin_depth = depth.convert_to<uint32_t>();
  c.f = poly_from_json(require(j, "f"));
  const Json& cons = require(j, "constraints");
  if (!cons.is_array()) parse_fail("\"constraints\" must be an array");
  for (const auto& cc : cons) c.constraints.push_back(constraint_from_json(cc));
  c.assembled_modulus = integer_from_json(require(j, "assembled_modulus"));
  return c;
}

CurveSpec curve_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  // Accept either a bare CurveSpec or a certificate wrapping one.
  if (j.is_object() && j.contains("curve")) return curve_from_json(j.at("curve"));
  return curve_from_json(j);
}

namespace {

Json witness_to_json(const EntryWitness& w) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return Json(nullptr);
        } else if constexpr (std::is_same_v<T, OddReductionWitness>) {
          Json j;
          j["disc_valuation"] = std::to_string(v.disc_valuation);
          j["lc_valuation"] = std::to_string(v.lc_valuation);
          return j;
        } else if constexpr (std::is_same_v<T, TwoAdicModelWitness>) {
          Json j;
          j["h"] = poly_to_json(v.h);
          j["k"] = poly_to_json(v.k);
          return j;
        } else if constexpr (std::is_same_v<T, RangeBoundWitness>) {
          Json j;
          j["bound"] = std::to_string(v.bound);
          return j;
        } else {
          Json j;
          j["n"] = v.n.str();
          j["unit_group_order"] = v.unit_group_order.str();
          j["order_gcd_p"] = v.order_gcd_p.str();
          return j;
        }
      },
      w);
}

Json entry_to_json(const CertificateEntry& e) {
  Json j;
  j["scope"] = e.scope;
  j["verdict"] = e.pass ? "PASS" : "FAIL";
  j["justification"] = justification_name(e.justification);
  j["witness"] = witness_to_json(e.witness);
  j["kisin_conditional"] = e.kisin_conditional;
  if (!e.detail.empty()) j["detail"] = e.detail;
  return j;
}

}  // namespace

Json certificate_to_json(const TamenessCertificate& cert) {
  Json j;
  j["curve"] = curve_to_json(cert.curve);
  Json entries = Json::array();
  for (const auto& e : cert.entries) entries.push_back(entry_to_json(e));
  j["entries"] = std::move(entries);
  j["overall"] = cert.overall ? "PASS" : "FAIL";
  return j;
}

Json endo_to_json(const EndoStructure& e) {
  Json j;
  j["n"] = e.n.str();
  j["genus"] = e.genus.str();
  Json factors = Json::array();
  for (const auto& sd : e.factors) {
    Json f;
    f["d"] = sd.d.str();
    f["e"] = sd.e.str();
    f["f"] = sd.f.str();
    f["g"] = sd.g_count.str();
    factors.push_back(std::move(f));
  }
  j["factors"] = std::move(factors);
  j["unit_group_order"] = e.unit_group_order.str();
  j["p_unramified"] = e.p_unramified;
  return j;
}

Json record_to_json(const FrobeniusRecord& r) {
  Json j;
  j["ell"] = std::to_string(r.ell);
  Json counts = Json::array();
  for (const auto& n : r.counts) counts.push_back(n.str());
  j["counts"] = std::move(counts);
  j["charpoly"] = poly_to_json(r.charpoly);
  j["charpoly_mod_p"] = fppoly_to_json(r.charpoly_mod_p);
  j["multiplier"] = std::to_string(r.multiplier);
  j["irreducible_mod_p"] = r.irreducible_mod_p;
  return j;
}

Json evidence_to_json(const ImageEvidence& e) {
  Json j;
  j["p"] = e.p.str();
  j["sampled"] = std::to_string(e.sampled);
  Json classes = Json::array();
  for (uint64_t c : e.multiplier_classes_hit) classes.push_back(std::to_string(c));
  j["multiplier_classes_hit"] = std::move(classes);
  j["irreducible_fraction"] = fraction_str(e.irreducible_fraction);
  j["zero_trace_fraction"] = fraction_str(e.zero_trace_fraction);
  j["order_lcm"] = e.order_lcm ? Json(e.order_lcm->str()) : Json(nullptr);
  j["verdict"] = image_verdict_name(e.verdict);
  j["policy"] = e.policy;
  return j;
}

std::string census_to_jsonl(const Census& census) {
  std::ostringstream os;
  for (const auto& r : census.records) os << record_to_json(r).dump() << "\n";
  os << evidence_to_json(census.evidence).dump() << "\n";
  return os.str();
}

std::string census_to_pretty(const Census& census) {
  Json j;
  Json records = Json::array();
  for (const auto& r : census.records) records.push_back(record_to_json(r));
  j["records"] = std::move(records);
  j["evidence"] = evidence_to_json(census.evidence);
  return j.dump(2) + "\n";
}

IntPoly poly_from_text(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const std::exception& e) {
      parse_fail(std::string("invalid JSON polynomial: ") + e.what());
    }
    return poly_from_json(j);
  }
  std::vector<Integer> c;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    // trim blanks
    size_t a = cur.find_first_not_of(" \t");
    size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) parse_fail("empty coefficient in list");
    cur = cur.substr(a, b - a + 1);
    if (!decimal_string(cur)) parse_fail("not a decimal integer: \"" + cur + "\"");
    c.emplace_back(cur);
  }
  if (c.empty()) parse_fail("empty coefficient list");
  return IntPoly(std::move(c));
}

}  // namespace tame::io
