#pragma once

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "constalg/instance.hpp"
#include "constalg/text.hpp"
#include "constalg/verify.hpp"

namespace constalg {

using json = nlohmann::json;

/// {"d": 3, "f": [[0,1],[1,0,1],[0,0,0,2]]}: f_i as ascending coefficient
/// lists; each coefficient an integer or a string such as "3/2".
inline ProblemInstance instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("f")) throw ParseError("instance: expected keys \"d\" and \"f\"");
  if (!j["d"].is_number_integer() || j["d"].get<long long>() < 1) throw ParseError("instance: \"d\" must be a positive integer");
  const auto d = j["d"].get<std::size_t>();
  const json& f = j["f"];
  if (!f.is_array() || f.size() != d)
    throw ParseError("instance: \"f\" must be a list of " + std::to_string(d) + " coefficient lists");
  std::vector<Coefficients> polys;
  for (const auto& coeffs : f) {
    if (!coeffs.is_array()) throw ParseError("instance: each f_i must be a list of coefficients");
    Coefficients c;
    for (const auto& x : coeffs) {
      if (x.is_number_integer())
        c.emplace_back(x.get<long long>());
      else if (x.is_string())
        c.push_back(Rational::parse(x.get<std::string>()));
      else
        throw ParseError("instance: coefficient must be an integer or a rational string");
    }
    polys.push_back(std::move(c));
  }
  return ProblemInstance(std::move(polys));
}

inline ProblemInstance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance: invalid JSON: ") + e.what());
  }
  return instance_from_json(j);
}

inline ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

inline json instance_to_json(const ProblemInstance& inst) {
  json f = json::array();
  for (std::size_t i = 1; i <= inst.dim(); ++i) {
    json c = json::array();
    for (const auto& x : inst.f(i)) c.push_back(x.str());
    f.push_back(std::move(c));
  }
  return {{"d", inst.dim()}, {"f", std::move(f)}};
}

inline std::string utc_timestamp(std::chrono::system_clock::time_point t) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Machine record of a verify_groebner run.
inline json certificate_json(const ProblemInstance& inst, const GroebnerVerdict& v,
                             std::chrono::system_clock::time_point started,
                             std::chrono::system_clock::time_point finished) {
  json leads = json::array();
  for (const auto& c : v.conformance.checks)
    leads.push_back({{"relation", c.label},
                     {"expected", format_monomial(c.expected)},
                     {"actual", format_monomial(c.actual)},
                     {"coefficient", c.coefficient.str()},
                     {"conforms", c.ok()}});
  json pairs = json::array();
  for (const auto& p : v.pairs)
    pairs.push_back({{"first", p.first_label},
                     {"second", p.second_label},
                     {"coprime_leads", p.coprime_leads},
                     {"reduces_to_zero", p.reduces_to_zero},
                     {"reduction_steps", p.steps},
                     {"remainder", format_poly(p.remainder)}});
  json basis = json::array();
  for (const auto& rel : v.basis) basis.push_back({{"relation", rel.label()}, {"poly", format_poly(rel.poly)}});
  return {{"instance", instance_to_json(inst)},
          {"variant", std::string(to_string(v.variant))},
          {"basis", std::move(basis)},
          {"lead_conformance", std::move(leads)},
          {"pairs", std::move(pairs)},
          {"reducedness", {{"checked", v.conformance.ok()}, {"violations", v.reducedness.violations}}},
          {"verified", v.verified},
          {"started_at", utc_timestamp(started)},
          {"finished_at", utc_timestamp(finished)}};
}

}  // namespace constalg
