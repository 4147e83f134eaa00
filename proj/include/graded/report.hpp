#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "graded/laws.hpp"
#include "graded/predicates.hpp"

namespace graded {

using Json = nlohmann::json;

// Reports render identically across runs: keys are sorted by the json
// library, arrays follow canonical iteration order, and timings only appear
// when explicitly requested.

// --- classification ---------------------------------------------------------

inline Json to_json(const PredicateResult& r) {
  Json j;
  j["predicate"] = r.predicate;
  j["phi"] = r.phi;
  j["degree"] = r.degree;
  j["status"] = r.status;
  if (r.witness) j["witness"] = r.witness->elems;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

inline PredicateResult predicate_result_from_json(const Json& j) {
  PredicateResult r;
  r.predicate = j.at("predicate").get<std::string>();
  r.phi = j.at("phi").get<std::string>();
  r.degree = j.at("degree").get<std::string>();
  r.status = j.at("status").get<std::string>();
  if (j.contains("witness"))
    r.witness = Witness{j.at("witness").get<std::vector<Elem>>()};
  if (j.contains("reason")) r.reason = j.at("reason").get<std::string>();
  return r;
}

inline Json to_json(const ClassificationReport& rep) {
  Json j;
  j["module"] = rep.module_name;
  j["submodule"] = rep.submodule;
  j["members"] = rep.members;
  Json rows = Json::array();
  for (const auto& r : rep.results) rows.push_back(to_json(r));
  j["results"] = rows;
  return j;
}

inline ClassificationReport classification_from_json(const Json& j) {
  ClassificationReport rep;
  rep.module_name = j.at("module").get<std::string>();
  rep.submodule = j.at("submodule").get<std::string>();
  rep.members = j.at("members").get<std::vector<Elem>>();
  for (const Json& row : j.at("results"))
    rep.results.push_back(predicate_result_from_json(row));
  return rep;
}

inline void render_text(std::ostream& out, const ClassificationReport& rep) {
  out << "module " << rep.module_name << " submodule " << rep.submodule
      << "\n";
  for (const auto& r : rep.results) {
    out << "  " << r.predicate;
    if (!r.phi.empty()) out << " phi=" << r.phi;
    if (!r.degree.empty()) out << " g=" << r.degree;
    out << ": " << r.status;
    if (r.witness) {
      out << " (witness";
      for (Elem e : r.witness->elems) out << " " << e;
      out << ")";
    }
    if (!r.reason.empty()) out << " [" << r.reason << "]";
    out << "\n";
  }
}

// --- law results -------------------------------------------------------------

inline Json to_json(const LawResult& r, bool timing = false) {
  Json j;
  j["law"] = r.law;
  j["verdict"] = r.pass() ? "pass" : "counterexample";
  j["instances"] = r.instances;
  j["checks"] = r.checks;
  j["vacuous"] = r.vacuous;
  j["skipped"] = r.skipped;
  if (r.counterexample) {
    Json c;
    c["instance"] = r.counterexample->instance_id;
    c["part"] = r.counterexample->part;
    c["phi"] = r.counterexample->phi;
    c["detail"] = r.counterexample->detail;
    j["counterexample"] = c;
  }
  if (timing) j["seconds"] = r.seconds;
  return j;
}

inline LawResult law_result_from_json(const Json& j) {
  LawResult r;
  r.law = j.at("law").get<std::string>();
  r.instances = j.at("instances").get<long>();
  r.checks = j.at("checks").get<long>();
  r.vacuous = j.at("vacuous").get<long>();
  r.skipped = j.at("skipped").get<std::vector<std::string>>();
  if (j.contains("counterexample")) {
    const Json& c = j.at("counterexample");
    r.counterexample =
        Counterexample{c.at("instance").get<std::string>(),
                       c.at("part").get<std::string>(),
                       c.at("phi").get<std::string>(),
                       c.at("detail").get<std::string>()};
  }
  if (j.contains("seconds")) r.seconds = j.at("seconds").get<double>();
  return r;
}

inline Json to_json(const std::vector<LawResult>& rs, bool timing = false) {
  Json arr = Json::array();
  for (const auto& r : rs) arr.push_back(to_json(r, timing));
  return arr;
}

inline void render_text(std::ostream& out, const LawResult& r,
                        bool timing = false) {
  out << "law " << r.law << ": " << (r.pass() ? "pass" : "COUNTEREXAMPLE")
      << " (instances " << r.instances << ", checks " << r.checks
      << ", vacuous " << r.vacuous;
  if (!r.skipped.empty()) out << ", skipped " << r.skipped.size();
  out << ")";
  if (timing) out << " [" << r.seconds << "s]";
  out << "\n";
  if (r.counterexample)
    out << "  at " << r.counterexample->instance_id << " part "
        << r.counterexample->part << " phi " << r.counterexample->phi << ": "
        << r.counterexample->detail << "\n";
  for (const std::string& s : r.skipped) out << "  skipped: " << s << "\n";
}

}  // namespace graded
