#include "sl2hom/report.hpp"

namespace sl2hom {

json to_json(const Fq& x) {
  json out = json::array();
  for (uint32_t c : x.coeffs()) out.push_back(c);
  return out;
}

json to_json(const FqMat& m) {
  json out = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    out.push_back(row);
  }
  return out;
}

json to_json(const Mat<MPoly>& m) {
  json out = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    out.push_back(row);
  }
  return out;
}

json to_json(const CheckReport& r) {
  json out;
  out["passed"] = r.passed;
  out["backend"] = r.backend;
  out["checkedRelations"] = r.checkedRelations;
  if (r.counterexample) out["counterexample"] = *r.counterexample;
  if (r.differencePoly) out["differencePoly"] = *r.differencePoly;
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

json to_json(const Signature& s) {
  json out;
  out["weights"] = s.weights;
  out["dSigma"] = {s.dSigma.first, s.dSigma.second};
  out["dUnipotent"] = {s.dUnipotent[0], s.dUnipotent[1]};
  out["dUnipotentRow"] = {s.dUnipotent[2], s.dUnipotent[3]};
  return out;
}

json to_json(const FormSpec& s) {
  json out;
  out["form"] = s.str();
  out["p"] = s.p;
  json ps;
  for (const auto& [k, v] : s.params) ps[k] = v;
  out["params"] = ps;
  return out;
}

json to_json(const PhiMinusSolution& s) {
  json out;
  out["status"] = s.status == PhiMinusSolution::Status::Unique ? "unique" : "inconsistent";
  if (s.phiMinus) out["phiMinus"] = to_json(*s.phiMinus);
  if (!s.certificate.empty()) {
    out["certificate"] = s.certificate;
    out["certificateNote"] = s.certificateNote;
  }
  out["evidence"] = s.evidence;
  if (s.status == PhiMinusSolution::Status::Unique) out["verification"] = to_json(s.verification);
  return out;
}

json to_json(const DecompositionReport& d) {
  json out;
  json summands = json::array();
  for (const auto& [spec, mult] : d.summands) {
    json s = to_json(spec);
    s["multiplicity"] = mult;
    summands.push_back(s);
  }
  out["summands"] = summands;
  out["conjugator"] = to_json(d.conjugator);
  return out;
}

json to_json(const CriterionResult& c) {
  json out;
  out["criterion"] = c.number;
  out["name"] = c.name;
  out["passed"] = c.passed;
  out["checks"] = c.checks;
  out["seconds"] = c.seconds;
  if (!c.failures.empty()) out["failures"] = c.failures;
  return out;
}

Params parse_params(const std::string& text) {
  Params out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    size_t eq = item.find('=');
    if (eq == std::string::npos) fail(Err::BadParams, "parameter must look like name=value");
    out[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    pos = comma + 1;
  }
  return out;
}

}  // namespace sl2hom
