#include "nilcayley/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace nilcayley {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::hypotheses_unmet: return "hypotheses-unmet";
  }
  return "?";
}

void VerificationReport::set_param(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}

void VerificationReport::fail(Witness w) {
  verdict = Verdict::fail;
  witnesses.push_back(std::move(w));
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.check_id;
  j["backend"] = r.backend;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["verdict"] = verdict_str(r.verdict);
  if (r.degree_info.empty()) {
    j["degree_info"] = nullptr;
  } else {
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.degree_info) d[k] = v;
    j["degree_info"] = d;
  }
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json wj;
    wj["label"] = w.label;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    for (const auto& [k, v] : w.data) data[k] = v;
    wj["data"] = data;
    ws.push_back(wj);
  }
  j["witnesses"] = ws;
  if (!r.lifted_coefficients.empty()) j["lifted_coefficients"] = r.lifted_coefficients;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string VerificationReport::to_json(int indent) const {
  return report_json(*this).dump(indent);
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "[" << (verdict == Verdict::pass ? "PASS" : verdict == Verdict::fail ? "FAIL" : "SKIP")
     << "] " << check_id << "  backend=" << backend;
  for (const auto& [k, v] : params) os << " " << k << "=" << v;
  if (!degree_info.empty()) {
    os << "  {";
    bool first = true;
    for (const auto& [k, v] : degree_info) {
      if (!first) os << ", ";
      os << k << "=" << v;
      first = false;
    }
    os << "}";
  }
  os << "  (" << elapsed_ms << " ms)";
  if (verdict == Verdict::hypotheses_unmet) os << "  hypotheses unmet";
  for (const auto& w : witnesses) {
    os << "\n    witness: " << w.label;
    for (const auto& [k, v] : w.data) os << "\n      " << k << " = " << v;
  }
  if (!lifted_coefficients.empty()) {
    os << "\n    lifted coefficients:";
    for (std::size_t i = 0; i < lifted_coefficients.size(); ++i)
      os << "\n      lambda_" << i << " = " << lifted_coefficients[i];
  }
  return os.str();
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, int indent) {
  nlohmann::ordered_json j;
  bool all_pass = true;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    arr.push_back(report_json(r));
    if (r.verdict != Verdict::pass) all_pass = false;
  }
  j["verdict"] = all_pass ? "pass" : "fail";
  j["checks"] = arr;
  return j.dump(indent);
}

}  // namespace nilcayley
