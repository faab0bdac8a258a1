#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilcayley {

enum class Verdict { pass, fail, hypotheses_unmet };

std::string verdict_str(Verdict v);

/// A named piece of failure evidence: the inputs and the nonzero residual
/// that reproduce the problem, rendered canonically.
struct Witness {
  std::string label;
  std::vector<std::pair<std::string, std::string>> data;
};

/// Structured outcome of one verification procedure. A pass verdict means
/// every residual was exactly zero.
struct VerificationReport {
  std::string check_id;
  std::string backend;
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::pass;
  std::vector<std::pair<std::string, long>> degree_info;
  std::vector<Witness> witnesses;
  std::vector<std::string> lifted_coefficients;
  double elapsed_ms = 0.0;

  void set_param(const std::string& key, const std::string& value);
  void fail(Witness w);
  bool passed() const { return verdict == Verdict::pass; }

  /// {theorem, backend, params, verdict, degree_info, witnesses,
  ///  lifted_coefficients?, elapsed_ms} - stable key order.
  std::string to_json(int indent = -1) const;
  std::string to_text() const;
};

std::string reports_to_json(const std::vector<VerificationReport>& reports, int indent = -1);

}  // namespace nilcayley
