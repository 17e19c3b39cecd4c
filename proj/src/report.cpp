#include <cstdio>

#include "alphax/harness.hpp"

namespace alphax {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json to_json(const VerificationReport& r) {
  return {{"class", r.class_name},
          {"n", r.n},
          {"alpha", r.alpha},
          {"exhaustive_max", r.exhaustive_max},
          {"witnesses", r.witnesses},
          {"predicted_value", r.predicted_value},
          {"predicted_witness", r.predicted_witness},
          {"predicted_witness_member", r.predicted_witness_member},
          {"verdict", to_string(r.verdict)},
          {"threshold_satisfied", r.threshold_satisfied},
          {"notes", r.notes}};
}

std::string csv_header() {
  return "class,n,alpha,exhaustive_max,witnesses,predicted_value,predicted_witness,verdict,"
         "threshold_satisfied";
}

std::string to_csv_row(const VerificationReport& r) {
  const std::vector<std::string> cells{csv_field(r.class_name),
                                       std::to_string(r.n),
                                       csv_field(r.alpha_text),
                                       format_double(r.exhaustive_max),
                                       csv_field(join(r.witnesses, ';')),
                                       format_double(r.predicted_value),
                                       csv_field(r.predicted_witness),
                                       to_string(r.verdict),
                                       r.threshold_satisfied ? "true" : "false"};
  return join(cells, ',');
}

nlohmann::json to_json(const SweepReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"check", v.check},
                          {"point", v.point},
                          {"witness", v.witness},
                          {"value", v.value},
                          {"bound", v.bound}});
  return {{"evaluated", r.evaluated}, {"skipped", r.skipped}, {"violations", violations}};
}

}  // namespace alphax
