#include "flp/report.hpp"

#include <charconv>
#include <cmath>

namespace flp {

const char* to_string(CheckKind kind) noexcept {
  switch (kind) {
    case CheckKind::Agreement: return "agreement";
    case CheckKind::Containment: return "containment";
    case CheckKind::StrictBound: return "strict-bound";
    case CheckKind::LowerBound: return "lower-bound";
  }
  return "?";
}

VerificationReport agreement_report(std::string id, ParamList params, double closed_form,
                                    double oracle_value, double tolerance, std::int64_t samples,
                                    std::string notes) {
  VerificationReport r;
  r.id = std::move(id);
  r.kind = CheckKind::Agreement;
  r.params = std::move(params);
  r.closed_form = closed_form;
  r.oracle_value = oracle_value;
  r.gap = std::abs(closed_form - oracle_value);
  r.tolerance = tolerance;
  r.samples = samples;
  r.passed = r.gap <= tolerance;
  r.notes = std::move(notes);
  return r;
}

namespace {

// JSON has no NaN/Inf; those travel as strings.
nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.params) params[k] = number(v);
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["id"] = report.id;
  j["kind"] = to_string(report.kind);
  j["params"] = std::move(params);
  j["closed_form"] = number(report.closed_form);
  j["oracle_value"] = number(report.oracle_value);
  j["gap"] = number(report.gap);
  j["tolerance"] = number(report.tolerance);
  j["samples"] = report.samples;
  j["passed"] = report.passed;
  j["notes"] = report.notes;
  return j;
}

std::string to_jsonl(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace flp
