#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace flp {

inline constexpr int kSchemaVersion = 1;

/// How `passed` is derived from the numbers in a report.
enum class CheckKind {
  Agreement,    // gap = |closed_form - oracle_value| <= tolerance
  Containment,  // oracle_value is the worst region margin; passed iff it is > 0
  StrictBound,  // oracle_value is a supremum; passed iff it is < closed_form
  LowerBound,   // oracle_value is an infimum; passed iff it is >= closed_form
};

using ParamList = std::vector<std::pair<std::string, double>>;

struct VerificationReport {
  std::string id;
  CheckKind kind = CheckKind::Agreement;
  ParamList params;
  double closed_form = 0.0;
  double oracle_value = 0.0;
  double gap = 0.0;
  double tolerance = 0.0;
  std::int64_t samples = 0;
  bool passed = false;
  std::string notes;
};

[[nodiscard]] const char* to_string(CheckKind kind) noexcept;

/// Fills gap and passed for an agreement report.
[[nodiscard]] VerificationReport agreement_report(std::string id, ParamList params, double closed_form,
                                                  double oracle_value, double tolerance,
                                                  std::int64_t samples, std::string notes = {});

[[nodiscard]] nlohmann::ordered_json to_json(const VerificationReport& report);

/// One compact JSON object per line, keys in a fixed order.
[[nodiscard]] std::string to_jsonl(const std::vector<VerificationReport>& reports);

/// Shortest decimal that round-trips, or "nan"/"inf" for non-finite values.
[[nodiscard]] std::string format_double(double v);

}  // namespace flp
