#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace socle {

inline constexpr const char* kReportSchema = "socle-lab/1";
inline constexpr const char* kToolVersion = "0.1.0";

/// null (absent), integer, boolean, or a list of admissible integers.
using ReportValue = std::variant<std::monostate, long, bool, std::vector<long>>;

std::string format_value(const ReportValue& v);

/// Exact match, or membership when `expected` is a list of candidates.
bool value_matches(const ReportValue& computed, const ReportValue& expected);

struct ReportRow {
  std::string id;
  std::string claim;     // the statement being checked
  ReportValue computed;
  ReportValue expected;
  std::string source;    // "literature", "derived" or "elementary"
  std::string note;      // derivation or oracle used for the expected value
  bool pass = false;
  bool flagged = false;  // expected value is disputed; both candidates are listed
  std::string error;     // set when the computation itself failed
  double wall_ms = 0.0;
};

struct VerificationReport {
  std::string tool_version = kToolVersion;
  std::string family;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  std::uint32_t characteristic = 0;
  std::vector<ReportRow> rows;

  bool all_passed() const;
  std::size_t failures() const;
};

/// Versioned JSON text. Wall times are included only when `timings` is set,
/// so that the default output is byte-stable for a fixed seed.
std::string report_to_json(const VerificationReport& report, bool timings = false);

/// Parses report_to_json output; unknown or missing fields are errors.
VerificationReport report_from_json(const std::string& text);

/// One line per row: PASS/FAIL/FLAG, id, computed vs expected.
std::string report_to_text(const VerificationReport& report);

}  // namespace socle
