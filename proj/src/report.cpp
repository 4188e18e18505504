#include "socle/report.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "socle/error.hpp"

namespace socle {

namespace {

using Json = nlohmann::ordered_json;

Json value_to_json(const ReportValue& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else {
          return x;
        }
      },
      v);
}

ReportValue value_from_json(const Json& j, const std::string& field) {
  if (j.is_null()) return std::monostate{};
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_array()) {
    std::vector<long> out;
    for (const auto& e : j) {
      if (!e.is_number_integer()) throw ParseError("non-integer candidate in '" + field + "'", 0, 0);
      out.push_back(e.get<long>());
    }
    return out;
  }
  throw ParseError("unsupported value in '" + field + "'", 0, 0);
}

void require_keys(const Json& obj, const std::set<std::string>& required, const std::set<std::string>& optional,
                  const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " is not an object", 0, 0);
  for (const auto& [key, _] : obj.items()) {
    if (!required.count(key) && !optional.count(key)) {
      throw ParseError("unknown field '" + key + "' in " + where, 0, 0);
    }
  }
  for (const auto& key : required) {
    if (!obj.contains(key)) throw ParseError("missing field '" + key + "' in " + where, 0, 0);
  }
}

}  // namespace

std::string format_value(const ReportValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "none";
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, long>) {
          return std::to_string(x);
        } else {
          std::string s;
          for (std::size_t i = 0; i < x.size(); ++i) s += (i ? " or " : "") + std::to_string(x[i]);
          return s;
        }
      },
      v);
}

bool value_matches(const ReportValue& computed, const ReportValue& expected) {
  if (const auto* candidates = std::get_if<std::vector<long>>(&expected)) {
    const auto* c = std::get_if<long>(&computed);
    if (!c) return false;
    for (long v : *candidates) {
      if (v == *c) return true;
    }
    return false;
  }
  return computed == expected;
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.pass ? 0 : 1;
  return n;
}

std::string report_to_json(const VerificationReport& report, bool timings) {
  Json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = report.tool_version;
  Json inst;
  inst["family"] = report.family;
  inst["params"] = Json::object();
  for (const auto& [k, v] : report.params) inst["params"][k] = v;
  j["instance"] = inst;
  j["seed"] = report.seed;
  j["characteristic"] = report.characteristic;
  j["rows"] = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["id"] = r.id;
    row["claim"] = r.claim;
    row["computed"] = value_to_json(r.computed);
    row["expected"] = value_to_json(r.expected);
    row["source"] = r.source;
    row["note"] = r.note;
    row["pass"] = r.pass;
    row["flagged"] = r.flagged;
    if (!r.error.empty()) row["error"] = r.error;
    if (timings) row["wall_ms"] = r.wall_ms;
    j["rows"].push_back(row);
  }
  j["passed"] = report.all_passed();
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0, 0);
  }
  require_keys(j, {"schema", "tool_version", "instance", "seed", "characteristic", "rows", "passed"}, {}, "report");
  if (j["schema"] != kReportSchema) {
    throw ParseError("unsupported schema '" + j["schema"].dump() + "'", 0, 0);
  }
  VerificationReport report;
  try {
    report.tool_version = j["tool_version"].get<std::string>();
    const Json& inst = j["instance"];
    require_keys(inst, {"family", "params"}, {}, "instance");
    report.family = inst["family"].get<std::string>();
    for (const auto& [k, v] : inst["params"].items()) report.params[k] = v.get<std::string>();
    report.seed = j["seed"].get<std::uint64_t>();
    report.characteristic = j["characteristic"].get<std::uint32_t>();
    for (const auto& r : j["rows"]) {
      require_keys(r, {"id", "claim", "computed", "expected", "source", "note", "pass", "flagged"},
                   {"error", "wall_ms"}, "row");
      ReportRow row;
      row.id = r["id"].get<std::string>();
      row.claim = r["claim"].get<std::string>();
      row.computed = value_from_json(r["computed"], "computed");
      row.expected = value_from_json(r["expected"], "expected");
      row.source = r["source"].get<std::string>();
      row.note = r["note"].get<std::string>();
      row.pass = r["pass"].get<bool>();
      row.flagged = r["flagged"].get<bool>();
      if (r.contains("error")) row.error = r["error"].get<std::string>();
      if (r.contains("wall_ms")) row.wall_ms = r["wall_ms"].get<double>();
      report.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0, 0);
  }
  return report;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << report.family;
  for (const auto& [k, v] : report.params) os << ' ' << k << '=' << v;
  os << " seed=" << report.seed << '\n';
  for (const auto& r : report.rows) {
    os << (r.pass ? (r.flagged ? "FLAG" : "PASS") : "FAIL") << "  " << r.id << ": " << format_value(r.computed)
       << " (expected " << format_value(r.expected) << ")";
    if (!r.error.empty()) os << " error: " << r.error;
    os << '\n';
  }
  os << (report.all_passed() ? "all rows passed" : std::to_string(report.failures()) + " row(s) failed") << '\n';
  return os.str();
}

}  // namespace socle
