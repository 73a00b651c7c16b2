#include "pbverify/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pseudoboson/errors.hpp"

namespace pbverify {

using nlohmann::ordered_json;

std::string_view to_string(Comparison c) noexcept {
  switch (c) {
    case Comparison::AtMost: return "at_most";
    case Comparison::AtLeast: return "at_least";
    case Comparison::Near: return "near";
    case Comparison::Verdict: return "verdict";
  }
  return "unknown";
}

bool Report::all_pass() const noexcept { return failures() == 0; }

std::size_t Report::failures() const noexcept {
  std::size_t n = 0;
  for (const auto& r : records)
    if (!r.pass) ++n;
  return n;
}

void judge(Record& r) {
  switch (r.comparison) {
    case Comparison::AtMost:
      r.pass = std::isfinite(r.measured) && r.measured <= r.tolerance;
      break;
    case Comparison::AtLeast:
      r.pass = std::isfinite(r.measured) && r.measured >= r.expected;
      break;
    case Comparison::Near:
      r.pass = std::isfinite(r.measured) && std::abs(r.measured - r.expected) <= r.tolerance;
      break;
    case Comparison::Verdict:
      r.pass = !r.measured_label.empty() && r.measured_label == r.expected_label;
      break;
  }
}

namespace {

ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

std::string csv_number(double v) {
  if (!std::isfinite(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_json(const Report& report) {
  ordered_json j;
  j["schema_version"] = 1;
  j["command"] = report.command;
  j["config"] = report.config_json.empty() ? ordered_json::object()
                                           : ordered_json::parse(report.config_json);
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json o;
    o["suite"] = r.suite;
    o["check_id"] = r.check_id;
    o["relation"] = r.relation;
    o["comparison"] = std::string(to_string(r.comparison));
    if (r.comparison == Comparison::Verdict) {
      o["measured"] = r.measured_label;
      o["expected"] = r.expected_label;
      o["measured_value"] = number(r.measured);
    } else {
      o["measured"] = number(r.measured);
      o["expected"] = number(r.expected);
      o["tolerance"] = number(r.tolerance);
    }
    o["pass"] = r.pass;
    if (!r.detail.empty()) o["detail"] = r.detail;
    if (r.runtime_ms) o["runtime_ms"] = *r.runtime_ms;
    records.push_back(std::move(o));
  }
  j["records"] = std::move(records);
  j["passed"] = report.records.size() - report.failures();
  j["failed"] = report.failures();
  return j.dump(2) + "\n";
}

std::string summary_csv(const Report& report) {
  std::ostringstream os;
  os << "suite,check_id,relation,comparison,measured,expected,tolerance,pass\n";
  for (const auto& r : report.records) {
    const bool verdict = r.comparison == Comparison::Verdict;
    os << csv_field(r.suite) << ',' << csv_field(r.check_id) << ',' << csv_field(r.relation) << ','
       << to_string(r.comparison) << ','
       << (verdict ? csv_field(r.measured_label) : csv_number(r.measured)) << ','
       << (verdict ? csv_field(r.expected_label) : csv_number(r.expected)) << ','
       << (verdict ? "" : csv_number(r.tolerance)) << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

void write_report(const Report& report, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw pseudoboson::Error("cannot create output directory '" + dir + "': " + ec.message());
  const auto write = [&](const std::string& name, const std::string& text) {
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw pseudoboson::Error("cannot write '" + path.string() + "'");
  };
  write("report.json", report_json(report));
  write("summary.csv", summary_csv(report));
}

}  // namespace pbverify
