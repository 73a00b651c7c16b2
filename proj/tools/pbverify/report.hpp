#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pbverify {

/// How a record's measured value is judged.
enum class Comparison {
  AtMost,     ///< measured <= tolerance
  AtLeast,    ///< measured >= expected
  Near,       ///< |measured - expected| <= tolerance
  Verdict,    ///< measured_label == expected_label
};

std::string_view to_string(Comparison c) noexcept;

struct Record {
  std::string suite;
  std::string check_id;
  /// The relation under test, or "plumbing".
  std::string relation;
  Comparison comparison = Comparison::AtMost;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string measured_label;
  std::string expected_label;
  bool pass = false;
  std::string detail;
  std::optional<double> runtime_ms;
};

struct Report {
  std::string command;
  std::string config_json;
  std::vector<Record> records;

  bool all_pass() const noexcept;
  std::size_t failures() const noexcept;
};

/// Fills in `pass` from the comparison; non-finite measurements fail.
void judge(Record& record);

std::string report_json(const Report& report);
std::string summary_csv(const Report& report);

/// Writes report.json and summary.csv into `dir`, creating it if needed.
void write_report(const Report& report, const std::string& dir);

}  // namespace pbverify
