#pragma once

#include <string>
#include <vector>

#include "pbverify/config.hpp"
#include "pbverify/report.hpp"

namespace pbverify {

struct RunOptions {
  /// Run independent suites on separate threads; records are merged in suite order.
  bool parallel = false;
  /// Attach runtime_ms to every record. Off by default so that reports are
  /// byte-identical across runs.
  bool timings = false;
};

std::vector<Record> run_suite(Suite suite, const RunConfig& config, bool timings);

/// Runs `suites` in their fixed order. Module errors become failed records.
Report run_suites(const RunConfig& config, const std::vector<Suite>& suites,
                  const RunOptions& options, std::string command);

/// Runs the suites selected in the configuration.
Report run_verify(const RunConfig& config, const RunOptions& options = {});

/// n,re,im rows of the phi-basis expansion coefficients of the target.
std::string expansion_csv(const RunConfig& config);

}  // namespace pbverify
