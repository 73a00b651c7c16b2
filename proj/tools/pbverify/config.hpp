#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pseudoboson/errors.hpp"
#include "pseudoboson/system.hpp"
#include "pseudoboson/types.hpp"

namespace pbverify {

using pseudoboson::cplx;

/// A schema violation; field() is the dotted path of the offending key.
class ConfigError : public pseudoboson::Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class Suite { Gram, Riesz, Expand, Coherent, Fock };

std::string_view to_string(Suite suite) noexcept;
std::optional<Suite> suite_from_string(std::string_view name) noexcept;
/// All suites in execution order.
const std::vector<Suite>& all_suites();

struct GridParams {
  double L = 12.0;
  int density = 32;
};

struct DiskParams {
  double R = 6.0;
  int radial = 48;
  int angular = 128;
};

struct FockParams {
  cplx alpha{1.0, 0.0};
  cplx beta{0.0, 0.0};
  int dim = 64;
  int n_max = 30;
};

/// exp(-(x - center)^2 / (2 width^2)), the expansion target.
struct TargetParams {
  double center = 1.0;
  double width = 1.0;
};

struct RunConfig {
  pseudoboson::Family family = pseudoboson::Family::Gaussian;
  cplx alpha{0.0, 0.0};
  cplx beta{0.0, 0.0};
  std::string phi = "tanh";
  int n_max = 20;
  GridParams grid;
  DiskParams disk;
  std::vector<Suite> suites = all_suites();
  FockParams fock;
  TargetParams target;
  std::string out_dir = "pbverify_out";

  pseudoboson::FamilyParams family_params() const;
};

/// Accepts "0.5", "0.5i", "1+0.3i", "1-0.3i", "i", "-i" and exponents.
std::optional<cplx> parse_complex(std::string_view text);
std::string format_complex(cplx value);

/// Parses and validates a JSON document. Missing keys take their defaults;
/// unknown keys and out-of-range values throw ConfigError.
RunConfig parse_config(std::string_view text);

/// Normalised JSON echo of a configuration.
std::string config_to_json(const RunConfig& config);

}  // namespace pbverify
