#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "pseudoboson/diagnostics.hpp"
#include "pseudoboson/system.hpp"

namespace pbverify {

/// Coarse classification of the alpha parameter.
enum class AlphaClass { Zero, Real, Imaginary, General };

AlphaClass classify_alpha(pseudoboson::cplx alpha) noexcept;
std::string_view to_string(AlphaClass c) noexcept;

/// One row of the expectation table: the Riesz verdict a family is known to
/// produce for a class of alpha, and the relation that backs it.
struct Expectation {
  pseudoboson::Family family;
  AlphaClass alpha_class;
  pseudoboson::Verdict verdict;
  std::string_view relation;
};

std::span<const Expectation> expectation_table() noexcept;

std::optional<Expectation> expected_verdict(pseudoboson::Family family,
                                            pseudoboson::cplx alpha) noexcept;

}  // namespace pbverify
