#include "pbverify/expectations.hpp"

#include <array>

namespace pbverify {

using pseudoboson::Family;
using pseudoboson::Verdict;

AlphaClass classify_alpha(pseudoboson::cplx alpha) noexcept {
  const bool re = alpha.real() != 0.0;
  const bool im = alpha.imag() != 0.0;
  if (!re && !im) return AlphaClass::Zero;
  if (!im) return AlphaClass::Real;
  if (!re) return AlphaClass::Imaginary;
  return AlphaClass::General;
}

std::string_view to_string(AlphaClass c) noexcept {
  switch (c) {
    case AlphaClass::Zero: return "zero";
    case AlphaClass::Real: return "real";
    case AlphaClass::Imaginary: return "imaginary";
    case AlphaClass::General: return "general";
  }
  return "unknown";
}

namespace {

// The ratio exp(w_a - w_b) carries exp(-Re(alpha) x) times a bounded factor
// for the first three families, so any nonzero real part breaks boundedness.
// The shifted oscillator has a constant ratio.
constexpr std::array kTable{
    Expectation{Family::Gaussian, AlphaClass::Zero, Verdict::RieszSufficient, "orthonormal hermite basis"},
    Expectation{Family::Gaussian, AlphaClass::Imaginary, Verdict::RieszSufficient, "bounded ratio, imaginary alpha"},
    Expectation{Family::Gaussian, AlphaClass::Real, Verdict::NotRieszByDivergence, "ratio grows like exp(alpha |x|)"},
    Expectation{Family::Gaussian, AlphaClass::General, Verdict::NotRieszByDivergence, "ratio grows like exp(Re alpha |x|)"},
    Expectation{Family::CosinePerturbed, AlphaClass::Zero, Verdict::RieszSufficient, "bounded ratio exp(2 sin x)"},
    Expectation{Family::CosinePerturbed, AlphaClass::Imaginary, Verdict::RieszSufficient, "bounded ratio, imaginary alpha"},
    Expectation{Family::CosinePerturbed, AlphaClass::Real, Verdict::NotRieszByDivergence, "ratio grows like exp(alpha |x|)"},
    Expectation{Family::CosinePerturbed, AlphaClass::General, Verdict::NotRieszByDivergence, "ratio grows like exp(Re alpha |x|)"},
    Expectation{Family::BoundedPhi, AlphaClass::Zero, Verdict::RieszSufficient, "bounded ratio exp(2 Phi)"},
    Expectation{Family::BoundedPhi, AlphaClass::Imaginary, Verdict::RieszSufficient, "bounded ratio, imaginary alpha"},
    Expectation{Family::BoundedPhi, AlphaClass::Real, Verdict::NotRieszByDivergence, "ratio grows like exp(alpha |x|)"},
    Expectation{Family::BoundedPhi, AlphaClass::General, Verdict::NotRieszByDivergence, "ratio grows like exp(Re alpha |x|)"},
    Expectation{Family::ShiftedOscillator, AlphaClass::Zero, Verdict::RieszSufficient, "constant ratio"},
    Expectation{Family::ShiftedOscillator, AlphaClass::Imaginary, Verdict::RieszSufficient, "constant ratio"},
    Expectation{Family::ShiftedOscillator, AlphaClass::Real, Verdict::RieszSufficient, "constant ratio"},
    Expectation{Family::ShiftedOscillator, AlphaClass::General, Verdict::RieszSufficient, "constant ratio"},
};

}  // namespace

std::span<const Expectation> expectation_table() noexcept { return kTable; }

std::optional<Expectation> expected_verdict(Family family, pseudoboson::cplx alpha) noexcept {
  const AlphaClass c = classify_alpha(alpha);
  for (const auto& row : kTable)
    if (row.family == family && row.alpha_class == c) return row;
  return std::nullopt;
}

}  // namespace pbverify
