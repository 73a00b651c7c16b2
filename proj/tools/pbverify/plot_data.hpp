#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbverify/config.hpp"

namespace pbverify {

enum class PlotKind { Wavefunctions, Ratio, Bessel, CoherentResidual };

std::string_view to_string(PlotKind kind) noexcept;
std::optional<PlotKind> plot_kind_from_string(std::string_view name) noexcept;
const std::vector<PlotKind>& all_plot_kinds();

/// CSV text with a header row and LF line endings.
///  - wavefunctions: curve,x,re,im for phi_0..phi_3 and Psi_0..Psi_3 on [-L, L]
///  - ratio: x,log_abs_ratio for exp(2 w_a) / exp(x^2 + alpha x)
///  - bessel: n,value partial sums for the displaced Fock family and f = e_{n_max}
///  - coherent_residual: n_trunc,residual,tail_bound for z = 1
std::string plot_csv(const RunConfig& config, PlotKind kind);

/// Writes <kind>.csv files into `dir` and returns their paths.
std::vector<std::string> emit_plot_data(const RunConfig& config, const std::vector<PlotKind>& kinds,
                                        const std::string& dir);

}  // namespace pbverify
