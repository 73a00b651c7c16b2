#include "pbverify/plot_data.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pseudoboson/coherent.hpp"
#include "pseudoboson/fock.hpp"
#include "pseudoboson/wavefunction.hpp"

namespace pbverify {

namespace pb = pseudoboson;

std::string_view to_string(PlotKind kind) noexcept {
  switch (kind) {
    case PlotKind::Wavefunctions: return "wavefunctions";
    case PlotKind::Ratio: return "ratio";
    case PlotKind::Bessel: return "bessel";
    case PlotKind::CoherentResidual: return "coherent_residual";
  }
  return "unknown";
}

std::optional<PlotKind> plot_kind_from_string(std::string_view name) noexcept {
  for (PlotKind k : all_plot_kinds())
    if (to_string(k) == name) return k;
  return std::nullopt;
}

const std::vector<PlotKind>& all_plot_kinds() {
  static const std::vector<PlotKind> kinds{PlotKind::Wavefunctions, PlotKind::Ratio, PlotKind::Bessel,
                                           PlotKind::CoherentResidual};
  return kinds;
}

namespace {

constexpr int kPlotPoints = 401;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> uniform(double L) {
  std::vector<double> xs(kPlotPoints);
  for (int i = 0; i < kPlotPoints; ++i) xs[static_cast<std::size_t>(i)] = -L + 2.0 * L * i / (kPlotPoints - 1);
  return xs;
}

std::string wavefunctions(const RunConfig& c) {
  const auto sys = pb::make_system(c.family, c.alpha, c.family_params());
  const auto xs = uniform(c.grid.L);
  const auto phi = pb::sample_phi_family(*sys, 3, xs);
  const auto psi = pb::sample_psi_family(*sys, 3, xs);
  std::ostringstream os;
  os << "curve,x,re,im\n";
  for (int n = 0; n <= 3; ++n) {
    for (const auto* fam : {&phi, &psi}) {
      const std::string name = (fam == &phi ? "phi_" : "psi_") + std::to_string(n);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const pb::cplx v = (*fam)(static_cast<Eigen::Index>(i), n);
        os << name << ',' << fmt(xs[i]) << ',' << fmt(v.real()) << ',' << fmt(v.imag()) << '\n';
      }
    }
  }
  return os.str();
}

std::string ratio(const RunConfig& c) {
  const auto sys = pb::make_system(c.family, c.alpha, c.family_params());
  std::ostringstream os;
  os << "x,log_abs_ratio\n";
  for (double x : uniform(c.grid.L)) {
    const double v = (2.0 * sys->w_a(x) - x * x - c.alpha * x).real();
    os << fmt(x) << ',' << fmt(v) << '\n';
  }
  return os.str();
}

std::string bessel(const RunConfig& c) {
  const auto sys = pb::displaced_system(c.fock.alpha, c.fock.beta, c.fock.dim);
  const auto fam = pb::displaced_vectors(sys, c.fock.n_max);
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(c.fock.dim);
  f[c.fock.n_max] = 1.0;
  const auto sums = pb::bessel_partial_sums(fam, f);
  std::ostringstream os;
  os << "n,value\n";
  for (std::size_t n = 0; n < sums.size(); ++n) os << n << ',' << fmt(sums[n]) << '\n';
  return os.str();
}

std::string coherent_residual(const RunConfig& c) {
  const auto sys = pb::make_system(c.family, c.alpha, c.family_params());
  const auto grid = pb::real_line_grid(c.grid.L, c.grid.density);
  const pb::cplx z(1.0, 0.0);
  std::ostringstream os;
  os << "n_trunc,residual,tail_bound\n";
  for (int n = 1; n <= pb::default_truncation(z); ++n) {
    const auto e = pb::eigen_residual(*sys, z, n, grid);
    os << n << ',' << fmt(std::max(e.phi, e.psi)) << ',' << fmt(pb::series_tail_bound(z, n)) << '\n';
  }
  return os.str();
}

}  // namespace

std::string plot_csv(const RunConfig& config, PlotKind kind) {
  switch (kind) {
    case PlotKind::Wavefunctions: return wavefunctions(config);
    case PlotKind::Ratio: return ratio(config);
    case PlotKind::Bessel: return bessel(config);
    case PlotKind::CoherentResidual: return coherent_residual(config);
  }
  return {};
}

std::vector<std::string> emit_plot_data(const RunConfig& config, const std::vector<PlotKind>& kinds,
                                        const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw pb::Error("cannot create output directory '" + dir + "': " + ec.message());
  std::vector<std::string> written;
  for (PlotKind kind : kinds) {
    const auto path = std::filesystem::path(dir) / (std::string(to_string(kind)) + ".csv");
    std::ofstream out(path, std::ios::binary);
    out << plot_csv(config, kind);
    if (!out) throw pb::Error("cannot write '" + path.string() + "'");
    written.push_back(path.string());
  }
  return written;
}

}  // namespace pbverify
