#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pbverify/config.hpp"
#include "pbverify/plot_data.hpp"
#include "pbverify/suites.hpp"

namespace {

constexpr int kExitFailedChecks = 1;
constexpr int kExitUsage = 2;

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::vector<std::string> suites;
  int n_max = -1;
  bool parallel = false;
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", args.out_dir, "Output directory (overrides the config)");
  cmd->add_option("--nmax", args.n_max, "Truncation order (overrides the config)")->check(CLI::Range(0, 40));
}

pbverify::RunConfig load(const CommonArgs& args) {
  std::ifstream in(args.config_path);
  std::stringstream text;
  text << in.rdbuf();
  auto config = pbverify::parse_config(text.str());
  if (!args.out_dir.empty()) config.out_dir = args.out_dir;
  if (args.n_max >= 0) config.n_max = args.n_max;
  if (!args.suites.empty()) {
    config.suites.clear();
    for (const auto& name : args.suites) {
      const auto suite = pbverify::suite_from_string(name);
      if (!suite) throw pbverify::ConfigError("--suite", "unknown suite '" + name + "'");
      config.suites.push_back(*suite);
    }
  }
  return config;
}

int finish(const pbverify::Report& report, const std::string& dir) {
  pbverify::write_report(report, dir);
  for (const auto& r : report.records) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.check_id;
    if (!r.pass && !r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << '\n';
  }
  std::cout << report.records.size() - report.failures() << " passed, " << report.failures()
            << " failed; report in " << dir << '\n';
  return report.all_pass() ? 0 : kExitFailedChecks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of pseudo-boson systems built from superpotential pairs"};
  app.require_subcommand(1);

  CommonArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the verification suites and write a report");
  add_common(verify, verify_args);
  verify->add_option("--suite", verify_args.suites, "Suites to run: gram, riesz, expand, coherent, fock")
      ->delimiter(',');
  verify->add_flag("--parallel", verify_args.parallel, "Run suites concurrently");
  verify->add_flag("--timings", verify_args.timings, "Record runtime_ms per check");

  CommonArgs expand_args;
  auto* expand = app.add_subcommand("expand", "Expand the target in the phi basis");
  add_common(expand, expand_args);

  CommonArgs coherent_args;
  auto* coherent = app.add_subcommand("coherent", "Bi-coherent state checks");
  add_common(coherent, coherent_args);

  CommonArgs fock_args;
  auto* fock = app.add_subcommand("fock", "Displaced Fock-space checks");
  add_common(fock, fock_args);

  CommonArgs plot_args;
  std::vector<std::string> what;
  auto* plot = app.add_subcommand("plot-data", "Write CSV data for external plotting");
  add_common(plot, plot_args);
  plot->add_option("--what", what, "wavefunctions, ratio, bessel, coherent_residual")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    using pbverify::Suite;
    if (verify->parsed()) {
      const auto config = load(verify_args);
      return finish(pbverify::run_verify(config, {verify_args.parallel, verify_args.timings}),
                    config.out_dir);
    }
    if (expand->parsed()) {
      const auto config = load(expand_args);
      const auto report = pbverify::run_suites(config, {Suite::Expand}, {}, "expand");
      const int status = finish(report, config.out_dir);
      std::ofstream(config.out_dir + "/expansion.csv", std::ios::binary) << pbverify::expansion_csv(config);
      return status;
    }
    if (coherent->parsed()) {
      const auto config = load(coherent_args);
      return finish(pbverify::run_suites(config, {Suite::Coherent}, {}, "coherent"), config.out_dir);
    }
    if (fock->parsed()) {
      const auto config = load(fock_args);
      return finish(pbverify::run_suites(config, {Suite::Fock}, {}, "fock"), config.out_dir);
    }
    if (plot->parsed()) {
      const auto config = load(plot_args);
      std::vector<pbverify::PlotKind> kinds;
      for (const auto& name : what) {
        const auto kind = pbverify::plot_kind_from_string(name);
        if (!kind) throw pbverify::ConfigError("--what", "unknown plot '" + name + "'");
        kinds.push_back(*kind);
      }
      if (kinds.empty()) kinds = pbverify::all_plot_kinds();
      for (const auto& path : pbverify::emit_plot_data(config, kinds, config.out_dir))
        std::cout << path << '\n';
      return 0;
    }
  } catch (const pbverify::ConfigError& e) {
    std::cerr << "config error at " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
