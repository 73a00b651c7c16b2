#include "pbverify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <limits>
#include <sstream>

#include "pbverify/expectations.hpp"
#include "pseudoboson/coherent.hpp"
#include "pseudoboson/diagnostics.hpp"
#include "pseudoboson/fock.hpp"
#include "pseudoboson/wavefunction.hpp"

namespace pbverify {

namespace pb = pseudoboson;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kLadderMaxOrder = 20;
constexpr int kSMaxOrder = 10;
constexpr int kResolutionMaxOrder = 4;

// Builds one record from `body`, which fills in the measurement. Any module
// error turns into a failed record carrying the message.
class Recorder {
 public:
  Recorder(std::string suite, bool timings) : suite_(std::move(suite)), timings_(timings) {}

  void check(std::string id, std::string relation, Comparison comparison, double expected,
             double tolerance, const std::function<void(Record&)>& body) {
    Record r;
    r.suite = suite_;
    r.check_id = std::move(id);
    r.relation = std::move(relation);
    r.comparison = comparison;
    r.expected = expected;
    r.tolerance = tolerance;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(r);
      judge(r);
    } catch (const std::exception& e) {
      r.measured = kNaN;
      r.pass = false;
      r.detail = e.what();
    }
    if (timings_) {
      r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                         .count();
    }
    records_.push_back(std::move(r));
  }

  std::vector<Record> take() { return std::move(records_); }

 private:
  std::string suite_;
  bool timings_;
  std::vector<Record> records_;
};

pb::SystemPtr system_of(const RunConfig& c) {
  return pb::make_system(c.family, c.alpha, c.family_params());
}

pb::RealLineGrid grid_of(const RunConfig& c) { return pb::real_line_grid(c.grid.L, c.grid.density); }

pb::DiskGrid disk_of(const RunConfig& c) {
  return pb::disk_grid(c.disk.R, c.disk.radial, c.disk.angular);
}

double max_abs(const pb::GridFunction& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

pb::WaveFunction scaled(pb::WaveFunction wf, double s) {
  wf.scale *= s;
  return wf;
}

void gram_suite(const RunConfig& c, Recorder& rec) {
  const auto sys = system_of(c);
  const auto grid = grid_of(c);
  const int n_max = c.n_max;

  const auto residuals = pb::constraint_residuals(*sys);
  rec.check("gram.constraint.superpotential_sum", "W_a + W_b = 2x + alpha", Comparison::AtMost, 0.0,
            1e-10, [&](Record& r) { r.measured = residuals.superpotential_sum; });
  rec.check("gram.constraint.antiderivative_sum", "w_a + w_b = x^2 + alpha x + beta",
            Comparison::AtMost, 0.0, 1e-10,
            [&](Record& r) { r.measured = residuals.antiderivative_sum; });
  rec.check("gram.constraint.derivative", "w_j' = W_j", Comparison::AtMost, 0.0, 1e-6,
            [&](Record& r) { r.measured = residuals.derivative_mismatch; });

  for (pb::Side side : {pb::Side::A, pb::Side::B}) {
    const std::string label = side == pb::Side::A ? "a" : "b";
    rec.check("gram.decay." + label, "|exp(-w_" + label + ")| <= C exp(-|x|)", Comparison::AtLeast,
              0.0, 0.0, [&](Record& r) {
                const auto cert = pb::decay_certificate(*sys, side, c.grid.L);
                r.measured = cert.C;
                std::ostringstream os;
                os << "argmax x = " << cert.argmax;
                r.detail = os.str();
              });
  }

  rec.check("gram.normalizer", "<Psi_0, phi_0> = sqrt(pi) exp(alpha^2/4 - beta)", Comparison::AtMost,
            0.0, 1e-10, [&](Record& r) {
              const auto phi0 = pb::phi_n(sys, 0).sample(grid.nodes);
              const auto psi0 = pb::psi_n(sys, 0).sample(grid.nodes);
              const pb::cplx nu = pb::inner_product(psi0, phi0, grid);
              const pb::cplx closed =
                  std::sqrt(pb::kPi) * std::exp(c.alpha * c.alpha / 4.0 - c.beta);
              r.measured = std::abs(nu - closed) / std::abs(closed);
            });

  pb::GramResult gram;
  bool have_gram = false;
  rec.check("gram.off_diagonal", "<Psi_n, phi_m> = nu delta_nm", Comparison::AtMost, 0.0, 1e-8,
            [&](Record& r) {
              gram = pb::gram_matrix(*sys, n_max, grid);
              have_gram = true;
              r.measured = pb::identity_deviation(gram.matrix).off_diagonal;
            });
  rec.check("gram.diagonal", "<Psi_n, phi_n> = nu", Comparison::AtMost, 0.0, 1e-8, [&](Record& r) {
    if (!have_gram) throw pb::Error("Gram matrix unavailable");
    r.measured = pb::identity_deviation(gram.matrix).diagonal;
  });

  const int ladder_max = std::min(n_max, kLadderMaxOrder);
  using Op = pb::LadderOp;
  rec.check("gram.ladder.N", "N phi_n = n phi_n", Comparison::AtMost, 0.0, 1e-12, [&](Record& r) {
    for (int n = 0; n <= ladder_max; ++n) {
      const auto phi = pb::phi_n(sys, n);
      r.measured = std::max(r.measured, pb::coefficient_residual(pb::apply_op(Op::N, phi), scaled(phi, n)));
    }
  });
  rec.check("gram.ladder.N_dag", "N^dag Psi_n = n Psi_n", Comparison::AtMost, 0.0, 1e-12,
            [&](Record& r) {
              for (int n = 0; n <= ladder_max; ++n) {
                const auto psi = pb::psi_n(sys, n);
                r.measured = std::max(r.measured, pb::coefficient_residual(pb::apply_op(Op::N_dag, psi),
                                                                           scaled(psi, n)));
              }
            });
  rec.check("gram.ladder.a", "a phi_n = sqrt(n) phi_{n-1}", Comparison::AtMost, 0.0, 1e-12,
            [&](Record& r) {
              for (int n = 1; n <= ladder_max; ++n) {
                r.measured = std::max(
                    r.measured, pb::coefficient_residual(pb::apply_op(Op::a, pb::phi_n(sys, n)),
                                                         scaled(pb::phi_n(sys, n - 1), std::sqrt(n))));
              }
            });
  rec.check("gram.ladder.b_dag", "b^dag Psi_n = sqrt(n) Psi_{n-1}", Comparison::AtMost, 0.0, 1e-12,
            [&](Record& r) {
              for (int n = 1; n <= ladder_max; ++n) {
                r.measured = std::max(
                    r.measured, pb::coefficient_residual(pb::apply_op(Op::b_dag, pb::psi_n(sys, n)),
                                                         scaled(pb::psi_n(sys, n - 1), std::sqrt(n))));
              }
            });

  const int s_max = std::min(n_max, kSMaxOrder);
  rec.check("gram.S_map", "S phi_n = Psi_n", Comparison::AtMost, 0.0, 1e-9, [&](Record& r) {
    for (int n = 0; n <= s_max; ++n) {
      const auto image =
          pb::apply_S(*sys, pb::phi_n(sys, n).sample(grid.nodes), grid.nodes, pb::SDirection::S);
      r.measured = std::max(r.measured, max_abs(image - pb::psi_n(sys, n).sample(grid.nodes)));
    }
  });
  rec.check("gram.S_inverse", "S^-1 S phi_n = phi_n", Comparison::AtMost, 0.0, 1e-9, [&](Record& r) {
    for (int n = 0; n <= s_max; ++n) {
      const auto phi = pb::phi_n(sys, n).sample(grid.nodes);
      const auto back = pb::apply_S(*sys, pb::apply_S(*sys, phi, grid.nodes, pb::SDirection::S),
                                    grid.nodes, pb::SDirection::SInverse);
      r.measured = std::max(r.measured, max_abs(back - phi));
    }
  });
  rec.check("gram.intertwining", "S N = N^dag S", Comparison::AtMost, 0.0, 1e-8, [&](Record& r) {
    for (int n = 0; n <= s_max; ++n) {
      const auto phi = pb::phi_n(sys, n);
      const auto lhs =
          pb::apply_S(*sys, pb::apply_op(Op::N, phi).sample(grid.nodes), grid.nodes, pb::SDirection::S);
      const auto rhs = pb::apply_op(Op::N_dag, pb::apply_S(phi)).sample(grid.nodes);
      r.measured = std::max(r.measured, max_abs(lhs - rhs));
    }
  });
}

void riesz_suite(const RunConfig& c, Recorder& rec) {
  const auto sys = system_of(c);
  const auto expected = expected_verdict(c.family, c.alpha);
  const std::string relation =
      expected ? std::string(expected->relation) : std::string("no expectation on record");
  rec.check("riesz.verdict", relation, Comparison::Verdict, kNaN, kNaN, [&](Record& r) {
    const double Ls[] = {8.0, 10.0, 12.0};
    const auto v = pb::riesz_ratio_sup(*sys, Ls);
    r.measured = v.divergence_slope;
    r.measured_label = std::string(pb::to_string(v.verdict));
    r.expected_label = expected ? std::string(pb::to_string(expected->verdict)) : "";
    std::ostringstream os;
    os << "alpha class " << to_string(classify_alpha(c.alpha)) << ", log-sup slope "
       << v.divergence_slope;
    r.detail = os.str();
  });
}

pb::GridFunction target_of(const RunConfig& c, const pb::RealLineGrid& grid) {
  const double x0 = c.target.center;
  const double s = c.target.width;
  return grid.sample([=](double x) { return pb::cplx(std::exp(-0.5 * (x - x0) * (x - x0) / (s * s)), 0.0); });
}

void expand_suite(const RunConfig& c, Recorder& rec) {
  const auto sys = system_of(c);
  const auto grid = grid_of(c);
  const auto target = target_of(c, grid);
  Eigen::VectorXcd coeffs;
  rec.check("expand.reconstruction", "f = sum_n <Psi_n, f> phi_n / nu", Comparison::AtMost, 0.0, 1e-6,
            [&](Record& r) {
              coeffs = pb::expand(*sys, target, c.n_max, pb::BasisSide::Phi, grid);
              r.measured = pb::reconstruct(*sys, coeffs, pb::BasisSide::Phi, grid, target).residual;
            });
  rec.check("expand.idempotence", "expand(reconstruct(c)) = c", Comparison::AtMost, 0.0, 1e-8,
            [&](Record& r) {
              if (coeffs.size() == 0) throw pb::Error("expansion unavailable");
              const auto values = pb::reconstruct(*sys, coeffs, pb::BasisSide::Phi, grid);
              const auto again = pb::expand(*sys, values, c.n_max, pb::BasisSide::Phi, grid);
              r.measured = (again - coeffs).cwiseAbs().maxCoeff();
            });
}

void coherent_suite(const RunConfig& c, Recorder& rec) {
  const auto sys = system_of(c);
  const auto grid = grid_of(c);
  rec.check("coherent.eigen_residual", "a phi(z) = z phi(z), b^dag Psi(z) = z Psi(z)",
            Comparison::AtMost, 0.0, 1e-8, [&](Record& r) {
              for (pb::cplx z : pb::standard_z_lattice()) {
                const auto e = pb::eigen_residual(*sys, z, pb::default_truncation(z), grid);
                r.measured = std::max({r.measured, e.phi, e.psi});
              }
            });

  const auto disk = disk_of(c);
  rec.check("coherent.resolution.phi_psi", "(1/pi) int |phi(z)><Psi(z)| = nu", Comparison::AtMost, 0.0,
            1e-5, [&](Record& r) {
              std::vector<pb::GridFunction> basis;
              for (int n = 0; n <= kResolutionMaxOrder; ++n) basis.push_back(pb::phi_n(sys, n).sample(grid.nodes));
              for (const auto& f : basis) {
                for (const auto& g : basis) {
                  const auto res = pb::resolution_check(*sys, pb::ResolutionKind::PhiPsi, f, g, disk, grid);
                  r.measured = std::max(r.measured, std::abs(res.value - pb::inner_product(f, g, grid)));
                  if (res.truncation_warning) r.detail = "disk truncation warning";
                }
              }
            });
  rec.check("coherent.resolution.psi_psi", "(1/pi) int |Psi(z)><Psi(z)| = nu S", Comparison::AtMost,
            0.0, 1e-6, [&](Record& r) {
              const auto phi0 = pb::phi_n(sys, 0).sample(grid.nodes);
              const auto psi0 = pb::psi_n(sys, 0).sample(grid.nodes);
              const auto res = pb::resolution_check(*sys, pb::ResolutionKind::PsiPsi, phi0, phi0, disk, grid);
              r.measured = std::abs(res.value - pb::inner_product(phi0, psi0, grid));
            });
  rec.check("coherent.resolution.phi_phi", "(1/pi) int |phi(z)><phi(z)| = conj(nu) S^-1",
            Comparison::AtMost, 0.0, 1e-6, [&](Record& r) {
              const auto phi0 = pb::phi_n(sys, 0).sample(grid.nodes);
              const auto psi0 = pb::psi_n(sys, 0).sample(grid.nodes);
              const auto res = pb::resolution_check(*sys, pb::ResolutionKind::PhiPhi, psi0, psi0, disk, grid);
              r.measured = std::abs(res.value - pb::inner_product(psi0, phi0, grid));
            });
}

void fock_suite(const RunConfig& c, Recorder& rec) {
  const auto& fp = c.fock;
  const auto sys = pb::displaced_system(fp.alpha, fp.beta, fp.dim);
  rec.check("fock.commutator", "[A, B] = 1", Comparison::AtMost, 0.0, 1e-12, [&](Record& r) {
    r.measured = pb::commutator_block_residual(sys.A, sys.B, fp.dim - 2);
  });
  rec.check("fock.vacuum", "A phi_0 = 0, B^dag Psi_0 = 0", Comparison::AtMost, 0.0, 1e-10,
            [&](Record& r) {
              r.measured = std::max((sys.A * sys.phi0).norm(), (sys.B.adjoint() * sys.psi0).norm());
            });
  rec.check("fock.gram_factor", "<phi_n, Psi_m> = exp(conj(alpha beta) - (|alpha|^2 + |beta|^2)/2) delta_nm",
            Comparison::AtMost, 0.0, 1e-8, [&](Record& r) {
              const auto g = pb::displaced_gram(sys, fp.n_max);
              const auto factor = pb::displaced_gram_factor(fp.alpha, fp.beta);
              const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(g.rows(), g.cols());
              r.measured = (g - factor * id).cwiseAbs().maxCoeff();
            });
  rec.check("fock.norm_growth", "||phi_n||^2 >= 1 + n |conj(alpha) - beta|^2", Comparison::AtLeast,
            -1e-8, 0.0, [&](Record& r) {
              r.measured = std::numeric_limits<double>::infinity();
              for (const auto& e : pb::norm_growth_check(sys, fp.n_max))
                r.measured = std::min(r.measured, e.norm_sq - e.lower_bound);
              std::ostringstream os;
              os << "margin over the lower bound, n <= " << fp.n_max;
              r.detail = os.str();
            });
  rec.check("fock.v_identity", "V_Psi^dag V_phi = exp(alpha beta - (|alpha|^2 + |beta|^2)/2)",
            Comparison::AtMost, 0.0, 1e-7,
            [&](Record& r) { r.measured = pb::v_operator_identity(sys, fp.dim / 2); });
  const bool collapsed_pair = std::abs(fp.beta - std::conj(fp.alpha)) < 1e-14;
  // f = e_{n_max}: for beta != conj(alpha) the partial sums overshoot ||f||^2 = 1,
  // which no Bessel sequence with bound 1 allows.
  rec.check("fock.bessel",
            collapsed_pair ? "orthonormal family: sum_n |<phi_n, f>|^2 <= ||f||^2"
                           : "not Bessel with bound 1: sum_n |<phi_n, f>|^2 > ||f||^2",
            collapsed_pair ? Comparison::AtMost : Comparison::AtLeast,
            collapsed_pair ? 1.0 : 1.0 + 1e-6, collapsed_pair ? 1.0 + 1e-10 : 0.0, [&](Record& r) {
              const auto fam = pb::displaced_vectors(sys, fp.n_max);
              Eigen::VectorXcd f = Eigen::VectorXcd::Zero(fp.dim);
              f[fp.n_max] = 1.0;
              r.measured = pb::bessel_partial_sums(fam, f).back();
            });
  rec.check("fock.collapse", "beta = conj(alpha) gives an orthonormal family", Comparison::AtMost, 0.0,
            1e-10, [&](Record& r) {
              const auto collapsed = pb::displaced_system(fp.alpha, std::conj(fp.alpha), fp.dim);
              const auto fam = pb::displaced_vectors(collapsed, fp.n_max);
              for (std::size_t n = 0; n < fam.phi.size(); ++n) {
                r.measured = std::max(r.measured, (fam.phi[n] - fam.psi[n]).norm());
                for (std::size_t m = 0; m < fam.phi.size(); ++m) {
                  const double delta = n == m ? 1.0 : 0.0;
                  r.measured = std::max(r.measured, std::abs(fam.phi[n].dot(fam.phi[m]) - delta));
                }
              }
            });
}

}  // namespace

std::vector<Record> run_suite(Suite suite, const RunConfig& config, bool timings) {
  Recorder rec(std::string(to_string(suite)), timings);
  try {
    switch (suite) {
      case Suite::Gram: gram_suite(config, rec); break;
      case Suite::Riesz: riesz_suite(config, rec); break;
      case Suite::Expand: expand_suite(config, rec); break;
      case Suite::Coherent: coherent_suite(config, rec); break;
      case Suite::Fock: fock_suite(config, rec); break;
    }
  } catch (const std::exception& e) {
    rec.check(std::string(to_string(suite)) + ".setup", "plumbing", Comparison::AtMost, 0.0, 0.0,
              [&](Record&) { throw pb::Error(e.what()); });
  }
  return rec.take();
}

Report run_suites(const RunConfig& config, const std::vector<Suite>& suites,
                  const RunOptions& options, std::string command) {
  Report report;
  report.command = std::move(command);
  report.config_json = config_to_json(config);
  std::vector<Suite> ordered;
  for (Suite s : all_suites())
    if (std::find(suites.begin(), suites.end(), s) != suites.end()) ordered.push_back(s);

  std::vector<std::vector<Record>> parts(ordered.size());
  if (options.parallel) {
    std::vector<std::future<std::vector<Record>>> futures;
    for (Suite s : ordered)
      futures.push_back(std::async(std::launch::async, run_suite, s, std::cref(config), options.timings));
    for (std::size_t k = 0; k < futures.size(); ++k) parts[k] = futures[k].get();
  } else {
    for (std::size_t k = 0; k < ordered.size(); ++k) parts[k] = run_suite(ordered[k], config, options.timings);
  }
  for (auto& part : parts)
    for (auto& r : part) report.records.push_back(std::move(r));
  return report;
}

Report run_verify(const RunConfig& config, const RunOptions& options) {
  return run_suites(config, config.suites, options, "verify");
}

std::string expansion_csv(const RunConfig& config) {
  const auto sys = system_of(config);
  const auto grid = grid_of(config);
  const auto coeffs = pb::expand(*sys, target_of(config, grid), config.n_max, pb::BasisSide::Phi, grid);
  std::ostringstream os;
  os << "n,re,im\n";
  char buf[96];
  for (Eigen::Index n = 0; n < coeffs.size(); ++n) {
    std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g\n", static_cast<long>(n), coeffs[n].real(),
                  coeffs[n].imag());
    os << buf;
  }
  return os.str();
}

}  // namespace pbverify
