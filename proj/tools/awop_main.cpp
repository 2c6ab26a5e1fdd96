// Command-line surface over the awop library: special-function evaluation,
// the spectral/integral operator pair, the q-Hermite analogue, the ellipse
// map, grid exports for plotting, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 numerical (truncation/convergence) failure.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "awop/awoperator.hpp"
#include "awop/chebyshev.hpp"
#include "awop/conformal.hpp"
#include "awop/io.hpp"
#include "awop/qcore.hpp"
#include "awop/qhermite.hpp"
#include "awop/quadrature.hpp"
#include "awop/theta.hpp"
#include "awop/verify.hpp"

namespace {

constexpr double pi = std::numbers::pi;

struct RunConfig {
  double q = 0.5;
  int n = 128;
  int m = 256;
  std::string mode = "spectral";
  std::string input_path;
  std::string output_path;
  std::string format = "csv";
  std::string only;
  std::string target;
  double rel_eps = 1e-15;
  std::size_t max_terms = 1000000;
  double z = 0.0;
  double b = 0.75;
  double zeta = 0.2;
  double z_re = 0.0, z_im = 0.0;
  double shrink = 0.999;
  std::optional<double> tol_override;
  bool apply = false;
};

awop::Tolerance tolerance_of(const RunConfig& cfg) {
  return awop::Tolerance{cfg.rel_eps, cfg.max_terms};
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw awop::InputError("cli: cannot open input file '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw awop::InputError("cli: cannot open output file '" + path + "'");
  return out;
}

int cmd_theta_eval(const RunConfig& cfg) {
  awop::QParameter q(cfg.q);
  awop::Tolerance tol = tolerance_of(cfg);
  awop::ThetaEvaluation ev = awop::theta4_eval(cfg.z, q, tol);
  double fourier = awop::theta4_logderiv(cfg.z, q, tol, awop::ThetaMethod::FourierSeries);
  double ratio = awop::theta4_logderiv(cfg.z, q, tol, awop::ThetaMethod::DefiningSeries);
  std::cout << "theta4 = " << awop::format_double(ev.value) << " (" << ev.terms_used
            << " terms)\n";
  std::cout << "logderiv (fourier)  = " << awop::format_double(fourier) << "\n";
  std::cout << "logderiv (defining) = " << awop::format_double(ratio) << "\n";
  std::cout << "cross-method diff   = " << awop::format_double(std::abs(fourier - ratio))
            << "\n";
  return 0;
}

int cmd_dq_apply(const RunConfig& cfg) {
  if (cfg.mode != "spectral")
    throw awop::InputError("cli: dq-apply supports --mode spectral only");
  awop::QParameter q(cfg.q);
  auto in = open_input(cfg.input_path);
  awop::ChebyshevSeriesT f(awop::read_coefficients(in));
  awop::ChebyshevSeriesU g = awop::dq_spectral(f, q);
  auto out = open_output(cfg.output_path);
  awop::write_coefficients(out, g.coeffs);
  return 0;
}

// U-coefficients from samples g(cos phi_j) on the trapezoid grid.
std::vector<double> u_coeffs_from_samples(const awop::SampledFunction& g, int degree) {
  std::vector<double> c(degree + 1, 0.0);
  for (std::size_t j = 0; j < g.values.size(); ++j) {
    double phi = g.rule.nodes[j];
    double wgs = g.rule.weights[j] * g.values[j] * std::sin(phi) / pi;
    for (int n = 1; n <= degree; ++n) c[n] += wgs * std::sin(n * phi);
  }
  return c;
}

int cmd_dq_invert(const RunConfig& cfg) {
  awop::QParameter q(cfg.q);
  awop::Tolerance tol = tolerance_of(cfg);
  if (cfg.mode == "spectral") {
    auto in = open_input(cfg.input_path);
    awop::ChebyshevSeriesU g(awop::read_coefficients(in));
    awop::ChebyshevSeriesT f = awop::dq_inverse_spectral(g, q);

    // cross-path check through the integral operator
    awop::QuadratureRule grid = awop::periodic_trapezoid(cfg.m);
    std::vector<double> samples(grid.nodes.size());
    for (std::size_t j = 0; j < samples.size(); ++j)
      samples[j] = awop::synthesize(g, std::cos(grid.nodes[j]));
    std::vector<double> theta_out(64);
    for (std::size_t i = 0; i < theta_out.size(); ++i)
      theta_out[i] = pi * (i + 0.5) / theta_out.size();
    auto integral = awop::dq_inverse_integral(awop::SampledFunction(grid, samples), q,
                                              theta_out, awop::KernelArgument::PhiMinusTheta,
                                              tol);
    double dev = 0.0;
    for (std::size_t i = 0; i < theta_out.size(); ++i)
      dev = std::max(dev,
                     std::abs(integral[i] - awop::synthesize(f, std::cos(theta_out[i]))));
    auto out = open_output(cfg.output_path);
    awop::write_coefficients(out, f.coeffs);
    std::cout << "cross-path max deviation = " << awop::format_double(dev) << "\n";
    return 0;
  }
  if (cfg.mode == "integral") {
    auto in = open_input(cfg.input_path);
    auto rows = awop::read_samples(in);
    awop::QuadratureRule grid = awop::periodic_trapezoid(static_cast<int>(rows.size()));
    awop::validate_nodes(rows, grid.nodes, "periodic-trapezoid");
    std::vector<double> samples(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) samples[j] = rows[j].second;
    awop::SampledFunction g(grid, samples);
    auto values = awop::dq_inverse_integral(g, q, grid.nodes,
                                            awop::KernelArgument::PhiMinusTheta, tol);

    int degree = std::min<int>(static_cast<int>(rows.size()) / 2 - 1, cfg.n);
    awop::ChebyshevSeriesU gu(u_coeffs_from_samples(g, degree));
    awop::ChebyshevSeriesT f = awop::dq_inverse_spectral(gu, q);
    double dev = 0.0;
    for (std::size_t j = 0; j < grid.nodes.size(); ++j)
      dev = std::max(dev,
                     std::abs(values[j] - awop::synthesize(f, std::cos(grid.nodes[j]))));
    auto out = open_output(cfg.output_path);
    awop::write_samples(out, grid.nodes, values);
    std::cout << "cross-path max deviation = " << awop::format_double(dev) << "\n";
    return 0;
  }
  throw awop::InputError("cli: dq-invert --mode must be spectral or integral");
}

int cmd_hermite(const RunConfig& cfg) {
  awop::QParameter q(cfg.q);
  awop::Tolerance tol = tolerance_of(cfg);
  if (cfg.mode == "spectral") {
    auto in = open_input(cfg.input_path);
    awop::QHermiteSeries series{q, awop::read_coefficients(in)};
    awop::QHermiteSeries result = cfg.apply ? awop::dq_hermite_spectral(series)
                                            : awop::dq_inverse_hermite_spectral(series);
    auto out = open_output(cfg.output_path);
    awop::write_coefficients(out, result.coeffs);
    return 0;
  }
  if (cfg.mode == "integral") {
    if (cfg.apply)
      throw awop::InputError("cli: hermite --apply supports --mode spectral only");
    auto in = open_input(cfg.input_path);
    auto rows = awop::read_samples(in);
    awop::QuadratureRule grid = awop::gauss_chebyshev_first(static_cast<int>(rows.size()));
    awop::validate_nodes(rows, grid.nodes, "gauss-chebyshev-first");
    std::vector<double> samples(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) samples[j] = rows[j].second;
    awop::SampledFunction g(grid, samples);
    auto values = awop::dq_inverse_hermite_integral(g, q, grid.nodes, 0.0, tol);

    int degree = std::min<int>(16, static_cast<int>(rows.size()) / 2);
    awop::QHermiteSeries coeffs = awop::analyze_hermite(g, q, degree, tol);
    awop::QHermiteSeries f = awop::dq_inverse_hermite_spectral(coeffs);
    double dev = 0.0;
    for (std::size_t k = 0; k < grid.nodes.size(); ++k)
      dev = std::max(dev, std::abs(values[k] - awop::synthesize(f, grid.nodes[k])));
    auto out = open_output(cfg.output_path);
    awop::write_samples(out, grid.nodes, values);
    std::cout << "cross-path max deviation = " << awop::format_double(dev) << "\n";
    return 0;
  }
  throw awop::InputError("cli: hermite --mode must be spectral or integral");
}

int cmd_conformal(const RunConfig& cfg) {
  awop::Tolerance tol = tolerance_of(cfg);
  awop::EllipseGeometry geom = awop::ellipse_from_b(cfg.b);
  std::complex<double> z(cfg.z_re, cfg.z_im), zeta(cfg.zeta, 0.0);
  std::complex<double> k = awop::bergman_kernel(z, zeta, geom, tol);
  std::complex<double> g = awop::mapping_g(z, zeta, geom, tol);
  std::complex<double> f = awop::riemann_map(z, zeta, geom, tol);
  std::cout << "ellipse: a = " << awop::format_double(geom.a)
            << ", b = " << awop::format_double(geom.b)
            << ", rho = " << awop::format_double(geom.rho)
            << ", q = " << awop::format_double(geom.q) << "\n";
  std::cout << "K(z,zeta) = " << awop::format_double(k.real()) << " + "
            << awop::format_double(k.imag()) << "i\n";
  std::cout << "g(z,zeta) = " << awop::format_double(g.real()) << " + "
            << awop::format_double(g.imag()) << "i\n";
  std::cout << "f(z,zeta) = " << awop::format_double(f.real()) << " + "
            << awop::format_double(f.imag()) << "i\n";
  std::cout << "|f| = " << awop::format_double(std::abs(f)) << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg, bool q_given) {
  awop::VerifyOptions opt;
  if (q_given) opt.q = cfg.q;
  opt.tol = cfg.tol_override;
  opt.degree = cfg.n;
  opt.grid_m = cfg.m;
  opt.series_tol = tolerance_of(cfg);
  std::vector<std::string> names;
  if (cfg.only.empty())
    names = awop::verify_suite_names();
  else
    names.push_back(cfg.only);
  bool all_pass = true;
  for (const auto& name : names) {
    awop::SuiteResult res = awop::run_verify_suite(name, opt);
    std::cout << (res.pass ? "PASS " : "FAIL ") << res.name << " (" << res.detail << ")\n";
    all_pass = all_pass && res.pass;
  }
  return all_pass ? 0 : 1;
}

int cmd_export_grid(const RunConfig& cfg) {
  awop::Tolerance tol = tolerance_of(cfg);
  awop::GridExport grid;
  if (cfg.target == "theta-logderiv")
    grid = awop::grid_theta_logderiv(awop::QParameter(cfg.q), cfg.n, tol);
  else if (cfg.target == "kernel-F")
    grid = awop::grid_kernel_F(awop::QParameter(cfg.q), cfg.n, cfg.m, tol);
  else if (cfg.target == "kernel-H")
    grid = awop::grid_kernel_H(awop::QParameter(cfg.q), cfg.n, cfg.m, tol);
  else if (cfg.target == "weight-w")
    grid = awop::grid_weight_w(awop::QParameter(cfg.q), cfg.n, tol);
  else if (cfg.target == "map-modulus")
    grid = awop::grid_map_modulus(cfg.b, cfg.zeta, cfg.shrink, cfg.n, tol);
  else
    throw awop::InputError("cli: unknown export-grid target '" + cfg.target + "'");
  std::string text = (cfg.format == "json") ? awop::to_json(grid) : awop::to_csv(grid);
  if (cfg.output_path.empty()) {
    std::cout << text;
  } else {
    auto out = open_output(cfg.output_path);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"awop: q-difference operator toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub, bool with_io) {
    sub->add_option("--q", cfg.q, "base parameter q in (0,1)");
    sub->add_option("--N", cfg.n, "spectral degree / primary grid size");
    sub->add_option("--M", cfg.m, "quadrature grid size / secondary grid size");
    sub->add_option("--rel-eps", cfg.rel_eps, "relative truncation threshold");
    sub->add_option("--max-terms", cfg.max_terms, "series term cap");
    if (with_io) {
      sub->add_option("--input", cfg.input_path, "input file");
      sub->add_option("--output", cfg.output_path, "output file");
      sub->add_option("--format", cfg.format, "csv or json")
          ->check(CLI::IsMember({"csv", "json"}));
    }
  };

  CLI::App* theta = app.add_subcommand("theta-eval", "evaluate theta4 and its log-derivative");
  add_common(theta, false);
  theta->add_option("--z", cfg.z, "evaluation point");

  CLI::App* dq_apply = app.add_subcommand("dq-apply", "apply the operator to T-coefficients");
  add_common(dq_apply, true);
  dq_apply->add_option("--mode", cfg.mode, "spectral");

  CLI::App* dq_invert = app.add_subcommand("dq-invert", "apply the right inverse");
  add_common(dq_invert, true);
  dq_invert->add_option("--mode", cfg.mode, "spectral (U-coefficients) or integral (samples)");

  CLI::App* hermite = app.add_subcommand("hermite", "operator in the q-Hermite basis");
  add_common(hermite, true);
  hermite->add_option("--mode", cfg.mode, "spectral or integral");
  hermite->add_flag("--apply", cfg.apply, "apply the forward operator instead of the inverse");

  CLI::App* conformal = app.add_subcommand("conformal", "ellipse-to-disc mapping data");
  add_common(conformal, false);
  conformal->add_option("--b", cfg.b, "semi-minor axis");
  conformal->add_option("--zeta", cfg.zeta, "normalization point (real)");
  conformal->add_option("--z-re", cfg.z_re, "Re z");
  conformal->add_option("--z-im", cfg.z_im, "Im z");

  CLI::App* verify = app.add_subcommand("verify", "run the named verification suites");
  add_common(verify, false);
  verify->add_option("--only", cfg.only, "run a single suite by name");
  double tol_opt = 0.0;
  CLI::Option* tol_flag = verify->add_option("--tol", tol_opt, "override pass thresholds");

  CLI::App* exportg = app.add_subcommand("export-grid", "write field grids as csv/json");
  add_common(exportg, true);
  exportg->add_option("--target", cfg.target,
                      "theta-logderiv | kernel-F | kernel-H | weight-w | map-modulus")
      ->required();
  exportg->add_option("--b", cfg.b, "semi-minor axis (map-modulus)");
  exportg->add_option("--zeta", cfg.zeta, "normalization point (map-modulus)");
  exportg->add_option("--shrink", cfg.shrink, "boundary shrink factor (map-modulus)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (theta->parsed()) return cmd_theta_eval(cfg);
    if (dq_apply->parsed()) return cmd_dq_apply(cfg);
    if (dq_invert->parsed()) return cmd_dq_invert(cfg);
    if (hermite->parsed()) return cmd_hermite(cfg);
    if (conformal->parsed()) return cmd_conformal(cfg);
    if (verify->parsed()) {
      if (tol_flag->count() > 0) cfg.tol_override = tol_opt;
      return cmd_verify(cfg, verify->count("--q") > 0);
    }
    if (exportg->parsed()) return cmd_export_grid(cfg);
  } catch (const awop::TruncationFailure& e) {
    std::cerr << "awop: numerical failure: " << e.what()
              << " (partial value " << e.partial_value << ")\n";
    return 3;
  } catch (const awop::InputError& e) {
    std::cerr << "awop: input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "awop: input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "awop: numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "awop: error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
