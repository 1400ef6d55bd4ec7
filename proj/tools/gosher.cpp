// gosher: support-function toolkit for planar convex bodies.
// Subcommands: gen, info, verify, sweep, plot.
// Exit codes: 0 success, 1 inequality violation, 2 usage/I/O error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "greenosher/dilation.hpp"
#include "greenosher/greenosher.hpp"
#include "greenosher/io.hpp"
#include "greenosher/measures.hpp"
#include "greenosher/support_body.hpp"
#include "greenosher/svg.hpp"
#include "greenosher/sweep.hpp"

namespace {

using namespace greenosher;

std::vector<ConvexFunctional> select_functionals(const std::string& name,
                                                 double power_exponent) {
  std::vector<ConvexFunctional> all = functional_registry(power_exponent);
  if (name == "all") return all;
  for (ConvexFunctional& f : all)
    if (f.name == name) return {std::move(f)};
  throw CLI::ValidationError("--functional",
                             "unknown functional '" + name + "'");
}

int cmd_gen(int degree, std::uint64_t seed, double decay,
            const std::string& out_path) {
  SupportBody body = random_body(seed, degree, decay);
  save_body(body, out_path);
  return 0;
}

int cmd_info(const std::string& path) {
  SupportBody body = load_body(path);
  ConvexityCheck check = validate(body);
  std::printf("a0:            %.12g\n", body.a0);
  std::printf("degree:        %d\n", body.degree());
  std::printf("area:          %.12g\n", area(body));
  std::printf("min(h + h''):  %.12g\n", check.min_value);
  return 0;
}

int cmd_verify(const std::string& k_path, const std::string& l_path,
               const std::string& functional, std::size_t grid, double tol,
               double power_exponent, const std::string& report_path) {
  SupportBody k = load_body(k_path);
  SupportBody l = load_body(l_path);
  std::vector<ConvexFunctional> fns =
      select_functionals(functional, power_exponent);

  DilationPlacement placed = to_dilation_position(k, l, grid);
  GreenOsherReport report =
      verify(placed.k, placed.l, placed.certificate, fns, grid);

  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw ParseError("cannot write report file: " + report_path);
    out << report_to_json(report);
  }

  bool ok = true;
  for (const FunctionalCheck& f : report.functionals) {
    std::printf("%-12s lhs=%.9f rhs=%.9f slack=%.3e\n", f.name.c_str(), f.lhs,
                f.rhs, f.slack);
    if (f.slack < -tol) ok = false;
  }
  std::printf("homothetic: %s (residual %.3e)\n",
              report.homothetic ? "true" : "false", report.residual);
  return ok ? 0 : 1;
}

int cmd_sweep(int trials, std::uint64_t seed, int degree,
              const std::string& functional, std::size_t grid, double tol,
              double power_exponent, int jobs,
              const std::string& summary_path) {
  if (functional != "all")
    throw CLI::ValidationError("--functional", "sweep supports only 'all'");
  SweepOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  opt.degree = degree;
  opt.grid = grid;
  opt.tol = tol;
  opt.jobs = jobs;
  opt.power_exponent = power_exponent;

  SweepResult result = run_sweep(opt);
  std::string text = summary_to_json(result.summary);
  if (!summary_path.empty()) {
    std::ofstream out(summary_path);
    if (!out) throw ParseError("cannot write summary file: " + summary_path);
    out << text;
  }
  std::fputs(text.c_str(), stdout);
  return result.summary.failures == 0 ? 0 : 1;
}

int cmd_plot(const std::string& k_path, const std::string& l_path,
             const std::string& out_path, bool rho) {
  SupportBody k = load_body(k_path);
  SupportBody l = load_body(l_path);
  RadiusResult in = inradius(k, l);
  RadiusResult out = outradius(k, l);
  std::ofstream file(out_path);
  if (!file) throw ParseError("cannot write SVG file: " + out_path);
  write_plot_svg(file, k, l, in.value, out.value, rho);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerics for planar convex bodies given by truncated "
               "trigonometric support functions"};
  app.require_subcommand(1);

  int degree = 6;
  std::uint64_t seed = 0;
  double decay = 2.5;
  std::string out_path, k_path, l_path, report_path, summary_path;
  std::string functional = "all";
  std::size_t grid = 1024;
  double tol = 1e-9;
  double power_exponent = 3.0;
  int trials = 100;
  int jobs = 0;
  bool rho = false;

  CLI::App* gen = app.add_subcommand("gen", "generate a random valid body");
  gen->add_option("--degree", degree, "highest harmonic")->capture_default_str();
  gen->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen->add_option("--decay", decay, "harmonic amplitude decay exponent")
      ->capture_default_str();
  gen->add_option("--out", out_path, "output body file")->required();

  CLI::App* info = app.add_subcommand("info", "print body diagnostics");
  info->add_option("body", k_path, "body file")->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "verify the inequality for one pair");
  verify_cmd->add_option("--k", k_path, "body K file")->required();
  verify_cmd->add_option("--l", l_path, "body L file")->required();
  verify_cmd->add_option("--functional", functional, "registry name or 'all'")
      ->capture_default_str();
  verify_cmd->add_option("--grid", grid, "grid node count")
      ->capture_default_str();
  verify_cmd->add_option("--tol", tol, "slack tolerance")
      ->capture_default_str();
  verify_cmd->add_option("--power", power_exponent, "exponent of the power functional")
      ->capture_default_str();
  verify_cmd->add_option("--report", report_path, "report JSON output path");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "verify a randomized corpus of pairs");
  sweep_cmd->add_option("--trials", trials, "number of pairs")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", seed, "base seed")->capture_default_str();
  sweep_cmd->add_option("--degree", degree, "highest harmonic")
      ->capture_default_str();
  sweep_cmd->add_option("--functional", functional, "must be 'all'")
      ->capture_default_str();
  sweep_cmd->add_option("--grid", grid, "grid node count")
      ->capture_default_str();
  sweep_cmd->add_option("--tol", tol, "slack tolerance")
      ->capture_default_str();
  sweep_cmd->add_option("--power", power_exponent, "exponent of the power functional")
      ->capture_default_str();
  sweep_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)")
      ->capture_default_str();
  sweep_cmd->add_option("--summary", summary_path, "summary JSON output path");

  CLI::App* plot = app.add_subcommand("plot", "emit an SVG figure");
  plot->add_option("--k", k_path, "body K file")->required();
  plot->add_option("--l", l_path, "body L file")->required();
  plot->add_option("--out", out_path, "SVG output path")->required();
  plot->add_flag("--rho", rho, "add a polar inset of rho(theta)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(degree, seed, decay, out_path);
    if (info->parsed()) return cmd_info(k_path);
    if (verify_cmd->parsed())
      return cmd_verify(k_path, l_path, functional, grid, tol, power_exponent,
                        report_path);
    if (sweep_cmd->parsed())
      return cmd_sweep(trials, seed, degree, functional, grid, tol,
                       power_exponent, jobs, summary_path);
    if (plot->parsed()) return cmd_plot(k_path, l_path, out_path, rho);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
