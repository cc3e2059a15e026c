#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "radmom/commands.hpp"
#include "radmom/config.hpp"
#include "radmom/errors.hpp"
#include "radmom/kernels.hpp"

namespace {

void add_common(CLI::App& app, radmom::RunConfig& cfg, std::string& format) {
  app.add_option("--lmax", cfg.l_max, "basis truncation");
  app.add_option("--ntheta", cfg.n_theta, "theta quadrature nodes (0 = auto)");
  app.add_option("--nphi", cfg.n_phi, "phi quadrature nodes (0 = auto)");
  app.add_option("--gamma-max", cfg.gamma_max, "half-range of the gamma grid");
  app.add_option("--gamma-points", cfg.gamma_points, "gamma grid size (odd)");
  app.add_option("--tolerance-scale", cfg.tolerance_scale, "scale applied to all tolerances");
  app.add_option("--out", cfg.out, "output file path");
  app.add_option("--format", format, "output format: csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical momentum decomposition toolkit"};
  app.require_subcommand(1);

  radmom::RunConfig cfg;
  std::string format = "csv";
  std::string op_name = "all";
  int l = 0;

  CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
  CLI::App* fig1 = app.add_subcommand("fig1", "ground-state p_z and Pi_z distributions");
  CLI::App* fig2 = app.add_subcommand("fig2", "signed difference of the two distributions");
  CLI::App* qcoeff = app.add_subcommand("qcoeff", "continuum expansion coefficients of Y_l0");
  CLI::App* dump = app.add_subcommand("spectrum-dump", "nonzero operator matrix elements");
  for (CLI::App* sub : {verify, fig1, fig2, qcoeff, dump}) add_common(*sub, cfg, format);
  qcoeff->add_option("--l", l, "harmonic degree")->check(CLI::NonNegativeNumber);
  dump->add_option("--op", op_name, "operator to dump (Lx..rPiz, or all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? radmom::exit_ok : radmom::exit_usage;
  }

  cfg.format = format == "svg" ? radmom::OutputFormat::svg : radmom::OutputFormat::csv;

  try {
    cfg.validate();
    if (verify->parsed()) return radmom::cmd_verify(cfg, std::cout);
    if (fig1->parsed()) return radmom::cmd_fig1(cfg, std::cout);
    if (fig2->parsed()) return radmom::cmd_fig2(cfg, std::cout);
    if (qcoeff->parsed()) return radmom::cmd_qcoeff(cfg, l, std::cout);
    if (dump->parsed()) return radmom::cmd_spectrum_dump(cfg, op_name, std::cout);
  } catch (const radmom::io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return radmom::exit_io;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return radmom::exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return radmom::exit_check_failure;
  }
  return radmom::exit_usage;
}
