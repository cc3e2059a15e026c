#include "radmom/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "radmom/csvio.hpp"
#include "radmom/curves.hpp"
#include "radmom/errors.hpp"
#include "radmom/hydrogen.hpp"
#include "radmom/operators.hpp"
#include "radmom/transforms.hpp"
#include "radmom/units.hpp"
#include "radmom/verify.hpp"

namespace radmom {

namespace {

void stamp_config(CsvTable& table, const RunConfig& cfg) {
  table.set("l_max", std::to_string(cfg.l_max));
  table.set("n_theta", std::to_string(cfg.theta_count()));
  table.set("n_phi", std::to_string(cfg.phi_count()));
  table.set("gamma_max", cfg.gamma_max);
  table.set("gamma_points", std::to_string(cfg.gamma_points));
  table.set("hbar", hbar);
}

} // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& log) {
  const auto results = run_all_checks(cfg);
  log << format_check_table(results);
  std::size_t failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  log << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? exit_ok : exit_check_failure;
}

int cmd_fig1(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const GammaGrid grid = GammaGrid::symmetric(cfg.gamma_max, cfg.gamma_points);
  const HydrogenState ground = HydrogenState::ground();
  const MomentumTransform mt(ground);
  const DistributionCurve pz = mt.marginal_curve(grid.points);
  const DistributionCurve piz = pi_z_density(ground, grid);

  log << "p_z marginal:     peak " << format_full(pz.values[grid.points.size() / 2])
      << ", trapezoid integral " << format_full(pz.quadrature_sum) << "\n";
  log << "Pi_z distribution: peak " << format_full(piz.values[grid.points.size() / 2])
      << ", trapezoid integral " << format_full(piz.quadrature_sum) << "\n";

  if (cfg.out.empty()) return exit_ok;
  if (cfg.format == OutputFormat::svg) {
    write_svg_plot(cfg.out, grid.points,
                   {{"p_z", "#1f4fd8", pz.values, false}, {"Pi_z", "#d8321f", piz.values, true}});
  } else {
    CsvTable table;
    stamp_config(table, cfg);
    table.set("raw_to_normalized_ratio", raw_to_normalized_ratio());
    table.set("pz_integral", pz.quadrature_sum);
    table.set("piz_integral", piz.quadrature_sum);
    table.columns = {"gamma", "pz_density", "piz_density"};
    table.data = {grid.points, pz.values, piz.values};
    write_csv(cfg.out, table);
  }
  log << "wrote " << cfg.out << "\n";
  return exit_ok;
}

int cmd_fig2(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const GammaGrid grid = GammaGrid::symmetric(cfg.gamma_max, cfg.gamma_points);
  const DistributionCurve curve = combined_z_distribution(grid);

  std::size_t crossings = 0;
  for (std::size_t i = grid.points.size() / 2 + 1; i + 1 < grid.points.size(); ++i)
    if (curve.values[i] * curve.values[i + 1] < 0.0) {
      ++crossings;
      log << "sign change near gamma = "
          << format_full(0.5 * (grid.points[i] + grid.points[i + 1])) << "\n";
    }
  log << crossings << " sign change(s) at positive gamma\n";

  if (cfg.out.empty()) return exit_ok;
  if (cfg.format == OutputFormat::svg) {
    write_svg_plot(cfg.out, grid.points, {{"signed_density", "#1f4fd8", curve.values, false}});
  } else {
    CsvTable table;
    stamp_config(table, cfg);
    table.columns = {"gamma", "signed_density"};
    table.data = {grid.points, curve.values};
    write_csv(cfg.out, table);
  }
  log << "wrote " << cfg.out << "\n";
  return exit_ok;
}

int cmd_qcoeff(const RunConfig& cfg, int l, std::ostream& log) {
  cfg.validate();
  if (l < 0) throw std::invalid_argument("l >= 0 required");
  const GammaGrid grid = GammaGrid::symmetric(cfg.gamma_max, cfg.gamma_points);

  CsvTable table;
  stamp_config(table, cfg);
  table.set("l", std::to_string(l));
  table.columns = {"gamma", "re_q", "im_q", "abs_sq"};
  table.data.assign(l == 0 ? 5 : 4, {});
  if (l == 0) table.columns.push_back("analytic");
  double parseval = 0.0;
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const double g = grid.points[i];
    const cplx q = q_coeff(l, g);
    table.data[0].push_back(g);
    table.data[1].push_back(q.real());
    table.data[2].push_back(q.imag());
    table.data[3].push_back(std::norm(q));
    if (l == 0) table.data[4].push_back(q00_analytic(g));
    parseval += std::norm(q);
  }
  parseval = trapezoid_integral(table.data[0], table.data[3]);
  table.set("abs_sq_integral", parseval);
  log << "l = " << l << ": integral |q|^2 dgamma = " << format_full(parseval) << "\n";

  if (!cfg.out.empty()) {
    write_csv(cfg.out, table);
    log << "wrote " << cfg.out << "\n";
  }
  return exit_ok;
}

int cmd_spectrum_dump(const RunConfig& cfg, const std::string& op_name, std::ostream& log) {
  cfg.validate();
  const BasisTruncation basis{cfg.l_max};
  const AngularQuadrature q = build_quadrature(cfg.theta_count(), cfg.phi_count());

  const char* names[] = {"Lx", "Ly", "Lz", "erx", "ery", "erz", "rPix", "rPiy", "rPiz"};
  bool known = op_name == "all";
  for (const char* n : names) known = known || op_name == n;
  if (!known) throw std::invalid_argument("unknown operator name: " + op_name);

  std::vector<OperatorMatrix> ops;
  std::vector<const char*> selected;
  for (int k = 0; k < 9; ++k) {
    if (op_name != "all" && op_name != names[k]) continue;
    const Axis a = static_cast<Axis>(k % 3);
    if (k < 3)
      ops.push_back(build_angular_momentum(a, basis));
    else if (k < 6)
      ops.push_back(build_direction_cosine(a, basis, q));
    else
      ops.push_back(build_geometric_momentum(a, basis, q));
    selected.push_back(names[k]);
  }

  CsvTable table;
  stamp_config(table, cfg);
  table.columns = {"op", "lp", "mp", "l", "m", "re", "im"};
  std::vector<std::vector<std::string>> text_rows;

  const std::size_t dim = basis.dimension();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const cplx v = ops[k].data(i, j);
        if (std::abs(v) <= 1e-14) continue;
        ++count;
        const BasisIndex bi = BasisIndex::from_flat(i), bj = BasisIndex::from_flat(j);
        text_rows.push_back({selected[k], std::to_string(bi.l), std::to_string(bi.m),
                             std::to_string(bj.l), std::to_string(bj.m), format_full(v.real()),
                             format_full(v.imag())});
      }
    log << selected[k] << ": " << count << " entries above 1e-14\n";
  }

  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out);
    if (!out) throw io_error("cannot open for writing: " + cfg.out);
    for (const auto& [kk, vv] : table.header) out << "# " << kk << "=" << vv << "\n";
    out << "op,lp,mp,l,m,re,im\n";
    for (const auto& row : text_rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out << row[c] << (c + 1 < row.size() ? "," : "\n");
    }
    if (!out) throw io_error("write failed: " + cfg.out);
    log << "wrote " << cfg.out << "\n";
  }
  return exit_ok;
}

} // namespace radmom
