#include "radmom/ylm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "radmom/kernels.hpp"

namespace radmom {

namespace {

// Fully normalized associated Legendre values Pbar_lm(x) for 0 <= m <= l <= l_max,
// Condon-Shortley phase included: Y_lm = Pbar_lm(cos theta) e^{i m phi}.
// Upward recursion in l from the m-diagonal; extended-precision accumulation
// keeps the rounding growth with l below the quadrature projection budget.
void legendre_all(int l_max, double x, double s, std::vector<double>& out) {
  const auto at = [](int l, int m) { return std::size_t(l * (l + 1) / 2 + m); };
  std::vector<long double> p(std::size_t((l_max + 1) * (l_max + 2) / 2), 0.0L);
  const long double lx = x, ls = s;
  p[at(0, 0)] = 1.0L / std::sqrt(4.0L * std::numbers::pi_v<long double>);
  for (int m = 1; m <= l_max; ++m)
    p[at(m, m)] = -std::sqrt((2.0L * m + 1.0L) / (2.0L * m)) * ls * p[at(m - 1, m - 1)];
  for (int m = 0; m < l_max; ++m)
    p[at(m + 1, m)] = std::sqrt(2.0L * m + 3.0L) * lx * p[at(m, m)];
  for (int m = 0; m <= l_max; ++m) {
    for (int l = m + 2; l <= l_max; ++l) {
      const long double a =
          std::sqrt((4.0L * l * l - 1.0L) / ((long double)(l) * l - (long double)(m) * m));
      const long double b = std::sqrt(((long double)(l - 1) * (l - 1) - (long double)(m) * m) /
                                      (4.0L * (long double)(l - 1) * (l - 1) - 1.0L));
      p[at(l, m)] = a * (lx * p[at(l - 1, m)] - b * p[at(l - 2, m)]);
    }
  }
  out.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = double(p[i]);
}

} // namespace

double legendre_norm_l0(int l, double x) {
  if (l < 0) throw std::invalid_argument("legendre_norm_l0: l >= 0 required");
  double p0 = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  if (l == 0) return p0;
  double p1 = std::sqrt(3.0) * x * p0;
  for (int k = 1; k < l; ++k) {
    const double a = std::sqrt((4.0 * (k + 1.0) * (k + 1.0) - 1.0) / ((k + 1.0) * (k + 1.0)));
    const double b = std::sqrt((double(k) * k) / (4.0 * double(k) * k - 1.0));
    const double p2 = a * (x * p1 - b * p0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

cplx eval_ylm(BasisIndex idx, double theta, double phi) {
  require_valid(idx);
  if (theta < 0.0 || theta > std::numbers::pi)
    throw std::domain_error("eval_ylm: theta in [0, pi] required");
  const int am = std::abs(idx.m);
  const double x = std::cos(theta), s = std::sin(theta);
  std::vector<double> p;
  legendre_all(idx.l, x, s, p);
  const double pbar = p[std::size_t(idx.l * (idx.l + 1) / 2 + am)];
  const cplx phase = std::polar(1.0, double(am) * phi);
  if (idx.m >= 0) return pbar * phase;
  const double sign = (am % 2 == 0) ? 1.0 : -1.0;
  return sign * pbar * std::conj(phase);
}

cplx eval_ylm_dtheta(BasisIndex idx, double theta, double phi) {
  require_valid(idx);
  const double s = std::sin(theta);
  if (std::abs(s) < 1e-12)
    throw std::domain_error("eval_ylm_dtheta: theta too close to a pole");
  const double cot = std::cos(theta) / s;
  cplx out = double(idx.m) * cot * eval_ylm(idx, theta, phi);
  if (idx.m < idx.l) {
    const double c = std::sqrt(double(idx.l - idx.m) * double(idx.l + idx.m + 1));
    out += c * std::polar(1.0, -phi) * eval_ylm({idx.l, idx.m + 1}, theta, phi);
  }
  return out;
}

YlmTable build_ylm_table(BasisTruncation basis, const AngularQuadrature& q) {
  const int l_max = basis.l_max;
  const std::size_t dim = basis.dimension();
  YlmTable table;
  table.basis = basis;
  table.n_nodes = q.n_nodes();
  table.values.assign(table.n_nodes * dim, cplx{});
  table.dtheta.assign(table.n_nodes * dim, cplx{});

  std::vector<double> pbar;
  std::vector<cplx> eimphi(std::size_t(l_max) + 1);
  for (std::size_t it = 0; it < q.n_theta(); ++it) {
    const double theta = q.theta_nodes[it];
    const double x = std::cos(theta), s = std::sin(theta);
    const double cot = x / s;
    legendre_all(l_max, x, s, pbar);
    const auto at = [](int l, int m) { return std::size_t(l * (l + 1) / 2 + m); };
    for (std::size_t ip = 0; ip < q.n_phi; ++ip) {
      const double phi = q.phi_node(ip);
      for (int m = 0; m <= l_max; ++m) eimphi[std::size_t(m)] = std::polar(1.0, double(m) * phi);
      const std::size_t a = it * q.n_phi + ip;
      cplx* vrow = table.values.data() + a * dim;
      for (int l = 0; l <= l_max; ++l) {
        for (int m = -l; m <= l; ++m) {
          const int am = std::abs(m);
          const double pb = pbar[at(l, am)];
          cplx v = pb * eimphi[std::size_t(am)];
          if (m < 0) v = ((am % 2 == 0) ? 1.0 : -1.0) * std::conj(v);
          vrow[BasisIndex{l, m}.flat()] = v;
        }
      }
      cplx* drow = table.dtheta.data() + a * dim;
      const cplx emphi = std::conj(eimphi[1]);
      for (int l = 0; l <= l_max; ++l) {
        for (int m = -l; m <= l; ++m) {
          cplx d = double(m) * cot * vrow[BasisIndex{l, m}.flat()];
          if (m < l) {
            const double c = std::sqrt(double(l - m) * double(l + m + 1));
            d += c * emphi * vrow[BasisIndex{l, m + 1}.flat()];
          }
          drow[BasisIndex{l, m}.flat()] = d;
        }
      }
    }
  }
  return table;
}

cplx inner_product(const std::vector<cplx>& f, const std::vector<cplx>& g,
                   const AngularQuadrature& q) {
  if (f.size() != q.n_nodes() || g.size() != q.n_nodes())
    throw std::invalid_argument("inner_product: sample size does not match quadrature grid");
  std::vector<double> w(q.n_nodes());
  for (std::size_t a = 0; a < w.size(); ++a) w[a] = q.node_weight(a);
  return kernels::zdotc_weighted(f.size(), f.data(), g.data(), w.data());
}

} // namespace radmom
