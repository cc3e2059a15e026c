#include "radmom/identities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "radmom/units.hpp"

namespace radmom {

namespace {

using Vec3d = std::array<double, 3>;

void require_off_poles(const SpherePoint& p) {
  if (p.theta < pole_margin || p.theta > std::numbers::pi - pole_margin)
    throw std::domain_error("point too close to a coordinate pole");
  if (p.r <= 0.0) throw std::domain_error("r > 0 required");
}

Vec3d unit_r(const SpherePoint& p) {
  return {std::sin(p.theta) * std::cos(p.phi), std::sin(p.theta) * std::sin(p.phi),
          std::cos(p.theta)};
}
Vec3d unit_theta(const SpherePoint& p) {
  return {std::cos(p.theta) * std::cos(p.phi), std::cos(p.theta) * std::sin(p.phi),
          -std::sin(p.theta)};
}
Vec3d unit_phi(const SpherePoint& p) { return {-std::sin(p.phi), std::cos(p.phi), 0.0}; }

cplx dot(const Vec3d& e, const Vec3c& v) {
  return e[0] * v[0] + e[1] * v[1] + e[2] * v[2];
}

Vec3c axpy(Vec3c acc, const Vec3d& e, cplx a) {
  for (int i = 0; i < 3; ++i) acc[i] += a * e[i];
  return acc;
}

double norm3(const Vec3c& v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

// Spherical-frame first derivatives via the chain rule from the exact
// Cartesian gradient.
struct FrameDerivatives {
  cplx f;       // value
  cplx df_dr;   // d/dr
  cplx df_dth;  // d/dtheta
  cplx df_dph;  // d/dphi
};

FrameDerivatives frame_derivatives(const TestField& f, const SpherePoint& p) {
  const auto [x, y, z] = p.cartesian();
  const Vec3c g = f.cart_gradient(x, y, z);
  FrameDerivatives out;
  out.f = f.value(x, y, z);
  out.df_dr = dot(unit_r(p), g);
  out.df_dth = p.r * dot(unit_theta(p), g);
  out.df_dph = p.r * std::sin(p.theta) * dot(unit_phi(p), g);
  return out;
}

Vec3c transverse_gradient(const TestField& f, const SpherePoint& p) {
  const FrameDerivatives d = frame_derivatives(f, p);
  Vec3c out{};
  out = axpy(out, unit_theta(p), d.df_dth / p.r);
  out = axpy(out, unit_phi(p), d.df_dph / (p.r * std::sin(p.theta)));
  out = axpy(out, unit_r(p), -d.f / p.r);
  return out;
}

} // namespace

Vec3c spherical_gradient(const TestField& f, const SpherePoint& p) {
  require_off_poles(p);
  const FrameDerivatives d = frame_derivatives(f, p);
  Vec3c out{};
  out = axpy(out, unit_r(p), d.df_dr);
  out = axpy(out, unit_theta(p), d.df_dth / p.r);
  out = axpy(out, unit_phi(p), d.df_dph / (p.r * std::sin(p.theta)));
  return out;
}

double decomposition_residual(const TestField& f, const SpherePoint& p) {
  require_off_poles(p);
  const Vec3c lhs = spherical_gradient(f, p);
  const FrameDerivatives d = frame_derivatives(f, p);
  Vec3c rhs = transverse_gradient(f, p);
  rhs = axpy(rhs, unit_r(p), d.df_dr + d.f / p.r);
  Vec3c diff;
  for (int i = 0; i < 3; ++i) diff[i] = lhs[i] - rhs[i];
  return norm3(diff);
}

double symmetrized_decomposition_residual(const TestField& f, const SpherePoint& p,
                                          PThetaVariant variant) {
  require_off_poles(p);
  const FrameDerivatives d = frame_derivatives(f, p);
  const double st = std::sin(p.theta), ct = std::cos(p.theta);
  const double c = (variant == PThetaVariant::cot_half) ? 0.5 * ct / st : st / ct;
  const cplx mih{0.0, -hbar};
  const cplx pih{0.0, hbar};

  const cplx pr_f = mih * (d.df_dr + d.f / p.r);
  const cplx pth_f = mih * (d.df_dth + c * d.f);
  const cplx pph_f = mih * d.df_dph;

  Vec3c rhs{};
  rhs = axpy(rhs, unit_r(p), pr_f);                                 // {e_r, P_r} f
  rhs = axpy(rhs, unit_theta(p), pth_f / p.r);                      // (1/r) e_th P_th f
  rhs = axpy(rhs, unit_r(p), pih * d.f / (2.0 * p.r));              // (1/r) (i hbar e_r / 2) f
  rhs = axpy(rhs, unit_phi(p), pph_f / (p.r * st));                 // (1/(r sin)) e_ph P_ph f
  rhs = axpy(rhs, unit_r(p), pih * d.f / (2.0 * p.r));              // (i hbar/2)(e_r sin)/(r sin)
  rhs = axpy(rhs, unit_theta(p), pih * ct * d.f / (2.0 * p.r * st)); // (i hbar/2)(e_th cos)/(r sin)

  const Vec3c grad = spherical_gradient(f, p);
  Vec3c diff;
  for (int i = 0; i < 3; ++i) diff[i] = mih * grad[i] - rhs[i];
  return norm3(diff);
}

double pr_squared_residual(const TestField& f, const SpherePoint& p) {
  require_off_poles(p);
  const auto [x, y, z] = p.cartesian();
  const cplx lhs =
      -hbar * hbar * (f.radial_second(x, y, z) + 2.0 / p.r * f.radial_derivative(x, y, z));
  const cplx rhs =
      -hbar * hbar * f.cart_laplacian(x, y, z) - hbar * hbar * f.lsq(x, y, z) / (p.r * p.r);
  return std::abs(lhs - rhs);
}

double transversality_residual(const TestField& f, const SpherePoint& p) {
  require_off_poles(p);
  const FrameDerivatives d = frame_derivatives(f, p);
  const double st = std::sin(p.theta);
  const Vec3d er = unit_r(p), eth = unit_theta(p), eph = unit_phi(p);
  // e_r . grad_tran f
  const cplx t1 = dot(er, transverse_gradient(f, p));
  // grad_tran . (e_r f), using d(e_r)/dtheta = e_th and d(e_r)/dphi = sin(theta) e_ph
  Vec3c dth_vec{}; // d/dtheta (e_r f)
  dth_vec = axpy(dth_vec, eth, d.f);
  dth_vec = axpy(dth_vec, er, d.df_dth);
  Vec3c dph_vec{}; // d/dphi (e_r f)
  dph_vec = axpy(dph_vec, eph, st * d.f);
  dph_vec = axpy(dph_vec, er, d.df_dph);
  const cplx t2 =
      dot(eth, dth_vec) / p.r + dot(eph, dph_vec) / (p.r * st) - d.f / p.r;
  return std::abs(t1 + t2);
}

double split_closure_residual(const TestField& f, const SpherePoint& p) {
  require_off_poles(p);
  const auto [x, y, z] = p.cartesian();
  const Vec3c g = f.cart_gradient(x, y, z);
  const FrameDerivatives d = frame_derivatives(f, p);
  const cplx mih{0.0, -hbar};

  const Vec3c tran = transverse_gradient(f, p);
  Vec3c er_pr{};
  er_pr = axpy(er_pr, unit_r(p), mih * (d.df_dr + d.f / p.r));

  Vec3c diff;
  for (int i = 0; i < 3; ++i) diff[i] = mih * g[i] - mih * tran[i] - er_pr[i];
  return norm3(diff);
}

double rpi_z_eigenfunction_residual(double gamma, const std::vector<double>& theta_samples) {
  double worst = 0.0;
  for (const double theta : theta_samples) {
    if (theta < pole_margin || theta > std::numbers::pi - pole_margin)
      throw std::domain_error("eigenfunction sample too close to a pole");
    const double st = std::sin(theta), ct = std::cos(theta);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    const cplx u = norm / st * std::polar(1.0, -gamma * std::log(std::tan(0.5 * theta)));
    // d/dtheta u = u (-cos/sin - i gamma / sin)
    const cplx du = u * cplx{-ct / st, -gamma / st};
    const cplx applied = cplx{0.0, hbar} * (st * du + ct * u);
    worst = std::max(worst, std::abs(applied - gamma * hbar * u) / std::abs(u));
  }
  return worst;
}

} // namespace radmom
