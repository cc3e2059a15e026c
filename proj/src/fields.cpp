#include "radmom/fields.hpp"

#include <cmath>
#include <numbers>

namespace radmom {

namespace {

double r_of(double x, double y, double z) { return std::sqrt(x * x + y * y + z * z); }

std::vector<TestField> make_corpus() {
  std::vector<TestField> fields;

  fields.push_back({
      "one",
      [](double, double, double) { return cplx{1.0}; },
      [](double, double, double) { return Vec3c{}; },
      [](double, double, double) { return cplx{}; },
      [](double, double, double) { return cplx{}; },
      [](double, double, double) { return cplx{}; },
      [](double, double, double) { return cplx{}; },
  });

  fields.push_back({
      "r",
      [](double x, double y, double z) { return cplx{r_of(x, y, z)}; },
      [](double x, double y, double z) {
        const double r = r_of(x, y, z);
        return Vec3c{x / r, y / r, z / r};
      },
      [](double x, double y, double z) { return cplx{2.0 / r_of(x, y, z)}; },
      [](double, double, double) { return cplx{1.0}; },
      [](double, double, double) { return cplx{}; },
      [](double, double, double) { return cplx{}; },
  });

  fields.push_back({
      "z",
      [](double, double, double z) { return cplx{z}; },
      [](double, double, double) { return Vec3c{0.0, 0.0, 1.0}; },
      [](double, double, double) { return cplx{}; },
      [](double x, double y, double z) { return cplx{z / r_of(x, y, z)}; }, // cos(theta)
      [](double, double, double) { return cplx{}; },
      [](double, double, double z) { return cplx{2.0 * z}; },
  });

  fields.push_back({
      "x2y",
      [](double x, double y, double) { return cplx{x * x * y}; },
      [](double x, double y, double) { return Vec3c{2.0 * x * y, x * x, 0.0}; },
      [](double, double y, double) { return cplx{2.0 * y}; },
      [](double x, double y, double z) { return cplx{3.0 * x * x * y / r_of(x, y, z)}; },
      [](double x, double y, double z) {
        const double r = r_of(x, y, z);
        return cplx{6.0 * x * x * y / (r * r)};
      },
      [](double x, double y, double z) {
        const double r2 = x * x + y * y + z * z;
        return cplx{12.0 * x * x * y - 2.0 * y * r2};
      },
  });

  // (x + i y) e^{-r^2}: Gaussian times an l = 1 harmonic shape
  fields.push_back({
      "gauss_y11",
      [](double x, double y, double z) {
        return cplx{x, y} * std::exp(-(x * x + y * y + z * z));
      },
      [](double x, double y, double z) {
        const double g = std::exp(-(x * x + y * y + z * z));
        const cplx u{x, y};
        return Vec3c{g * (cplx{1.0} - 2.0 * x * u), g * (cplx{0.0, 1.0} - 2.0 * y * u),
                     g * (-2.0 * z * u)};
      },
      [](double x, double y, double z) {
        const double r2 = x * x + y * y + z * z;
        return cplx{x, y} * std::exp(-r2) * (4.0 * r2 - 10.0);
      },
      [](double x, double y, double z) {
        // f = A(r) S, A = r e^{-r^2}; df/dr = A'(r) S = (1/r - 2 r) f
        const double r = r_of(x, y, z);
        return cplx{x, y} * std::exp(-r * r) * (1.0 / r - 2.0 * r);
      },
      [](double x, double y, double z) {
        // A'' = (4 r^3 - 6 r) e^{-r^2}; d2f/dr2 = A'' S = A''/A * f
        const double r = r_of(x, y, z);
        return cplx{x, y} * std::exp(-r * r) * (4.0 * r * r - 6.0);
      },
      [](double x, double y, double z) {
        return 2.0 * cplx{x, y} * std::exp(-(x * x + y * y + z * z));
      },
  });

  // z e^{-r}
  fields.push_back({
      "z_exp",
      [](double x, double y, double z) { return cplx{z * std::exp(-r_of(x, y, z))}; },
      [](double x, double y, double z) {
        const double r = r_of(x, y, z);
        const double g = std::exp(-r);
        return Vec3c{-z * x / r * g, -z * y / r * g, g * (1.0 - z * z / r)};
      },
      [](double x, double y, double z) {
        const double r = r_of(x, y, z);
        return cplx{z * std::exp(-r) * (1.0 - 4.0 / r)};
      },
      [](double x, double y, double z) {
        // A = r e^{-r}, A' = (1 - r) e^{-r}; df/dr = A'/A f
        const double r = r_of(x, y, z);
        return cplx{z * std::exp(-r) * (1.0 / r - 1.0)};
      },
      [](double x, double y, double z) {
        // A'' = (r - 2) e^{-r}
        const double r = r_of(x, y, z);
        return cplx{z * std::exp(-r) * (1.0 - 2.0 / r)};
      },
      [](double x, double y, double z) { return cplx{2.0 * z * std::exp(-r_of(x, y, z))}; },
  });

  // (x^2 - y^2) e^{-r^2}: Gaussian times an l = 2 harmonic shape
  fields.push_back({
      "gauss_l2",
      [](double x, double y, double z) {
        return cplx{(x * x - y * y) * std::exp(-(x * x + y * y + z * z))};
      },
      [](double x, double y, double z) {
        const double g = std::exp(-(x * x + y * y + z * z));
        const double u = x * x - y * y;
        return Vec3c{g * (2.0 * x - 2.0 * x * u), g * (-2.0 * y - 2.0 * y * u),
                     g * (-2.0 * z * u)};
      },
      [](double x, double y, double z) {
        const double r2 = x * x + y * y + z * z;
        return cplx{(x * x - y * y) * std::exp(-r2) * (4.0 * r2 - 14.0)};
      },
      [](double x, double y, double z) {
        // A = r^2 e^{-r^2}, A' = (2 r - 2 r^3) e^{-r^2}
        const double r = r_of(x, y, z);
        return cplx{(x * x - y * y) * std::exp(-r * r) * (2.0 / r - 2.0 * r)};
      },
      [](double x, double y, double z) {
        // A'' = (2 - 10 r^2 + 4 r^4) e^{-r^2}
        const double r = r_of(x, y, z);
        const double r2 = r * r;
        return cplx{(x * x - y * y) * std::exp(-r2) * (2.0 / r2 - 10.0 + 4.0 * r2)};
      },
      [](double x, double y, double z) {
        return cplx{6.0 * (x * x - y * y) * std::exp(-(x * x + y * y + z * z))};
      },
  });

  // e^{-r}: pure s-wave
  fields.push_back({
      "s_exp",
      [](double x, double y, double z) { return cplx{std::exp(-r_of(x, y, z))}; },
      [](double x, double y, double z) {
        const double r = r_of(x, y, z);
        const double g = std::exp(-r);
        return Vec3c{-x / r * g, -y / r * g, -z / r * g};
      },
      [](double x, double y, double z) {
        const double r = r_of(x, y, z);
        return cplx{std::exp(-r) * (1.0 - 2.0 / r)};
      },
      [](double x, double y, double z) { return cplx{-std::exp(-r_of(x, y, z))}; },
      [](double x, double y, double z) { return cplx{std::exp(-r_of(x, y, z))}; },
      [](double, double, double) { return cplx{}; },
  });

  return fields;
}

double halton(std::size_t i, unsigned base) {
  double f = 1.0, out = 0.0;
  while (i > 0) {
    f /= double(base);
    out += f * double(i % base);
    i /= base;
  }
  return out;
}

} // namespace

const std::vector<TestField>& field_corpus() {
  static const std::vector<TestField> corpus = make_corpus();
  return corpus;
}

std::array<double, 3> SpherePoint::cartesian() const {
  return {r * std::sin(theta) * std::cos(phi), r * std::sin(theta) * std::sin(phi),
          r * std::cos(theta)};
}

std::vector<SpherePoint> sample_points(std::size_t count) {
  std::vector<SpherePoint> pts;
  pts.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    const double r = 0.1 + 4.9 * halton(i, 2);
    const double theta = 0.1 + (std::numbers::pi - 0.2) * halton(i, 3);
    const double phi = 2.0 * std::numbers::pi * halton(i, 5);
    pts.push_back({r, theta, phi});
  }
  return pts;
}

} // namespace radmom
