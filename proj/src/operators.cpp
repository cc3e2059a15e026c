#include "radmom/operators.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "radmom/errors.hpp"
#include "radmom/units.hpp"

namespace radmom {

using namespace std::complex_literals;

namespace {

double ladder_raise(int l, int m) { // <l,m+1| L_+ |l,m> / hbar
  return std::sqrt(double(l - m) * double(l + m + 1));
}

// Recursion coefficient a_lm: cos(theta) Y_lm = a_lm Y_{l+1,m} + a_{l-1,m} Y_{l-1,m}.
double cos_theta_coeff(int l, int m) {
  return std::sqrt((double(l + 1) * (l + 1) - double(m) * m) /
                   ((2.0 * l + 1.0) * (2.0 * l + 3.0)));
}

// Projection <l'm'| op |lm> for op given by its action sampled on the grid:
// applied[a][j] = (op Y_j)(node a).
ComplexMatrix project(const YlmTable& table, const AngularQuadrature& q,
                      const std::vector<cplx>& applied) {
  const std::size_t dim = table.basis.dimension();
  const std::size_t nn = table.n_nodes;
  ComplexMatrix bra(dim, nn);
  for (std::size_t a = 0; a < nn; ++a) {
    const double w = q.node_weight(a);
    const cplx* vrow = table.row(a);
    for (std::size_t j = 0; j < dim; ++j) bra(j, a) = std::conj(vrow[j]) * w;
  }
  ComplexMatrix ket(nn, dim);
  for (std::size_t i = 0; i < applied.size(); ++i) ket.data()[i] = applied[i];
  return bra * ket;
}

} // namespace

const char* axis_name(Axis axis) {
  switch (axis) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "?";
}

OperatorMatrix build_angular_momentum(Axis axis, BasisTruncation basis) {
  const std::size_t dim = basis.dimension();
  ComplexMatrix m(dim, dim);
  for (int l = 0; l <= basis.l_max; ++l) {
    for (int mm = -l; mm <= l; ++mm) {
      const std::size_t col = BasisIndex{l, mm}.flat();
      switch (axis) {
        case Axis::z:
          m(col, col) = hbar * double(mm);
          break;
        case Axis::x:
          if (mm < l) m(BasisIndex{l, mm + 1}.flat(), col) = 0.5 * hbar * ladder_raise(l, mm);
          if (mm > -l) m(BasisIndex{l, mm - 1}.flat(), col) = 0.5 * hbar * ladder_raise(l, -mm);
          break;
        case Axis::y:
          if (mm < l)
            m(BasisIndex{l, mm + 1}.flat(), col) = -0.5i * hbar * ladder_raise(l, mm);
          if (mm > -l)
            m(BasisIndex{l, mm - 1}.flat(), col) = 0.5i * hbar * ladder_raise(l, -mm);
          break;
      }
    }
  }
  return {std::move(m), basis, std::string{"L"} + axis_name(axis), true, 0};
}

OperatorMatrix build_direction_cosine(Axis axis, BasisTruncation basis,
                                      const AngularQuadrature& q) {
  const YlmTable table = build_ylm_table(basis, q);
  const std::size_t dim = basis.dimension();
  std::vector<cplx> applied(table.n_nodes * dim);
  for (std::size_t it = 0; it < q.n_theta(); ++it) {
    const double theta = q.theta_nodes[it];
    for (std::size_t ip = 0; ip < q.n_phi; ++ip) {
      const double phi = q.phi_node(ip);
      double u = 0.0;
      switch (axis) {
        case Axis::x: u = std::sin(theta) * std::cos(phi); break;
        case Axis::y: u = std::sin(theta) * std::sin(phi); break;
        case Axis::z: u = std::cos(theta); break;
      }
      const std::size_t a = it * q.n_phi + ip;
      const cplx* vrow = table.row(a);
      for (std::size_t j = 0; j < dim; ++j) applied[a * dim + j] = u * vrow[j];
    }
  }
  ComplexMatrix m = project(table, q, applied);

  if (axis == Axis::z) {
    // cos(theta) recursion cross-check: detects an under-resolved quadrature
    double worst = 0.0;
    for (int l = 0; l < basis.l_max; ++l)
      for (int mm = -l; mm <= l; ++mm) {
        const cplx got = m(BasisIndex{l + 1, mm}.flat(), BasisIndex{l, mm}.flat());
        worst = std::max(worst, std::abs(got - cos_theta_coeff(l, mm)));
      }
    if (worst > 1e-10)
      throw accuracy_error("direction cosine: recursion cross-check residual " +
                           std::to_string(worst) + " exceeds 1e-10 (quadrature too small)");
  } else {
    // selection rules l' = l +- 1, m' = m +- 1; skip the top-shell pairs where
    // the default phi rule aliases
    double worst = 0.0;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        const BasisIndex bi = BasisIndex::from_flat(r), bj = BasisIndex::from_flat(c);
        if (bi.l == basis.l_max && bj.l == basis.l_max && bi.l > 0) continue;
        if (std::abs(bi.l - bj.l) == 1 && std::abs(bi.m - bj.m) == 1) continue;
        worst = std::max(worst, std::abs(m(r, c)));
      }
    if (worst > 1e-10)
      throw accuracy_error("direction cosine: selection-rule residual " +
                           std::to_string(worst) + " exceeds 1e-10 (quadrature too small)");
  }

  // Polish: the selection rules are exact, so recompute the allowed band with
  // extended-precision dots and pin the rest to its analytic zero.  Without
  // this the O(sqrt(n_nodes) eps) projection noise, amplified by ||L|| ~ l_max
  // in the geometric-momentum products, eats the interior hermiticity budget.
  ComplexMatrix polished(dim, dim);
  std::vector<double> w(table.n_nodes);
  for (std::size_t a = 0; a < table.n_nodes; ++a) w[a] = q.node_weight(a);
  for (std::size_t col = 0; col < dim; ++col) {
    const BasisIndex bj = BasisIndex::from_flat(col);
    for (const int dl : {-1, 1}) {
      const int li = bj.l + dl;
      if (li < 0 || li > basis.l_max) continue;
      for (const int dm : (axis == Axis::z ? std::vector<int>{0} : std::vector<int>{-1, 1})) {
        const BasisIndex bi{li, bj.m + dm};
        if (!bi.valid()) continue;
        std::complex<long double> s{};
        for (std::size_t a = 0; a < table.n_nodes; ++a) {
          const cplx f = table.row(a)[bi.flat()];
          const cplx g = applied[a * dim + col];
          s += std::complex<long double>(f.real(), -f.imag()) *
               std::complex<long double>(g.real(), g.imag()) * (long double)(w[a]);
        }
        polished(bi.flat(), col) = {double(s.real()), double(s.imag())};
      }
    }
  }
  return {std::move(polished), basis, std::string{"er"} + axis_name(axis), true, 1};
}

namespace {

// a*b - c*d - i*hbar*e with extended-precision accumulation: the angular
// momentum factors have norm ~ l_max, and plain double gemm rounding would
// break the 1e-12 interior hermiticity budget.
ComplexMatrix cross_combination(const ComplexMatrix& a, const ComplexMatrix& b,
                                const ComplexMatrix& c, const ComplexMatrix& d,
                                const ComplexMatrix& e) {
  const std::size_t n = a.rows();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::complex<long double> s{0.0L, 0.0L};
      for (std::size_t k = 0; k < n; ++k) {
        const cplx aik = a(i, k), cik = c(i, k);
        if (aik != cplx{})
          s += std::complex<long double>(aik.real(), aik.imag()) *
               std::complex<long double>(b(k, j).real(), b(k, j).imag());
        if (cik != cplx{})
          s -= std::complex<long double>(cik.real(), cik.imag()) *
               std::complex<long double>(d(k, j).real(), d(k, j).imag());
      }
      s -= std::complex<long double>{0.0L, (long double)(hbar)} *
           std::complex<long double>(e(i, j).real(), e(i, j).imag());
      m(i, j) = {double(s.real()), double(s.imag())};
    }
  return m;
}

} // namespace

OperatorMatrix build_geometric_momentum(Axis axis, BasisTruncation basis,
                                        const AngularQuadrature& q) {
  const OperatorMatrix ex = build_direction_cosine(Axis::x, basis, q);
  const OperatorMatrix ey = build_direction_cosine(Axis::y, basis, q);
  const OperatorMatrix ez = build_direction_cosine(Axis::z, basis, q);
  const OperatorMatrix lx = build_angular_momentum(Axis::x, basis);
  const OperatorMatrix ly = build_angular_momentum(Axis::y, basis);
  const OperatorMatrix lz = build_angular_momentum(Axis::z, basis);

  // r*Pi = L x e_r - i*hbar*e_r
  ComplexMatrix m;
  switch (axis) {
    case Axis::x:
      m = cross_combination(ly.data, ez.data, lz.data, ey.data, ex.data);
      break;
    case Axis::y:
      m = cross_combination(lz.data, ex.data, lx.data, ez.data, ey.data);
      break;
    case Axis::z:
      m = cross_combination(lx.data, ey.data, ly.data, ex.data, ez.data);
      break;
  }
  return {std::move(m), basis, std::string{"rPi"} + axis_name(axis), true, 1};
}

OperatorMatrix build_geometric_momentum_direct(Axis axis, BasisTruncation basis,
                                               const AngularQuadrature& q) {
  const YlmTable table = build_ylm_table(basis, q);
  const std::size_t dim = basis.dimension();
  std::vector<cplx> applied(table.n_nodes * dim);
  for (std::size_t it = 0; it < q.n_theta(); ++it) {
    const double theta = q.theta_nodes[it];
    const double st = std::sin(theta), ct = std::cos(theta);
    for (std::size_t ip = 0; ip < q.n_phi; ++ip) {
      const double phi = q.phi_node(ip);
      const double cp = std::cos(phi), sp = std::sin(phi);
      const std::size_t a = it * q.n_phi + ip;
      const cplx* v = table.row(a);
      const cplx* d = table.drow(a);
      for (std::size_t j = 0; j < dim; ++j) {
        const int mm = BasisIndex::from_flat(j).m;
        const cplx dphi = cplx{0.0, double(mm)} * v[j]; // d/dphi Y = i m Y
        cplx out;
        switch (axis) {
          case Axis::x:
            out = -1i * hbar * (ct * cp * d[j] - (sp / st) * dphi - st * cp * v[j]);
            break;
          case Axis::y:
            out = -1i * hbar * (ct * sp * d[j] + (cp / st) * dphi - st * sp * v[j]);
            break;
          case Axis::z:
            out = 1i * hbar * (st * d[j] + ct * v[j]);
            break;
        }
        applied[a * dim + j] = out;
      }
    }
  }
  ComplexMatrix m = project(table, q, applied);
  return {std::move(m), basis, std::string{"rPi"} + axis_name(axis) + "(direct)", true, 1};
}

OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.basis != b.basis) throw std::invalid_argument("operator product: basis mismatch");
  return {a.data * b.data, a.basis, a.name + "*" + b.name, false,
          a.contaminated_shells + b.contaminated_shells};
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.basis != b.basis) throw std::invalid_argument("commutator: basis mismatch");
  return {a.data * b.data - b.data * a.data, a.basis,
          "[" + a.name + "," + b.name + "]", false,
          a.contaminated_shells + b.contaminated_shells};
}

namespace {

using lcplx = std::complex<long double>;
using LMatrix = std::vector<lcplx>; // square, row-major

LMatrix lmat_mul(const LMatrix& a, const LMatrix& b, std::size_t n) {
  LMatrix c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const lcplx aik = a[i * n + k];
      if (aik == lcplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

// exp(m) by scaling-and-squaring with a Taylor series, in extended precision.
LMatrix lmat_exp(LMatrix m, std::size_t n) {
  long double norm = 0.0L;
  for (const lcplx& v : m) norm = std::max(norm, std::abs(v));
  norm *= (long double)(n);
  int s = 0;
  while (norm > 0.5L) {
    norm *= 0.5L;
    ++s;
  }
  const long double scale = std::pow(0.5L, (long double)(s));
  for (lcplx& v : m) v *= scale;

  LMatrix result(n * n), term(n * n);
  for (std::size_t i = 0; i < n; ++i) result[i * n + i] = term[i * n + i] = 1.0L;
  for (int k = 1; k <= 40; ++k) {
    term = lmat_mul(term, m, n);
    for (lcplx& v : term) v /= (long double)(k);
    long double tnorm = 0.0L;
    for (std::size_t i = 0; i < n * n; ++i) {
      result[i] += term[i];
      tnorm = std::max(tnorm, std::abs(term[i]));
    }
    if (tnorm < 1e-22L) break;
  }
  for (int k = 0; k < s; ++k) result = lmat_mul(result, result, n);
  return result;
}

} // namespace

OperatorMatrix rotation_conjugate(Axis generator_axis, double angle,
                                  const OperatorMatrix& a) {
  const OperatorMatrix gen = build_angular_momentum(generator_axis, a.basis);
  const std::size_t dim = a.basis.dimension();
  // The generator is block-diagonal in l: exponentiate shell by shell in
  // extended precision (gemm rounding at ||L|| ~ l_max otherwise dominates).
  LMatrix u(dim * dim);
  for (int l = 0; l <= a.basis.l_max; ++l) {
    const std::size_t off = BasisIndex{l, -l}.flat();
    const std::size_t bs = std::size_t(2 * l + 1);
    LMatrix block(bs * bs);
    for (std::size_t i = 0; i < bs; ++i)
      for (std::size_t j = 0; j < bs; ++j) {
        const cplx g = gen.data(off + i, off + j);
        block[i * bs + j] =
            lcplx{0.0L, -(long double)(angle) / (long double)(hbar)} *
            lcplx{(long double)(g.real()), (long double)(g.imag())};
      }
    const LMatrix eb = lmat_exp(std::move(block), bs);
    for (std::size_t i = 0; i < bs; ++i)
      for (std::size_t j = 0; j < bs; ++j) u[(off + i) * dim + off + j] = eb[i * bs + j];
  }

  LMatrix am(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const cplx v = a.data(i, j);
      am[i * dim + j] = lcplx{(long double)(v.real()), (long double)(v.imag())};
    }
  LMatrix udag(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) udag[i * dim + j] = std::conj(u[j * dim + i]);
  const LMatrix rot = lmat_mul(lmat_mul(u, am, dim), udag, dim);

  ComplexMatrix rotated(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      rotated(i, j) = {double(rot[i * dim + j].real()), double(rot[i * dim + j].imag())};
  return {std::move(rotated), a.basis,
          "R" + std::string{axis_name(generator_axis)} + "(" + std::to_string(angle) + ")[" +
              a.name + "]",
          a.hermitian, a.contaminated_shells};
}

std::vector<double> interior_eigenvalues(const OperatorMatrix& a) {
  if (!a.hermitian) throw std::invalid_argument("interior_eigenvalues: hermitian operator required");
  const ComplexMatrix block = a.interior();
  Eigen::MatrixXcd em(long(block.rows()), long(block.cols()));
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) em(long(i), long(j)) = block(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(em, Eigen::EigenvaluesOnly);
  std::vector<double> out(block.rows());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = es.eigenvalues()(long(i));
  return out;
}

} // namespace radmom
