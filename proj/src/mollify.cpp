#include "torus/mollify.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "torus/operators.hpp"

namespace torus {

namespace {

double bump(double r) { return std::exp(-1.0 / (1.0 - r * r)); }

using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;

// 4 pi int_0^1 r^2 bump(r) dr, the inverse of the normalizing constant c.
double bump_mass() {
  static const double m =
      4.0 * M_PI *
      Quad::integrate([](double r) { return r * r * bump(r); }, 0.0, 1.0, 10,
                      1e-13);
  return m;
}

void check_guard(const Grid& g, double eps, double guard_spacings) {
  if (!(eps > 0.0 && eps <= 1.0))
    throw field_error("mollify: need 0 < eps <= 1");
  const double floor_eps = guard_spacings * g.spacing();
  if (eps < floor_eps * (1.0 - 1e-12))
    throw field_error("mollify: eps = " + std::to_string(eps) +
                      " below resolution guard " + std::to_string(floor_eps));
}

}  // namespace

Kernel::Kernel(double eps) : eps_(eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw field_error("Kernel: need 0 < eps <= 1");
  bump_mass();
}

double Kernel::multiplier(double k_abs) const {
  const double xi = eps_ * k_abs;
  if (xi < 1e-12) return 1.0;
  const double num =
      4.0 * M_PI *
      Quad::integrate(
          [xi](double r) { return r * bump(r) * std::sin(xi * r) / xi; }, 0.0,
          1.0, 10, 1e-13);
  return num / bump_mass();
}

SpectralField mollify(const SpectralField& F, double eps,
                      double guard_spacings) {
  const Grid& g = F.grid();
  check_guard(g, eps, guard_spacings);
  const Kernel ker(eps);

  const int n = g.n;
  const int k2max = 3 * (n / 2) * (n / 2);
  std::vector<double> table(std::size_t(k2max) + 1,
                            std::numeric_limits<double>::quiet_NaN());
  SpectralField out = F;
  for (int ix = 0; ix < n; ++ix) {
    const int kx = g.wavenumber(ix);
    for (int iy = 0; iy < n; ++iy) {
      const int ky = g.wavenumber(iy);
      for (int iz = 0; iz < n; ++iz) {
        const int kz = g.wavenumber(iz);
        const int k2 = kx * kx + ky * ky + kz * kz;
        double& m = table[k2];
        if (std::isnan(m)) m = ker.multiplier(std::sqrt(double(k2)));
        const auto idx = (std::ptrdiff_t(ix) * n + iy) * n + iz;
        for (int c = 0; c < out.ncomp(); ++c) out.comp(c)[idx] *= m;
      }
    }
  }
  return out;
}

SpectralField tensor_square(const SpectralField& u) {
  if (u.ncomp() != 3) throw field_error("tensor_square: need ncomp = 3");
  // Zero-padded (3/2-rule) product: exact coefficients for all retained
  // modes |k_i| <= n/2 - 1, no aliasing. Components are processed one at a
  // time to bound memory on the padded grid.
  const Grid& g = u.grid();
  const int n = g.n;
  const int m = (3 * n / 2 + 1) / 2 * 2;
  const Grid gm(m);
  const int kcap = n / 2 - 1;

  std::vector<Eigen::ArrayXd> up(3);
  for (int c = 0; c < 3; ++c) {
    SpectralField one(gm, 1);
    for (int ix = 0; ix < n; ++ix) {
      const int kx = g.wavenumber(ix);
      for (int iy = 0; iy < n; ++iy) {
        const int ky = g.wavenumber(iy);
        for (int iz = 0; iz < n; ++iz)
          one.at(0, kx, ky, g.wavenumber(iz)) =
              u.comp(c)[(std::ptrdiff_t(ix) * n + iy) * n + iz];
      }
    }
    up[c] = inverse_transform(one).comp(0);
  }

  static constexpr int I[6] = {0, 0, 0, 1, 1, 2};
  static constexpr int J[6] = {0, 1, 2, 1, 2, 2};
  SpectralField T(g, 6);
  for (int c = 0; c < 6; ++c) {
    RealField prod(gm, 1);
    prod.comp(0) = up[I[c]] * up[J[c]];
    SpectralField P = transform(prod);
    for (int kx = -kcap; kx <= kcap; ++kx)
      for (int ky = -kcap; ky <= kcap; ++ky)
        for (int kz = -kcap; kz <= kcap; ++kz)
          T.at(c, kx, ky, kz) = P.at(0, kx, ky, kz);
  }
  return T;
}

RealField commutator(const SpectralField& u, double eps,
                     double guard_spacings) {
  if (u.ncomp() != 3) throw field_error("commutator: need ncomp = 3");
  const SpectralField outer = mollify(tensor_square(u), eps, guard_spacings);
  const SpectralField inner = tensor_square(mollify(u, eps, guard_spacings));
  return inverse_transform(subtract(outer, inner));
}

double tensor_lp_norm(const RealField& t, double p) {
  if (t.ncomp() != 6) throw field_error("tensor_lp_norm: need ncomp = 6");
  if (!(p >= 1.0)) throw field_error("tensor_lp_norm: need p >= 1");
  static constexpr double w[6] = {1, 2, 2, 1, 2, 1};
  Eigen::ArrayXd mag2 = Eigen::ArrayXd::Zero(t.grid().size3());
  for (int m = 0; m < 6; ++m) mag2 += w[m] * t.comp(m).square();
  if (std::isinf(p)) return std::sqrt(mag2.maxCoeff());
  const double cell = std::pow(t.grid().spacing(), 3);
  return std::pow(mag2.pow(p / 2.0).sum() * cell, 1.0 / p);
}

}  // namespace torus
