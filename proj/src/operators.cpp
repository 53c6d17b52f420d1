#include "torus/operators.hpp"

#include <cmath>

namespace torus {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_vector(const SpectralField& F, const char* op) {
  if (F.ncomp() != 3)
    throw field_error(std::string(op) + ": expected a 3-component field");
}

// Applies fn(flat index, kx, ky, kz) over the whole cube.
template <typename Fn>
void for_each_mode(const Grid& g, Fn&& fn) {
  const int n = g.n;
  std::ptrdiff_t idx = 0;
  for (int ix = 0; ix < n; ++ix) {
    const int kx = g.wavenumber(ix);
    for (int iy = 0; iy < n; ++iy) {
      const int ky = g.wavenumber(iy);
      for (int iz = 0; iz < n; ++iz, ++idx) {
        fn(idx, kx, ky, g.wavenumber(iz));
      }
    }
  }
}

}  // namespace

SpectralField curl(const SpectralField& F) {
  require_vector(F, "curl");
  SpectralField W(F.grid(), 3);
  const auto& u = F;
  for_each_mode(F.grid(), [&](std::ptrdiff_t i, int kx, int ky, int kz) {
    const auto ux = u.comp(0)[i], uy = u.comp(1)[i], uz = u.comp(2)[i];
    W.comp(0)[i] = kI * (double(ky) * uz - double(kz) * uy);
    W.comp(1)[i] = kI * (double(kz) * ux - double(kx) * uz);
    W.comp(2)[i] = kI * (double(kx) * uy - double(ky) * ux);
  });
  return W;
}

SpectralField divergence(const SpectralField& F) {
  require_vector(F, "divergence");
  SpectralField D(F.grid(), 1);
  for_each_mode(F.grid(), [&](std::ptrdiff_t i, int kx, int ky, int kz) {
    D.comp(0)[i] = kI * (double(kx) * F.comp(0)[i] + double(ky) * F.comp(1)[i] +
                         double(kz) * F.comp(2)[i]);
  });
  return D;
}

SpectralField leray_project(const SpectralField& F) {
  require_vector(F, "leray_project");
  SpectralField P = F;
  for_each_mode(F.grid(), [&](std::ptrdiff_t i, int kx, int ky, int kz) {
    const double k2 = double(kx) * kx + double(ky) * ky + double(kz) * kz;
    if (k2 == 0.0) return;
    const auto kdotu =
        (double(kx) * F.comp(0)[i] + double(ky) * F.comp(1)[i] +
         double(kz) * F.comp(2)[i]) / k2;
    P.comp(0)[i] -= double(kx) * kdotu;
    P.comp(1)[i] -= double(ky) * kdotu;
    P.comp(2)[i] -= double(kz) * kdotu;
  });
  return P;
}

SpectralField curl_inverse(const SpectralField& W, double tol) {
  require_vector(W, "curl_inverse");
  if (divergence_residual(W) > tol)
    throw field_error("curl_inverse: input is not solenoidal");
  SpectralField u(W.grid(), 3);
  for_each_mode(W.grid(), [&](std::ptrdiff_t i, int kx, int ky, int kz) {
    const double k2 = double(kx) * kx + double(ky) * ky + double(kz) * kz;
    if (k2 == 0.0) return;
    const auto wx = W.comp(0)[i], wy = W.comp(1)[i], wz = W.comp(2)[i];
    u.comp(0)[i] = kI * (double(ky) * wz - double(kz) * wy) / k2;
    u.comp(1)[i] = kI * (double(kz) * wx - double(kx) * wz) / k2;
    u.comp(2)[i] = kI * (double(kx) * wy - double(ky) * wx) / k2;
  });
  return u;
}

double l2_norm(const SpectralField& F) {
  double sum = 0.0;
  for (int c = 0; c < F.ncomp(); ++c) sum += F.comp(c).abs2().sum();
  return std::sqrt(sum * kTwoPi * kTwoPi * kTwoPi);
}

double divergence_residual(const SpectralField& F) {
  double num = 0.0, den = 0.0;
  for_each_mode(F.grid(), [&](std::ptrdiff_t i, int kx, int ky, int kz) {
    const double k2 = double(kx) * kx + double(ky) * ky + double(kz) * kz;
    const auto kd = double(kx) * F.comp(0)[i] + double(ky) * F.comp(1)[i] +
                    double(kz) * F.comp(2)[i];
    num += std::norm(kd);
    den += k2 * (std::norm(F.comp(0)[i]) + std::norm(F.comp(1)[i]) +
                 std::norm(F.comp(2)[i]));
  });
  return den == 0.0 ? 0.0 : std::sqrt(num / den);
}

double hs_seminorm(const SpectralField& F, double s) {
  double sum = 0.0;
  for_each_mode(F.grid(), [&](std::ptrdiff_t i, int kx, int ky, int kz) {
    const double k2 = double(kx) * kx + double(ky) * ky + double(kz) * kz;
    if (k2 == 0.0) return;
    double a2 = 0.0;
    for (int c = 0; c < F.ncomp(); ++c) a2 += std::norm(F.comp(c)[i]);
    sum += std::pow(k2, s) * a2;
  });
  return std::sqrt(sum * kTwoPi * kTwoPi * kTwoPi);
}

double hs_norm(const SpectralField& F, double s) {
  const double l2 = l2_norm(F), semi = hs_seminorm(F, s);
  return std::sqrt(l2 * l2 + semi * semi);
}

double inner(const SpectralField& F, const SpectralField& G) {
  if (F.grid() != G.grid() || F.ncomp() != G.ncomp())
    throw field_error("inner: field mismatch");
  double sum = 0.0;
  for (int c = 0; c < F.ncomp(); ++c)
    sum += (F.comp(c).conjugate() * G.comp(c)).real().sum();
  return sum * kTwoPi * kTwoPi * kTwoPi;
}

double helicity(const SpectralField& u) { return inner(u, curl(u)); }

double lp_norm(const RealField& f, double p) {
  const std::ptrdiff_t m = f.grid().size3();
  Eigen::ArrayXd mag2 = Eigen::ArrayXd::Zero(m);
  for (int c = 0; c < f.ncomp(); ++c) mag2 += f.comp(c).square();
  if (std::isinf(p)) return std::sqrt(mag2.maxCoeff());
  const double h = f.grid().spacing();
  const double cell = h * h * h;
  return std::pow((mag2.pow(p / 2.0)).sum() * cell, 1.0 / p);
}

RealField multiply(const RealField& a, const RealField& b) {
  if (a.grid() != b.grid()) throw field_error("multiply: grid mismatch");
  if (a.ncomp() != b.ncomp() && a.ncomp() != 1 && b.ncomp() != 1)
    throw field_error("multiply: component mismatch");
  const int nc = std::max(a.ncomp(), b.ncomp());
  RealField r(a.grid(), nc);
  for (int c = 0; c < nc; ++c)
    r.comp(c) = a.comp(a.ncomp() == 1 ? 0 : c) * b.comp(b.ncomp() == 1 ? 0 : c);
  return r;
}

void dealias(SpectralField& F) {
  const int cutoff = F.grid().n / 3;
  for_each_mode(F.grid(), [&](std::ptrdiff_t i, int kx, int ky, int kz) {
    if (std::abs(kx) > cutoff || std::abs(ky) > cutoff || std::abs(kz) > cutoff)
      for (int c = 0; c < F.ncomp(); ++c) F.comp(c)[i] = 0.0;
  });
}

SpectralField add(const SpectralField& a, const SpectralField& b) {
  if (a.grid() != b.grid() || a.ncomp() != b.ncomp())
    throw field_error("add: field mismatch");
  SpectralField r = a;
  for (int c = 0; c < a.ncomp(); ++c) r.comp(c) += b.comp(c);
  return r;
}

SpectralField subtract(const SpectralField& a, const SpectralField& b) {
  if (a.grid() != b.grid() || a.ncomp() != b.ncomp())
    throw field_error("subtract: field mismatch");
  SpectralField r = a;
  for (int c = 0; c < a.ncomp(); ++c) r.comp(c) -= b.comp(c);
  return r;
}

void scale(SpectralField& F, double factor) {
  for (int c = 0; c < F.ncomp(); ++c) F.comp(c) *= factor;
}

}  // namespace torus
