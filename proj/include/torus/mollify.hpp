#pragma once

#include <vector>

#include "torus/field.hpp"

namespace torus {

// Standard radial bump c exp(-1/(1-|x|^2)) on |x| < 1, unit mass, scaled to
// support radius eps. Applied spectrally: convolution is multiplication by
// the kernel transform rho_hat(eps |k|), evaluated by high-order radial
// quadrature.
class Kernel {
 public:
  explicit Kernel(double eps);

  double eps() const { return eps_; }
  // rho_hat(eps |k|); rho_hat(0) = 1 and |rho_hat| <= 1 (rho >= 0, mass 1).
  double multiplier(double k_abs) const;

 private:
  double eps_;
};

// Friedrichs mollification f_eps = rho_eps * f. Preserves solenoidality,
// zero mean and Hermitian symmetry, and contracts every hs_norm.
// `guard_spacings` rejects eps below that many grid spacings; the default 4
// is the simulation-facing guard, rate probes on band-limited fields may
// lower it (the spectral multiplier stays exact for any eps > 0).
SpectralField mollify(const SpectralField& F, double eps,
                      double guard_spacings = 4.0);

// Symmetric tensor u (x) u as a 6-component spectral field in the order
// (xx, xy, xz, yy, yz, zz), computed alias-free by zero-padded transforms;
// exact for every retained mode |k_i| <= n/2 - 1.
SpectralField tensor_square(const SpectralField& u);

// Mollification commutator (u (x) u)_eps - u_eps (x) u_eps as a symmetric
// tensor on the lattice; products are alias-free via tensor_square.
RealField commutator(const SpectralField& u, double eps,
                     double guard_spacings = 4.0);

// Lattice L^p norm of a 6-component symmetric tensor using the pointwise
// Frobenius magnitude (off-diagonal entries counted twice).
double tensor_lp_norm(const RealField& t, double p);

struct RateReport {
  std::vector<double> eps_grid;   // strictly decreasing
  std::vector<double> norms;      // measured values, all positive
  double fitted_slope = 0.0;      // OLS in log-log
  double r_squared = 0.0;
  double expected_slope = 0.0;
};

// Ordinary least squares of log(value) against log(eps); needs >= 4 points,
// all values positive.
RateReport rate_fit(const std::vector<double>& eps_grid,
                    const std::vector<double>& values,
                    double expected_slope = 0.0);

// Geometric grid eps_j = eps0 * 2^{-j/2}, j = 0..steps-1, clipped at
// `floor_eps`.
std::vector<double> default_eps_grid(double eps0, int steps, double floor_eps);

struct LemmaRates {
  RateReport grad_report;  // ||grad f_eps||_{L^2} vs eps, expected alpha - 1
  RateReport comm_report;  // L^1 commutator norm vs eps, expected 2 alpha
  std::vector<double> vanishing_values;  // eps^{1-alpha} ||grad f_eps||
  bool vanishing_monotone = false;       // decreasing toward 0 on the grid
};

// Empirical check of the mollifier estimates on a field of known regularity
// alpha in (0,1).
LemmaRates verify_lemma_rates(const SpectralField& F, double alpha,
                              const std::vector<double>& eps_grid,
                              double guard_spacings = 1.0);

// ||grad f_eps||_{L^2}, evaluated spectrally.
double mollified_gradient_l2(const SpectralField& F, double eps,
                             double guard_spacings = 1.0);

}  // namespace torus
