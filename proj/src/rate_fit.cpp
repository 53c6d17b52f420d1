#include <cmath>

#include "torus/mollify.hpp"
#include "torus/operators.hpp"

namespace torus {

RateReport rate_fit(const std::vector<double>& eps_grid,
                    const std::vector<double>& values, double expected_slope) {
  const std::size_t m = eps_grid.size();
  if (m < 4 || values.size() != m)
    throw field_error("rate_fit: need >= 4 matching points");
  for (std::size_t j = 0; j + 1 < m; ++j)
    if (!(eps_grid[j] > eps_grid[j + 1]))
      throw field_error("rate_fit: eps_grid must be strictly decreasing");
  for (double v : values)
    if (!(v > 0.0)) throw field_error("rate_fit: values must be positive");

  Eigen::ArrayXd x(m), y(m);
  for (std::size_t j = 0; j < m; ++j) {
    x[Eigen::Index(j)] = std::log(eps_grid[j]);
    y[Eigen::Index(j)] = std::log(values[j]);
  }
  const double xm = x.mean(), ym = y.mean();
  const double sxx = (x - xm).square().sum();
  const double sxy = ((x - xm) * (y - ym)).sum();
  const double slope = sxy / sxx;
  const double ss_tot = (y - ym).square().sum();
  const double ss_res = (y - ym - slope * (x - xm)).square().sum();

  RateReport r;
  r.eps_grid = eps_grid;
  r.norms = values;
  r.fitted_slope = slope;
  r.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  r.expected_slope = expected_slope;
  return r;
}

std::vector<double> default_eps_grid(double eps0, int steps, double floor_eps) {
  if (!(eps0 > 0.0) || steps < 1)
    throw field_error("default_eps_grid: need eps0 > 0, steps >= 1");
  std::vector<double> grid;
  for (int j = 0; j < steps; ++j) {
    const double e = eps0 * std::pow(2.0, -0.5 * j);
    if (e < floor_eps) break;
    grid.push_back(e);
  }
  return grid;
}

double mollified_gradient_l2(const SpectralField& F, double eps,
                             double guard_spacings) {
  const SpectralField Fm = mollify(F, eps, guard_spacings);
  const Grid& g = F.grid();
  const int n = g.n;
  double sum = 0.0;
  for (int ix = 0; ix < n; ++ix) {
    const int kx = g.wavenumber(ix);
    for (int iy = 0; iy < n; ++iy) {
      const int ky = g.wavenumber(iy);
      for (int iz = 0; iz < n; ++iz) {
        const int kz = g.wavenumber(iz);
        const double k2 = double(kx * kx + ky * ky + kz * kz);
        const auto idx = (std::ptrdiff_t(ix) * n + iy) * n + iz;
        for (int c = 0; c < Fm.ncomp(); ++c)
          sum += k2 * std::norm(Fm.comp(c)[idx]);
      }
    }
  }
  return std::sqrt(std::pow(kTwoPi, 3) * sum);
}

LemmaRates verify_lemma_rates(const SpectralField& F, double alpha,
                              const std::vector<double>& eps_grid,
                              double guard_spacings) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw field_error("verify_lemma_rates: need 0 < alpha < 1");

  std::vector<double> grads, comms;
  grads.reserve(eps_grid.size());
  comms.reserve(eps_grid.size());
  for (double eps : eps_grid) {
    grads.push_back(mollified_gradient_l2(F, eps, guard_spacings));
    comms.push_back(tensor_lp_norm(commutator(F, eps, guard_spacings), 1.0));
  }

  LemmaRates out;
  out.grad_report = rate_fit(eps_grid, grads, alpha - 1.0);
  out.comm_report = rate_fit(eps_grid, comms, 2.0 * alpha);
  out.vanishing_values.resize(eps_grid.size());
  out.vanishing_monotone = true;
  for (std::size_t j = 0; j < eps_grid.size(); ++j) {
    out.vanishing_values[j] = std::pow(eps_grid[j], 1.0 - alpha) * grads[j];
    if (j > 0 && out.vanishing_values[j] >= out.vanishing_values[j - 1])
      out.vanishing_monotone = false;
  }
  return out;
}

}  // namespace torus
