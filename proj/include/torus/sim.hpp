#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "torus/field.hpp"

namespace torus {

struct sim_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SimConfig {
  int n = 32;
  double dt = 1e-3;
  double t_end = 1.0;
  double nu = 0.0;        // 0 = Euler
  bool dealias = true;    // 2/3-rule
  std::vector<double> s_list;    // H^s diagnostics
  std::vector<double> eps_list;  // flux mollification scales
  int output_every = 10;
  double flux_guard_spacings = 4.0;

  void validate() const;
};

struct SimState {
  double t = 0.0;
  SpectralField u;
};

struct DiagnosticsRow {
  double t = 0.0;
  double energy = 0.0;  // E(t) = 1/2 ||u||^2
  std::vector<double> hs_norms;
  std::vector<double> flux;
  double beltrami_res = 0.0;  // ||w - lam u|| / ||w||, lam = <w,u>/||u||^2
  double lamb_res = 0.0;
  double div_res = 0.0;
};

// -P[w x u] - nu |k|^2 uhat in spectral space; the Bernoulli gradient is
// annihilated by the projection. The cross product is formed pointwise in
// physical space and 2/3-truncated when `dealias` is set.
SpectralField rhs(const SpectralField& u, double nu, bool dealias = true);

// Classical fixed-step RK4; the advanced state is re-projected, mean-freed
// and (optionally) dealiased. Throws sim_error on NaN/overflow.
SimState rk4_step(const SimState& state, const SimConfig& cfg);

// Integrates u0 to t_end, emitting one row every output_every steps plus the
// final time. Enforces the CFL guard dt max|u| n / (2 pi) < 0.5 at start and
// at every output row. Streams CSV when `csv` is non-null; leaves the final
// state in `final_state` when non-null.
std::vector<DiagnosticsRow> run(const SimConfig& cfg, const SpectralField& u0,
                                std::ostream* csv = nullptr,
                                SimState* final_state = nullptr);

// int ((u (x) u)_eps - u_eps (x) u_eps) : grad u_eps dx by lattice
// quadrature.
double flux_term(const SpectralField& u, double eps,
                 double guard_spacings = 4.0);

// || (u . grad) u - (w x u + 1/2 grad |u|^2) ||_{L^2} / ||u||^2 with both
// sides formed independently in physical space and 2/3-truncated; machine
// zero for band-limited (|k_i| <= n/3) solenoidal u.
double lamb_identity_residual(const SpectralField& u);

std::string diagnostics_csv_header(const SimConfig& cfg);
std::string diagnostics_csv_row(const DiagnosticsRow& row);

}  // namespace torus
