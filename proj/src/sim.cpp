#include "torus/sim.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "torus/mollify.hpp"
#include "torus/operators.hpp"

namespace torus {

namespace {

// d/dx_axis of component c, sampled on the lattice.
Eigen::ArrayXd deriv_physical(const SpectralField& F, int c, int axis) {
  const Grid& g = F.grid();
  const int n = g.n;
  SpectralField d(g, 1);
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        const int k =
            g.wavenumber(axis == 0 ? ix : axis == 1 ? iy : iz);
        const auto idx = (std::ptrdiff_t(ix) * n + iy) * n + iz;
        d.comp(0)[idx] = std::complex<double>(0.0, double(k)) * F.comp(c)[idx];
      }
  return inverse_transform(d).comp(0);
}

double max_speed(const SpectralField& u) {
  return lp_norm(inverse_transform(u),
                 std::numeric_limits<double>::infinity());
}

void check_finite(const SpectralField& u, const char* where) {
  for (int c = 0; c < u.ncomp(); ++c)
    if (!u.comp(c).isFinite().all())
      throw sim_error(std::string("instability: non-finite state in ") + where);
}

std::string trim_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

void SimConfig::validate() const {
  if (n < 4 || n % 2) throw sim_error("config: n must be even, >= 4");
  if (!(dt > 0.0)) throw sim_error("config: dt must be positive");
  if (!(t_end >= dt)) throw sim_error("config: t_end must be >= dt");
  if (nu < 0.0) throw sim_error("config: nu must be >= 0");
  if (output_every < 1) throw sim_error("config: output_every must be >= 1");
}

SpectralField rhs(const SpectralField& u, double nu, bool dealias_products) {
  if (u.ncomp() != 3) throw field_error("rhs: need ncomp = 3");
  const Grid& g = u.grid();

  const SpectralField w = curl(u);
  const RealField ur = inverse_transform(u);
  const RealField wr = inverse_transform(w);

  RealField cr(g, 3);
  cr.comp(0) = wr.comp(1) * ur.comp(2) - wr.comp(2) * ur.comp(1);
  cr.comp(1) = wr.comp(2) * ur.comp(0) - wr.comp(0) * ur.comp(2);
  cr.comp(2) = wr.comp(0) * ur.comp(1) - wr.comp(1) * ur.comp(0);

  SpectralField out = transform(cr);
  if (dealias_products) dealias(out);
  out = leray_project(out);
  scale(out, -1.0);
  out.remove_mean();

  if (nu > 0.0) {
    const int n = g.n;
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy)
        for (int iz = 0; iz < n; ++iz) {
          const int kx = g.wavenumber(ix), ky = g.wavenumber(iy),
                    kz = g.wavenumber(iz);
          const double k2 = double(kx * kx + ky * ky + kz * kz);
          const auto idx = (std::ptrdiff_t(ix) * n + iy) * n + iz;
          for (int c = 0; c < 3; ++c)
            out.comp(c)[idx] -= nu * k2 * u.comp(c)[idx];
        }
  }
  check_finite(out, "rhs");
  return out;
}

SimState rk4_step(const SimState& state, const SimConfig& cfg) {
  const double h = cfg.dt;
  auto axpy = [](const SpectralField& u, double a, const SpectralField& v) {
    SpectralField r = v;
    scale(r, a);
    return add(u, r);
  };

  const SpectralField k1 = rhs(state.u, cfg.nu, cfg.dealias);
  const SpectralField k2 = rhs(axpy(state.u, h / 2, k1), cfg.nu, cfg.dealias);
  const SpectralField k3 = rhs(axpy(state.u, h / 2, k2), cfg.nu, cfg.dealias);
  const SpectralField k4 = rhs(axpy(state.u, h, k3), cfg.nu, cfg.dealias);

  SpectralField incr = axpy(axpy(k1, 2.0, k2), 1.0, axpy(k4, 2.0, k3));
  scale(incr, h / 6.0);
  SimState next{state.t + h, add(state.u, incr)};
  next.u = leray_project(next.u);
  next.u.remove_mean();
  if (cfg.dealias) dealias(next.u);
  check_finite(next.u, "rk4_step");
  return next;
}

double flux_term(const SpectralField& u, double eps, double guard_spacings) {
  const RealField R = commutator(u, eps, guard_spacings);
  const SpectralField ue = mollify(u, eps, guard_spacings);

  // Contract the symmetric tensor with the symmetrized gradient.
  Eigen::ArrayXd integrand =
      R.comp(0) * deriv_physical(ue, 0, 0) +
      R.comp(3) * deriv_physical(ue, 1, 1) +
      R.comp(5) * deriv_physical(ue, 2, 2) +
      R.comp(1) * (deriv_physical(ue, 1, 0) + deriv_physical(ue, 0, 1)) +
      R.comp(2) * (deriv_physical(ue, 2, 0) + deriv_physical(ue, 0, 2)) +
      R.comp(4) * (deriv_physical(ue, 2, 1) + deriv_physical(ue, 1, 2));
  return integrand.sum() * std::pow(u.grid().spacing(), 3);
}

double lamb_identity_residual(const SpectralField& u) {
  if (u.ncomp() != 3) throw field_error("lamb_identity_residual: ncomp = 3");
  const Grid& g = u.grid();
  const double unorm2 = l2_norm(u) * l2_norm(u);
  if (unorm2 == 0.0) return 0.0;

  const RealField ur = inverse_transform(u);

  // Advective form (u . grad) u.
  RealField adv(g, 3);
  for (int c = 0; c < 3; ++c)
    adv.comp(c) = ur.comp(0) * deriv_physical(u, c, 0) +
                  ur.comp(1) * deriv_physical(u, c, 1) +
                  ur.comp(2) * deriv_physical(u, c, 2);
  SpectralField lhs = transform(adv);
  dealias(lhs);

  // Rotational form w x u + 1/2 grad |u|^2.
  const RealField wr = inverse_transform(curl(u));
  RealField rot(g, 3);
  rot.comp(0) = wr.comp(1) * ur.comp(2) - wr.comp(2) * ur.comp(1);
  rot.comp(1) = wr.comp(2) * ur.comp(0) - wr.comp(0) * ur.comp(2);
  rot.comp(2) = wr.comp(0) * ur.comp(1) - wr.comp(1) * ur.comp(0);
  SpectralField rhs_f = transform(rot);

  RealField q(g, 1);
  q.comp(0) = 0.5 * (ur.comp(0).square() + ur.comp(1).square() +
                     ur.comp(2).square());
  const SpectralField qh = transform(q);
  const int n = g.n;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        const int k[3] = {g.wavenumber(ix), g.wavenumber(iy),
                          g.wavenumber(iz)};
        const auto idx = (std::ptrdiff_t(ix) * n + iy) * n + iz;
        for (int c = 0; c < 3; ++c)
          rhs_f.comp(c)[idx] +=
              std::complex<double>(0.0, double(k[c])) * qh.comp(0)[idx];
      }
  dealias(rhs_f);

  return l2_norm(subtract(lhs, rhs_f)) / unorm2;
}

namespace {

DiagnosticsRow diagnostics(const SimState& st, const SimConfig& cfg) {
  DiagnosticsRow row;
  row.t = st.t;
  const double l2 = l2_norm(st.u);
  row.energy = 0.5 * l2 * l2;
  for (double s : cfg.s_list) row.hs_norms.push_back(hs_norm(st.u, s));
  for (double e : cfg.eps_list)
    row.flux.push_back(flux_term(st.u, e, cfg.flux_guard_spacings));

  const SpectralField w = curl(st.u);
  const double wn = l2_norm(w);
  if (wn > 0.0 && l2 > 0.0) {
    const double lam = inner(w, st.u) / (l2 * l2);
    SpectralField dev = st.u;
    scale(dev, lam);
    row.beltrami_res = l2_norm(subtract(w, dev)) / wn;
  }
  row.lamb_res = lamb_identity_residual(st.u);
  row.div_res = divergence_residual(st.u);

  for (double v : {row.energy, row.beltrami_res, row.lamb_res, row.div_res})
    if (!std::isfinite(v)) throw sim_error("instability: non-finite diagnostic");
  return row;
}

void check_cfl(const SimConfig& cfg, const SpectralField& u) {
  const double cfl = cfg.dt * max_speed(u) * cfg.n / kTwoPi;
  if (!(cfl < 0.5))
    throw sim_error("cfl_violation: dt max|u| n / (2 pi) = " +
                    std::to_string(cfl) + " >= 0.5");
}

}  // namespace

std::vector<DiagnosticsRow> run(const SimConfig& cfg, const SpectralField& u0,
                                std::ostream* csv, SimState* final_state) {
  cfg.validate();
  if (u0.grid().n != cfg.n) throw sim_error("run: u0 grid does not match n");

  SimState st{0.0, leray_project(u0)};
  st.u.remove_mean();
  if (cfg.dealias) dealias(st.u);
  check_cfl(cfg, st.u);

  const long nsteps = std::lround(cfg.t_end / cfg.dt);
  std::vector<DiagnosticsRow> rows;
  if (csv) *csv << diagnostics_csv_header(cfg) << "\n";
  auto emit = [&] {
    rows.push_back(diagnostics(st, cfg));
    if (csv) *csv << diagnostics_csv_row(rows.back()) << "\n";
  };
  emit();
  for (long i = 1; i <= nsteps; ++i) {
    st = rk4_step(st, cfg);
    if (i % cfg.output_every == 0 || i == nsteps) {
      check_cfl(cfg, st.u);
      emit();
    }
  }
  if (final_state) *final_state = st;
  return rows;
}

std::string diagnostics_csv_header(const SimConfig& cfg) {
  std::string h = "t,E";
  for (double s : cfg.s_list) h += ",H" + trim_num(s);
  for (double e : cfg.eps_list) h += ",flux" + trim_num(e);
  return h + ",beltrami_res,lamb_res,div_res";
}

std::string diagnostics_csv_row(const DiagnosticsRow& row) {
  char buf[40];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  std::string out = num(row.t) + "," + num(row.energy);
  for (double v : row.hs_norms) out += "," + num(v);
  for (double v : row.flux) out += "," + num(v);
  return out + "," + num(row.beltrami_res) + "," + num(row.lamb_res) + "," +
         num(row.div_res);
}

}  // namespace torus
