// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Criterion 5 exercises a field at exactly critical regularity; two of its
// sub-checks are expected to saturate there and the line reports that
// honestly instead of loosening the bands.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "torus/builders.hpp"
#include "torus/exponents.hpp"
#include "torus/gagliardo.hpp"
#include "torus/mollify.hpp"
#include "torus/operators.hpp"
#include "torus/sim.hpp"

using namespace torus;

namespace {

int g_failures = 0;

void report(int k, bool ok, const std::string& detail, double secs) {
  std::printf("criterion %d: %s  %s  [%.1fs]\n", k, ok ? "PASS" : "FAIL",
              detail.c_str(), secs);
  if (!ok) ++g_failures;
}

template <typename F>
void timed(int k, F body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  report(k, ok, detail, secs);
}

const std::vector<Rat> kTauGrid = {Rat(51, 100), Rat(3, 5), Rat(3, 4),
                                   Rat(1),       Rat(5, 4), Rat(4, 3),
                                   Rat(7, 5),    Rat(3, 2)};
const std::vector<Rat> kBetaGrid = {Rat(1),      Rat(2),  Rat(5, 2),
                                    Rat(10, 3),  Rat(5),  Rat(25, 4),
                                    Rat(10),     Rat(25)};

SpectralField band_limited(const Grid& g, int kmax, std::uint64_t seed,
                           double target_speed) {
  SpectralField u = synth_regularity(g, 1.2, seed);
  const int n = g.n;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        const int kx = g.wavenumber(ix), ky = g.wavenumber(iy),
                  kz = g.wavenumber(iz);
        if (kx * kx + ky * ky + kz * kz > kmax * kmax) {
          const auto idx = (std::ptrdiff_t(ix) * n + iy) * n + iz;
          for (int c = 0; c < 3; ++c) u.comp(c)[idx] = 0.0;
        }
      }
  const double speed =
      lp_norm(inverse_transform(u), std::numeric_limits<double>::infinity());
  scale(u, target_speed / speed);
  return u;
}

// 1. Closed-form Beltrami verdict agrees with the bootstrap trace on the
//    whole tau x beta grid; the threshold at (3/2, 5/2) is decided exactly.
bool criterion1(std::string& detail) {
  int checked = 0;
  for (const Rat& tau : kTauGrid)
    for (const Rat& beta : kBetaGrid) {
      const Verdict direct = beltrami_verdict(tau, beta);
      const Verdict traced = bootstrap_trace(tau, beta).verdict;
      if (direct.outcome != traced.outcome) {
        detail = "mismatch at tau=" + to_string(tau) +
                 " beta=" + to_string(beta);
        return false;
      }
      ++checked;
    }
  if (beltrami_verdict(Rat(3, 2), Rat(5, 2)).outcome != Outcome::no_verdict) {
    detail = "boundary (3/2, 5/2) not no_verdict";
    return false;
  }
  if (beltrami_verdict(Rat(3, 2), Rat(5, 2) + Rat(1, 1000)).outcome !=
      Outcome::conserves) {
    detail = "boundary (3/2, 5/2 + 1/1000) not conserves";
    return false;
  }
  detail = "verdict equivalence on " + std::to_string(checked) +
           " grid points, boundary exact";
  return true;
}

// 2. The recursion collapses to beta_n = beta/n, sigma_n = n(tau - 1/2).
bool criterion2(std::string& detail) {
  int steps = 0;
  for (const Rat& tau : kTauGrid)
    for (const Rat& beta : kBetaGrid) {
      const BootstrapTrace tr = bootstrap_trace(tau, beta);
      for (const auto& st : tr.steps) {
        if (st.beta_n != beta / st.n || st.sigma_n.attained ||
            st.sigma_n.value != st.n * (tau - Rat(1, 2))) {
          detail = "closed form broken at tau=" + to_string(tau) +
                   " beta=" + to_string(beta) + " n=" + std::to_string(st.n);
          return false;
        }
        ++steps;
      }
    }
  detail = "closed forms exact over " + std::to_string(steps) + " steps";
  return true;
}

// 3. Exponent identities hold exactly for random rationals s in [5/6, 1).
bool criterion3(std::string& detail) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const long den = 2 + long(rng() % 9999);
    const long num = long(rng() % den);
    const Rat s = Rat(5, 6) + Rat(num, 6 * den);  // in [5/6, 1)
    const EmbeddingExponents e = embedding_exponents(s);
    if (!e.alpha || !e.theta || !e.p_commutator) {
      detail = "missing exponent at s=" + to_string(s);
      return false;
    }
    if (2 * *e.alpha * *e.theta != 1 - s) {
      detail = "2 alpha theta != 1 - s at s=" + to_string(s);
      return false;
    }
    if (Rat(1, 2) - s / 3 != Rat(1, 1) / (2 * *e.p_commutator) - *e.alpha / 3) {
      detail = "embedding balance broken at s=" + to_string(s);
      return false;
    }
  }
  detail = "2 alpha theta = 1 - s and the Sobolev balance exact, 50 samples";
  return true;
}

// 4. ABC data is a stationary Euler solution at desk scale.
bool criterion4(std::string& detail) {
  SimConfig cfg;
  cfg.n = 32;
  cfg.dt = 1e-3;
  cfg.t_end = 1.0;
  cfg.nu = 0.0;
  cfg.output_every = 200;

  Grid g(cfg.n);
  const SpectralField u0 = make_abc(g, 1.0, 1.0, 1.0);
  const double l20 = l2_norm(u0);
  const double E0 = 0.5 * l20 * l20;
  const double r0 = l2_norm(rhs(u0, 0.0)) / (l20 * l20);

  double drift = 0.0, beltrami = 0.0;
  for (const auto& row : run(cfg, u0)) {
    drift = std::max(drift, std::abs(row.energy - E0) / E0);
    beltrami = std::max(beltrami, row.beltrami_res);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "drift %.2e (<1e-6), beltrami %.2e (<1e-6), |rhs| %.2e "
                "(<1e-10)",
                drift, beltrami, r0);
  detail = buf;
  return drift < 1e-6 && beltrami < 1e-6 && r0 < 1e-10;
}

// 5. Mollifier rates at exactly critical regularity alpha, n = 128, eps over
//    1.5 decades. The commutator band and the strict monotone decrease are
//    saturated by the critical spectrum; see the per-alpha lines.
bool criterion5(std::string& detail) {
  const Grid g(128);
  std::vector<double> grid;
  for (int j = 0; j < 11; ++j) grid.push_back(std::pow(2.0, -0.5 * j));

  bool all_ok = true;
  std::string parts;
  const std::pair<int, int> alphas[] = {{1, 3}, {1, 2}, {5, 6}};
  for (auto [num, den] : alphas) {
    const double a = double(num) / den;
    const SpectralField F = synth_regularity(g, a, 41);
    const LemmaRates lr = verify_lemma_rates(F, a, grid, 0.5);
    const double comm = lr.comm_report.fitted_slope;
    const double grad = lr.grad_report.fitted_slope;
    const bool comm_ok = std::abs(comm - 2 * a) <= 0.2;
    const bool grad_ok = grad >= a - 1.0 - 0.15;
    const bool mono_ok = lr.vanishing_monotone;
    all_ok = all_ok && comm_ok && grad_ok && mono_ok;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "\n    alpha %d/%d: comm slope %.3f vs %.3f+-0.2 %s, grad "
                  "slope %.3f >= %.3f %s, scaled-grad monotone %s",
                  num, den, comm, 2 * a, comm_ok ? "ok" : "OUT", grad,
                  a - 1.15, grad_ok ? "ok" : "OUT",
                  mono_ok ? "ok" : "NO (critical spectrum plateaus)");
    parts += buf;
  }
  detail = (all_ok ? "all bands met" :
            "bands saturated at critical regularity") + parts;
  return all_ok;
}

// 6. Quadrature Gagliardo seminorm tracks the spectral H^alpha seminorm.
bool criterion6(std::string& detail) {
  const Grid g(8);
  char buf[64];
  std::string parts;
  for (double a : {0.25, 0.5, 0.75}) {
    double lo = 1e300, hi = 0.0, sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const SpectralField f = synth_scalar(g, a + 0.6, seed);
      const double ratio = gagliardo_seminorm(inverse_transform(f), a, 2.0) /
                           hs_seminorm(f, a);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      sum += ratio;
    }
    const double spread = (hi - lo) / (sum / 5);
    std::snprintf(buf, sizeof buf, " alpha %.2f spread %.1f%%", a,
                  100 * spread);
    parts += buf;
    if (spread >= 0.10) {
      detail = "ratio spread too wide:" + parts;
      return false;
    }
  }
  detail = "gagliardo/hs ratio stable across seeds:" + parts;
  return true;
}

// 7. The flux term vanishes with eps: identically for ABC (disjoint spectral
//    supports), at a positive fitted rate for band-limited random data.
bool criterion7(std::string& detail) {
  const Grid g(32);
  const SpectralField abc = make_abc(g, 1.0, 1.0, 1.0);
  const double scale_abc = l2_norm(abc) * l2_norm(abc);
  for (double eps : {0.8, 0.4, 0.2, 0.1})
    if (std::abs(flux_term(abc, eps, 0.5)) >= 1e-12 * scale_abc) {
      detail = "ABC flux not machine zero at eps=" + std::to_string(eps);
      return false;
    }

  const SpectralField u = band_limited(g, 4, 31337, 1.0);
  const std::vector<double> grid = default_eps_grid(0.2, 6, 0.0);
  std::vector<double> vals;
  for (double eps : grid) vals.push_back(std::abs(flux_term(u, eps, 0.15)));
  const RateReport r = rate_fit(grid, vals, 2.0);
  char buf[120];
  std::snprintf(buf, sizeof buf,
                "ABC flux machine zero; random data slope %.2f (>0), R2 %.3f "
                "(>0.9)",
                r.fitted_slope, r.r_squared);
  detail = buf;
  return r.fitted_slope > 0.0 && r.r_squared > 0.9;
}

// 8. Energy drift scales as dt^4 under refinement. The drift is measured as
//    the max deviation over the run; the endpoint alone partially cancels
//    the oscillatory error component and reads high.
bool criterion8(std::string& detail) {
  const Grid g(32);
  const SpectralField u0 = band_limited(g, 4, 99, 8.0);
  const double l20 = l2_norm(u0);
  const double E0 = 0.5 * l20 * l20;

  const std::vector<double> dts = {4e-3, 2e-3, 1e-3, 5e-4};
  std::vector<double> drifts;
  for (double dt : dts) {
    SimConfig cfg;
    cfg.n = 32;
    cfg.dt = dt;
    cfg.t_end = 1.0;
    cfg.output_every = std::max(1, int(0.02 / dt));
    double dmax = 0.0;
    for (const auto& row : run(cfg, u0))
      dmax = std::max(dmax, std::abs(row.energy - E0) / E0);
    drifts.push_back(dmax);
  }
  const RateReport r = rate_fit(dts, drifts, 4.0);
  char buf[96];
  std::snprintf(buf, sizeof buf, "drift slope %.3f in 4+-0.5, R2 %.3f",
                r.fitted_slope, r.r_squared);
  detail = buf;
  return std::abs(r.fitted_slope - 4.0) <= 0.5;
}

}  // namespace

int main() {
  timed(1, criterion1);
  timed(2, criterion2);
  timed(3, criterion3);
  timed(4, criterion4);
  timed(5, criterion5);
  timed(6, criterion6);
  timed(7, criterion7);
  timed(8, criterion8);
  std::printf("%d of 8 criteria passed\n", 8 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
