#include "torus/builders.hpp"

#include <cmath>
#include <random>

namespace torus {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// Canonical representative of each Hermitian pair {k, -k}.
bool canonical_half(int kx, int ky, int kz) {
  if (kx != 0) return kx > 0;
  if (ky != 0) return ky > 0;
  return kz > 0;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic per-wavevector stream: refining the grid only adds modes.
std::mt19937_64 mode_rng(std::uint64_t seed, int kx, int ky, int kz) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ std::uint64_t(std::int64_t(kx) + (1 << 20)));
  h = splitmix64(h ^ std::uint64_t(std::int64_t(ky) + (1 << 20)));
  h = splitmix64(h ^ std::uint64_t(std::int64_t(kz) + (1 << 20)));
  return std::mt19937_64(h);
}

void set_hermitian_pair(SpectralField& F, const std::array<int, 3>& k,
                        const std::array<std::complex<double>, 3>& value) {
  for (int c = 0; c < 3; ++c) {
    F.at(c, k[0], k[1], k[2]) = value[c];
    F.at(c, -k[0], -k[1], -k[2]) = std::conj(value[c]);
  }
}

template <typename Fn>
void for_each_shell_vector(int shell, Fn&& fn) {
  const int r = int(std::sqrt(double(shell))) + 1;
  for (int kx = -r; kx <= r; ++kx)
    for (int ky = -r; ky <= r; ++ky)
      for (int kz = -r; kz <= r; ++kz)
        if (kx * kx + ky * ky + kz * kz == shell) fn(kx, ky, kz);
}

}  // namespace

HelicalMode helical_mode(std::array<int, 3> k, int sign) {
  if (k == std::array<int, 3>{0, 0, 0})
    throw field_error("helical_mode: k must be nonzero");
  if (sign != 1 && sign != -1)
    throw field_error("helical_mode: sign must be +-1");
  Eigen::Vector3d kd(k[0], k[1], k[2]);
  const Eigen::Vector3d khat = kd.normalized();
  // Any unit vector orthogonal to k; keep the choice even under k -> -k so
  // that h(-k) = conj(h(k)).
  Eigen::Vector3d a = std::abs(khat.x()) < 0.9 ? Eigen::Vector3d::UnitX()
                                               : Eigen::Vector3d::UnitY();
  if (!canonical_half(k[0], k[1], k[2])) kd = -kd;
  const Eigen::Vector3d e1 = kd.cross(a).normalized();
  const Eigen::Vector3d e2 = khat.cross(e1);
  HelicalMode m;
  m.k = k;
  m.sign = sign;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int c = 0; c < 3; ++c)
    m.h[c] = (e1[c] + kI * double(sign) * e2[c]) * inv_sqrt2;
  return m;
}

SpectralField make_abc(const Grid& grid, double A, double B, double C) {
  SpectralField u(grid, 3);
  const std::complex<double> half(0.5, 0.0);
  const std::complex<double> mihalf(0.0, -0.5);  // sin t = -i/2 e^{it} + c.c.
  // A sin x3 + C cos x2
  u.at(0, 0, 0, 1) = mihalf * A;
  u.at(0, 0, 0, -1) = std::conj(mihalf * A);
  u.at(0, 0, 1, 0) = half * C;
  u.at(0, 0, -1, 0) = half * C;
  // B sin x1 + A cos x3
  u.at(1, 1, 0, 0) = mihalf * B;
  u.at(1, -1, 0, 0) = std::conj(mihalf * B);
  u.at(1, 0, 0, 1) = half * A;
  u.at(1, 0, 0, -1) = half * A;
  // C sin x2 + B cos x1
  u.at(2, 0, 1, 0) = mihalf * C;
  u.at(2, 0, -1, 0) = std::conj(mihalf * C);
  u.at(2, 1, 0, 0) = half * B;
  u.at(2, -1, 0, 0) = half * B;
  return u;
}

SpectralField make_helical_beltrami(const Grid& grid, int shell, int sign,
                                    std::uint64_t seed) {
  if (shell <= 0) throw field_error("make_helical_beltrami: shell must be > 0");
  bool any = false;
  for_each_shell_vector(shell, [&](int, int, int) { any = true; });
  if (!any)
    throw field_error("make_helical_beltrami: empty shell |k|^2 = " +
                      std::to_string(shell));
  if (std::sqrt(double(shell)) > grid.n / 2 - 1)
    throw field_error("make_helical_beltrami: shell does not fit the grid");

  SpectralField u(grid, 3);
  for_each_shell_vector(shell, [&](int kx, int ky, int kz) {
    if (!canonical_half(kx, ky, kz)) return;
    auto rng = mode_rng(seed, kx, ky, kz);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::complex<double> amp(gauss(rng), gauss(rng));
    const HelicalMode m = helical_mode({kx, ky, kz}, sign);
    set_hermitian_pair(u, m.k, {amp * m.h[0], amp * m.h[1], amp * m.h[2]});
  });
  return u;
}

SpectralField synth_regularity(const Grid& grid, double s_target,
                               std::uint64_t seed) {
  if (s_target <= 0)
    throw field_error("synth_regularity: s_target must be > 0");
  SpectralField u(grid, 3);
  const int kmax = grid.n / 2 - 1;
  const double decay = s_target + 1.5;
  for (int kx = -kmax; kx <= kmax; ++kx)
    for (int ky = -kmax; ky <= kmax; ++ky)
      for (int kz = -kmax; kz <= kmax; ++kz) {
        if (!canonical_half(kx, ky, kz)) continue;
        const double kn = std::sqrt(double(kx * kx + ky * ky + kz * kz));
        if (kn > kmax) continue;
        auto rng = mode_rng(seed, kx, ky, kz);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        const double phase = kTwoPi * uni(rng);
        const int sign = uni(rng) < 0.5 ? 1 : -1;
        const std::complex<double> amp =
            std::pow(kn, -decay) * std::exp(kI * phase);
        const HelicalMode m = helical_mode({kx, ky, kz}, sign);
        set_hermitian_pair(u, m.k, {amp * m.h[0], amp * m.h[1], amp * m.h[2]});
      }
  return u;
}

SpectralField synth_scalar(const Grid& grid, double s_target,
                           std::uint64_t seed) {
  if (s_target <= 0) throw field_error("synth_scalar: s_target must be > 0");
  SpectralField f(grid, 1);
  const int kmax = grid.n / 2 - 1;
  const double decay = s_target + 1.5;
  for (int kx = -kmax; kx <= kmax; ++kx)
    for (int ky = -kmax; ky <= kmax; ++ky)
      for (int kz = -kmax; kz <= kmax; ++kz) {
        if (!canonical_half(kx, ky, kz)) continue;
        const double kn = std::sqrt(double(kx * kx + ky * ky + kz * kz));
        if (kn > kmax) continue;
        auto rng = mode_rng(seed, kx, ky, kz);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        const std::complex<double> amp =
            std::pow(kn, -decay) * std::exp(kI * kTwoPi * uni(rng));
        f.at(0, kx, ky, kz) = amp;
        f.at(0, -kx, -ky, -kz) = std::conj(amp);
      }
  return f;
}

}  // namespace torus
