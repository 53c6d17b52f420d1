#pragma once

#include <cstdint>

#include "torus/field.hpp"

namespace torus {

// One curl eigenmode: i k x h = sign |k| h, k.h = 0, |h| = 1.
struct HelicalMode {
  std::array<int, 3> k;
  int sign;  // +1 or -1
  std::array<std::complex<double>, 3> h;
};

// Polarization vector for a wavevector; h(-k) = conj(h(k)) so that Hermitian
// pairs stay curl eigenfields.
HelicalMode helical_mode(std::array<int, 3> k, int sign);

// u = (A sin x3 + C cos x2, B sin x1 + A cos x3, C sin x2 + B cos x1);
// solenoidal, curl u = u exactly in the spectral representation.
SpectralField make_abc(const Grid& grid, double A, double B, double C);

// Random superposition of helical modes on the shell |k|^2 = shell with a
// common chirality: curl u = sign sqrt(shell) u. Throws field_error when the
// shell has no integer points (e.g. 7) or does not fit the grid.
SpectralField make_helical_beltrami(const Grid& grid, int shell, int sign,
                                    std::uint64_t seed);

// Solenoidal field with |uhat(k)| ~ |k|^{-(s_target + 3/2)}, random phases
// and chirality drawn per wavevector from (seed, k): refining the grid only
// adds shells. hs_norm stays grid-stable for s < s_target and grows without
// bound for s > s_target.
SpectralField synth_regularity(const Grid& grid, double s_target,
                               std::uint64_t seed);

// Scalar analogue of synth_regularity (for quadrature probes).
SpectralField synth_scalar(const Grid& grid, double s_target,
                           std::uint64_t seed);

}  // namespace torus
