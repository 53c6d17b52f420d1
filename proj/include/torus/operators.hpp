#pragma once

#include "torus/field.hpp"

namespace torus {

// Differential operators as Fourier multipliers. curl and divergence act on
// 3-component fields; leray_project removes the compressible part
// uhat -> uhat - k (k.uhat)/|k|^2 and fixes solenoidal fields exactly.
SpectralField curl(const SpectralField& F);
SpectralField divergence(const SpectralField& F);
SpectralField leray_project(const SpectralField& F);

// Biot-Savart: the unique zero-mean u with curl u = W for solenoidal W,
// uhat(k) = (i k x What(k)) / |k|^2. Rejects inputs whose divergence
// residual exceeds `tol`.
SpectralField curl_inverse(const SpectralField& W, double tol = 1e-10);

// (2pi)^3-weighted L2 norm computed spectrally (Parseval).
double l2_norm(const SpectralField& F);
// Relative divergence residual |k.uhat| / (|k||uhat|) in L2.
double divergence_residual(const SpectralField& F);

// Fractional Sobolev seminorm ((2pi)^3 sum_{k!=0} |k|^{2s} |uhat|^2)^{1/2}
// and norm (L2^2 + seminorm^2)^{1/2}; any real s, negative included.
double hs_seminorm(const SpectralField& F, double s);
double hs_norm(const SpectralField& F, double s);

// L2 pairing (2pi)^3 Re sum conj(Fhat).Ghat.
double inner(const SpectralField& F, const SpectralField& G);
// Helicity <u, curl u>.
double helicity(const SpectralField& u);

// Lattice quadrature with cell weight (2pi/n)^3; p = inf is the max over
// samples. Vector fields use the pointwise Euclidean magnitude.
double lp_norm(const RealField& f, double p);

// Pointwise arithmetic helpers on matching grids.
RealField multiply(const RealField& a, const RealField& b);

// Zero all modes with any |k_i| > n/3 (sharp 2/3-rule mask, Nyquist
// included).
void dealias(SpectralField& F);

SpectralField add(const SpectralField& a, const SpectralField& b);
SpectralField subtract(const SpectralField& a, const SpectralField& b);
void scale(SpectralField& F, double factor);

}  // namespace torus
