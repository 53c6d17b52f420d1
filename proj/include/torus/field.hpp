#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

namespace torus {

struct field_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Uniform n^3 lattice on [0, 2pi)^3, n even, with integer wavevectors
// |k_i| <= n/2. Flattened index is (ix*n + iy)*n + iz.
struct Grid {
  int n = 0;

  Grid() = default;
  explicit Grid(int n_) : n(n_) {
    if (n < 4 || n % 2 != 0) throw field_error("Grid: n must be even, >= 4");
  }

  std::ptrdiff_t size3() const {
    return std::ptrdiff_t(n) * n * n;
  }
  double spacing() const { return kTwoPi / n; }
  // Signed wavevector component for a storage index in [0, n).
  int wavenumber(int i) const { return i <= n / 2 ? i : i - n; }

  friend bool operator==(const Grid& a, const Grid& b) { return a.n == b.n; }
  friend bool operator!=(const Grid& a, const Grid& b) { return a.n != b.n; }
};

// Fourier coefficients of a real periodic field, one full complex cube per
// component, convention u(x) = sum_k uhat(k) e^{i k.x}. Reality of the
// represented field corresponds to Hermitian symmetry of the coefficients;
// the constructors in builders.hpp produce it exactly.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(const Grid& grid, int ncomp)
      : grid_(grid), comps_(static_cast<std::size_t>(ncomp)) {
    if (ncomp != 1 && ncomp != 3 && ncomp != 6)
      throw field_error("SpectralField: ncomp must be 1, 3 or 6");
    for (auto& c : comps_) c = Eigen::ArrayXcd::Zero(grid.size3());
  }

  const Grid& grid() const { return grid_; }
  int ncomp() const { return static_cast<int>(comps_.size()); }
  Eigen::ArrayXcd& comp(int i) { return comps_.at(i); }
  const Eigen::ArrayXcd& comp(int i) const { return comps_.at(i); }

  std::complex<double>& at(int c, int ix, int iy, int iz) {
    return comps_.at(c)[index(ix, iy, iz)];
  }
  std::ptrdiff_t index(int ix, int iy, int iz) const {
    const int n = grid_.n;
    auto wrap = [n](int i) { return ((i % n) + n) % n; };
    return (std::ptrdiff_t(wrap(ix)) * n + wrap(iy)) * n + wrap(iz);
  }

  void remove_mean() {
    for (auto& c : comps_) c[0] = 0.0;
  }

 private:
  Grid grid_;
  std::vector<Eigen::ArrayXcd> comps_;
};

// Point samples on the lattice, same flattening as SpectralField.
class RealField {
 public:
  RealField() = default;
  RealField(const Grid& grid, int ncomp)
      : grid_(grid), comps_(static_cast<std::size_t>(ncomp)) {
    for (auto& c : comps_) c = Eigen::ArrayXd::Zero(grid.size3());
  }

  const Grid& grid() const { return grid_; }
  int ncomp() const { return static_cast<int>(comps_.size()); }
  Eigen::ArrayXd& comp(int i) { return comps_.at(i); }
  const Eigen::ArrayXd& comp(int i) const { return comps_.at(i); }

 private:
  Grid grid_;
  std::vector<Eigen::ArrayXd> comps_;
};

// Unitary round trip: transform(inverse_transform(F)) == F. Parseval carries
// the (2pi)^3 factor explicitly, see l2_norm in operators.hpp.
SpectralField transform(const RealField& f);
RealField inverse_transform(const SpectralField& F);

}  // namespace torus
