#pragma once

#include "torus/field.hpp"

namespace torus {

// Double-lattice quadrature of the Gagliardo seminorm
//   ( sum_{x != y} |f(x)-f(y)|^p / d(x,y)^{3 + alpha p} w^2 )^{1/p}
// with the periodic (minimum-image) distance d and cell weight
// w = (2pi/n)^3. The diagonal x = y is omitted. Cost is O(n^6), guarded by
// `max_n`. Requires 0 < alpha < 1 and p >= 1.
double gagliardo_seminorm(const RealField& f, double alpha, double p,
                          int max_n = 16);

}  // namespace torus
