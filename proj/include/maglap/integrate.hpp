#pragma once

#include "maglap/expoly.hpp"

namespace maglap {

struct InnerProductReport {
  Cplx value;
  double absolute_error_estimate;
};

// Closed form of the one-dimensional moment
//   int_C z^a zbar^b exp(alpha |z|^2 + beta z + gamma zbar) dm(z),
// obtained by differentiating the generating integral
//   (pi / (-alpha)) exp(-beta gamma / alpha)
// a times in beta and b times in gamma.  Throws NonIntegrable unless
// Re(alpha) < 0.  Moments over C^n factor coordinatewise.
Cplx gaussian_moment(int a, int b, Cplx alpha, Cplx beta, Cplx gamma);

// int f conj(g) dm over C^n, evaluated termwise through gaussian_moment.
// The error estimate scales the summed term magnitudes by the floating
// point cancellation factor.
InnerProductReport inner_product(const ExpPoly& f, const ExpPoly& g);

double norm_squared(const ExpPoly& f);

// Orthogonal projection onto the level-l eigenspace, computed exactly:
// the kernel times f is an ExpPoly in w with integrable envelope, and the
// w-integration leaves an ExpPoly in z.
ExpPoly project_level(const ExpPoly& f, int l, double nu, double mu, int n);

}  // namespace maglap
