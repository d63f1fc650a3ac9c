#pragma once

#include <random>

#include "maglap/expoly.hpp"

namespace maglap {

// Rigid motion z -> A z + b with A unitary.
struct Motion {
  Eigen::MatrixXcd A;
  Eigen::VectorXcd b;

  int n() const { return static_cast<int>(b.size()); }
};

// Validates shape and unitarity before wrapping.
Motion make_motion(Eigen::MatrixXcd A, Eigen::VectorXcd b);

Motion motion_identity(int n);

Eigen::VectorXcd act(const Motion& g, const Eigen::VectorXcd& z);

// act(motion_compose(g, h), z) == act(g, act(h, z)).
Motion motion_compose(const Motion& g, const Motion& h);

Motion motion_inverse(const Motion& g);

// Real phase -nu Re<z, g^{-1}.0> + mu Im<z, g^{-1}.0>.
double phase(const Motion& g, const Eigen::VectorXcd& z, double nu, double mu);

// Unit-modulus factor exp(i phase(g, z)).
Cplx autfactor(const Motion& g, const Eigen::VectorXcd& z, double nu,
               double mu);

// Unit-modulus correction by which the multiplicative composition rule for
// autfactor misses on a generic pair:
//   autfactor(motion_compose(g, h), z)
//     == chain_defect(g, h) * autfactor(g, act(h, z)) * autfactor(h, z)
// for every z.  Equals 1 whenever g or h fixes the origin.
Cplx chain_defect(const Motion& g, const Motion& h, double nu, double mu);

// Weighted pullback [T_g f](z) = autfactor(g, z) f(g.z), exact on the
// ExpPoly class: the polynomial part composes affinely and the unitary
// invariance of |z|^2 keeps the quadratic envelope coefficient fixed.
ExpPoly t_apply(const Motion& g, const ExpPoly& f, double nu, double mu);

// Checks that the weighted pullback commutes with the twisted Laplacian on
// every monomial of total degree <= degree_cap over the ground and plain
// Gaussian envelopes.
bool intertwine_check(const Motion& g, double nu, double mu, int n,
                      int degree_cap);

// Checks the connection form identity: the pullback of the potential
// 1-form under z -> g.z equals the form plus i d(phase), componentwise as
// polynomial coefficients of dz_k and dzbar_k.
bool pullback_theta_check(const Motion& g, double nu, double mu);

// Haar-like random unitary block (QR with phase-fixed diagonal), b = 0.
Motion random_rotation(int n, std::mt19937_64& rng);

// Identity block, translation components uniform in [-2,2]^2.
Motion random_translation(int n, std::mt19937_64& rng);

Motion random_motion(int n, std::mt19937_64& rng);

// Evaluation point with components uniform in [-2,2]^2.
Eigen::VectorXcd random_point(int n, std::mt19937_64& rng);

}  // namespace maglap
