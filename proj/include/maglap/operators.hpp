#pragma once

#include <optional>

#include "maglap/diffop.hpp"

namespace maglap {

// Complex operators act over the 2n slots (z, conj z) used by ExpPoly.
// Real-coordinate operators act over 2n slots with x_j at 2j and y_j at
// 2j+1, matching z_j = x_j + i y_j.

// Sum over j of z_j d/dz_j.
DiffOp euler(int n);

// Sum over j of conj(z_j) d/dconj(z_j).
DiffOp euler_bar(int n);

// Multiplication by |z|^2.
DiffOp mul_abs2(int n);

// The twisted Laplacian on C^n:
//   4 sum_j d2/dz_j dconj(z_j) + 2(mu+i nu) E - 2(mu-i nu) Ebar
//   - (nu^2+mu^2)|z|^2 + 2 i nu n.
// Requires mu > 0.
DiffOp laplacian(double nu, double mu, int n);

// -1/4 of the twisted Laplacian.
DiffOp tilde_laplacian(double nu, double mu, int n);

// Raising operator for coordinate j:  -d/dz_j + ((mu-i nu)/2) conj(z_j).
DiffOp creation(int j, double nu, double mu, int n);

// Lowering operator for coordinate j:  d/dconj(z_j) + ((mu+i nu)/2) z_j.
DiffOp annihilation(int j, double nu, double mu, int n);

// Conjugation by a central Gaussian weight:
//   gauge_conjugate(D, c) = e^{c|z|^2} o D o e^{-c|z|^2},
// computed exactly by substituting d/dz_j -> d/dz_j - c conj(z_j) and
// d/dconj(z_j) -> d/dconj(z_j) - c z_j.
DiffOp gauge_conjugate(const DiffOp& op, Cplx c);

// Rewrites an operator over real coordinates (x_1,y_1,...,x_n,y_n) in the
// complex slots via x_j = (z_j+conj z_j)/2, y_j = (z_j-conj z_j)/(2i),
// d/dx_j = d/dz_j + d/dconj(z_j), d/dy_j = i(d/dz_j - d/dconj(z_j)).
DiffOp complexify(const DiffOp& real_op);

// Connection 1-form
//   theta = -((mu-i nu)/2) sum_j conj(z_j) dz_j
//           +((mu+i nu)/2) sum_j z_j dconj(z_j),
// purely imaginary, so theta = i A with A a real 1-form.
struct MagneticPotential {
  double nu = 0.0;
  double mu = 1.0;
  int n = 1;

  MagneticPotential(double nu_, double mu_, int n_);

  // Coefficient of dz_j, a polynomial over the (z, conj z) slots.
  Polynomial dz_coeff(int j) const;

  // Coefficient of dconj(z_j).
  Polynomial dzbar_coeff(int j) const;

  // Real component A_k of A = theta / i over the real slots, derived from
  // the complex coefficients (k = 2j for dx_j, k = 2j+1 for dy_j).
  Polynomial real_component(int k) const;

  // Verifies theta + conj(theta) = 0 coefficient-wise.
  bool is_imaginary_form() const;
};

// Magnetic Schrodinger operator sum_k (-i d_k + A_k)^2, assembled from the
// real components of the potential and then rewritten in complex slots.
DiffOp magnetic_schrodinger(double nu, double mu, int n);

// If op f = lambda f within rtol (relative to the larger side), returns
// lambda; otherwise nullopt.  Throws ZeroFunction for f = 0.
std::optional<Cplx> eigencheck(const DiffOp& op, const ExpPoly& f,
                               double rtol = kRouteTol);

}  // namespace maglap
