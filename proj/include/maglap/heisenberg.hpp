#pragma once

#include "maglap/diffop.hpp"
#include "maglap/polynomial.hpp"

namespace maglap {

// Central extension N = C x_w C^n with multiplication
//   (z0; z)(w0; w) = (z0 + w0 + <z,w>; z + w),
// where <z,w> = sum_j z_j conj(w_j).  Real coordinates are
// (s, t, x_1, y_1, ..., x_n, y_n) with z0 = s + it and z_j = x_j + i y_j.
struct GroupElement {
  Cplx z0;
  Eigen::VectorXcd z;

  int n() const { return static_cast<int>(z.size()); }
};

// Quotient group with multiplication
//   (t; z)(t'; w) = (t + t' + Im<z,w>; z + w),
// in coordinates (t, x_1, y_1, ..., x_n, y_n).
struct HeisenbergElement {
  double t;
  Eigen::VectorXcd z;

  int n() const { return static_cast<int>(z.size()); }
};

// The bilinear part of the group law: <z,w> = sum_j z_j conj(w_j).
Cplx group_cocycle(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w);

// Additive 2-cocycle identity psi(z,w) + psi(z+w,u) = psi(z,w+u) + psi(w,u).
bool cocycle_check(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w,
                   const Eigen::VectorXcd& u, double tol = kEqualityTol);

GroupElement group_identity(int n);
GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupElement& a);

HeisenbergElement heis_identity(int n);
HeisenbergElement heis_mul(const HeisenbergElement& a,
                           const HeisenbergElement& b);
HeisenbergElement heis_inv(const HeisenbergElement& a);

// The quotient map (s, t; z) -> (t; z).
HeisenbergElement project_q(const GroupElement& a);

// Real coordinate vectors: (s, t, x_1, y_1, ...) resp. (t, x_1, y_1, ...).
Eigen::VectorXd coordinates(const GroupElement& a);
Eigen::VectorXd coordinates(const HeisenbergElement& a);

// First-order operator sum_i coef_i d/du_i with polynomial coefficients.
struct VectorField {
  std::vector<Polynomial> coef;

  int nvars() const { return static_cast<int>(coef.size()); }
};

Polynomial apply(const VectorField& X, const Polynomial& f);
VectorField bracket(const VectorField& X, const VectorField& Y);
DiffOp to_diffop(const VectorField& X);
bool approx_equal(const VectorField& X, const VectorField& Y,
                  double rtol = kEqualityTol);

// Coordinate polynomials of the group law over 2m variables: slots
// [0, m) hold the left factor g, slots [m, 2m) the right factor w.
std::vector<Polynomial> group_law_polys(int n);
std::vector<Polynomial> heis_law_polys(int n);

// Left-invariant frame read off the Jacobian of w -> g w at w = 0,
// one field per column.  Order: S, T, X_1, Y_1, ..., X_n, Y_n.
std::vector<VectorField> left_invariant_basis(int n);

// Same construction for the quotient group.  Order: T, X_1, Y_1, ...
std::vector<VectorField> heisenberg_basis(int n);

// Affine coordinate map of the left translation w -> g w.
void left_translation(const GroupElement& g, Eigen::MatrixXcd& M,
                      Eigen::VectorXcd& c);
void left_translation(const HeisenbergElement& g, Eigen::MatrixXcd& M,
                      Eigen::VectorXcd& c);

// Checks X(f o l_g) == (X f) o l_g for all monomials f up to degree_cap.
bool left_invariance_check(const VectorField& X, const GroupElement& g,
                           int degree_cap = 3);
bool left_invariance_check(const VectorField& X, const HeisenbergElement& g,
                           int degree_cap = 3);

// Sum of squares of the X_j and Y_j frame fields, over (s,t,x,y).
DiffOp sub_laplacian(int n);

// Closed form of the same operator:
//   Delta_{x,y} + 2(E+n) d_s - 2F d_t + (|x|^2+|y|^2)(d_s^2 + d_t^2),
// E = sum x_j d_x + y_j d_y,  F = sum x_j d_y - y_j d_x.
DiffOp sub_laplacian_explicit(int n);

// Fourier reduction d_s -> i nu, d_t -> i mu followed by the rewrite in
// complex slots; equals the twisted Laplacian.
DiffOp sub_laplacian_reduced(double nu, double mu, int n);

// Sum of squares of the quotient frame fields, over (t,x,y).
DiffOp heisenberg_sub_laplacian(int n);

// Closed form: Delta_{x,y} - 2F d_t + (|x|^2+|y|^2) d_t^2.
DiffOp heisenberg_sub_laplacian_explicit(int n);

// Restriction of an (s,t,x,y) operator to s-independent functions,
// re-keyed over (t,x,y).  Requires coefficients free of s.
DiffOp restrict_s_independent(const DiffOp& op);

}  // namespace maglap
