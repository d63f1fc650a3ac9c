#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maglap/expoly.hpp"

namespace maglap {

// Confluent hypergeometric function 1F1(a; c; x) by series summation.
// Terminates exactly when a is a non-positive integer.  Throws PoleAtC
// when c is a non-positive integer and NonConvergence past the budget.
Cplx hyp1f1(Cplx a, Cplx c, Cplx x);

// Large-x behaviour
//   Gamma(c) [ (-x)^(-a)/Gamma(c-a) + e^x x^(a-c)/Gamma(a) ],
// each branch refined by its optimally truncated inverse-power correction
// sum; principal branch for (-x)^(-a); the exponential term drops when a
// is a non-positive integer.  Throws DomainTooSmall for x < x_min.
Cplx hyp1f1_asymptotic(double a, double c, double x,
                       double x_min = kAsymptoticXMin);

// One Landau level of the twisted Laplacian.
struct SpectrumLevel {
  int l;
  double eigenvalue_full;   // -2 mu (2l + n)
  double eigenvalue_tilde;  // mu (n/2 + l)
};

SpectrumLevel eigenvalue(int l, double mu, int n);
std::vector<SpectrumLevel> spectrum_table(int n, double mu, int lmax);

// Radial candidate eigenfunction
//   phi_lambda(z) = exp(-(mu+i nu)|z|^2 / 2) 1F1(-lambda; n; mu |z|^2),
// an ExpPoly exactly when lambda is a non-negative integer.  The
// printed_envelope_sign variant uses exp(-(mu-i nu)|z|^2/2) instead, the
// sign that appears in the published display; it fails the eigenfunction
// property for nu != 0 and is kept for the discrepancy report.
struct RadialEigenfunction {
  double lambda;
  double nu;
  double mu;
  int n;
  bool printed_envelope_sign;
  bool bounded;
  std::optional<ExpPoly> closed_form;

  Cplx eval(const Eigen::VectorXcd& z) const;
};

RadialEigenfunction radial_eigenfunction(double lambda, double nu, double mu,
                                         int n,
                                         bool printed_envelope_sign = false);

enum class HermiteRoute { Rodrigues, Ladder, Explicit, Verbatim };

std::optional<HermiteRoute> parse_route(const std::string& name);
std::string route_name(HermiteRoute route);

// Complex Hermite function via the Rodrigues form
//   (-1)^(|r|+|s|) mu^(-|s|) e^{(mu-i nu)|z|^2/2} D_z^r D_zbar^s e^{-mu|z|^2}.
ExpPoly hermite_rodrigues(const Exponents& r, const Exponents& s, double nu,
                          double mu, int n);

// Same function through raising operators applied to z^s times the ground
// Gaussian.
ExpPoly hermite_ladder(const Exponents& r, const Exponents& s, double nu,
                       double mu, int n);

// Same function through the corrected explicit double sum
//   sum_k (-1)^|k| mu^(|r|-|k|) r! s! / (k! (r-k)! (s-k)!) z^(s-k) zbar^(r-k)
// times the ground Gaussian (multi-index factorials componentwise).
ExpPoly hermite_explicit(const Exponents& r, const Exponents& s, double nu,
                         double mu, int n);

// The explicit sum exactly as printed in the source derivation:
//   mu^(-|s|) sum_k (sqrt mu)^(|r|+|s|-2|k|) (-1)^(|r|-|s|) r! s! /
//   (k!(r-k)!(s-k)!) z^(s-k) zbar^(r-k)
// times the ground Gaussian.  Disagrees with the other routes; kept for
// the discrepancy report.
ExpPoly hermite_verbatim(const Exponents& r, const Exponents& s, double nu,
                         double mu, int n);

ExpPoly hermite(const Exponents& r, const Exponents& s, double nu, double mu,
                int n, HermiteRoute route);

// Unit-modulus coupling factor
//   exp(-(i nu/2)(|z|^2-|w|^2) + (mu/2)(<z,w> - conj<z,w>)).
Cplx jfactor(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w, double nu,
             double mu);

// Reproducing kernel of the level-l eigenspace at a point pair.
Cplx kernel_eval(int l, double nu, double mu, int n,
                 const Eigen::VectorXcd& z, const Eigen::VectorXcd& w);

// The same kernel as a function of w with z held fixed.
ExpPoly kernel_in_w(int l, double nu, double mu, int n,
                    const Eigen::VectorXcd& z);

// Polynomial factor of the level-l kernel over the joint ring
// [z | zbar | w | wbar] (4n variables), diagonal constant included.
// The remaining exponential factor is carried separately by callers.
Polynomial kernel_joint_poly(int l, double mu, int n);

// Value on the diagonal: (mu/pi)^n (n-1+l)! / ((n-1)! l!).
double kernel_diagonal(int l, double mu, int n);

}  // namespace maglap
