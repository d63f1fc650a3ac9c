#pragma once

#include "maglap/polynomial.hpp"

namespace maglap {

// Exponent of a Gaussian-type envelope on C^n:
//   Q(z) = alpha*|z|^2 + sum_j beta_j z_j + sum_j gamma_j conj(z_j) + delta.
struct Envelope {
  Cplx alpha{0.0, 0.0};
  Eigen::VectorXcd beta;
  Eigen::VectorXcd gamma;
  Cplx delta{0.0, 0.0};

  int n() const { return static_cast<int>(beta.size()); }

  static Envelope zero(int n) {
    Envelope e;
    e.beta = Eigen::VectorXcd::Zero(n);
    e.gamma = Eigen::VectorXcd::Zero(n);
    return e;
  }

  static Envelope gaussian(int n, Cplx alpha) {
    Envelope e = zero(n);
    e.alpha = alpha;
    return e;
  }
};

bool approx_equal(const Envelope& a, const Envelope& b,
                  double atol = kEnvelopeTol);

// Envelope of a product of functions.
Envelope operator+(const Envelope& a, const Envelope& b);

// Envelope of the complex conjugate function.
Envelope conj_envelope(const Envelope& e);

Cplx evaluate(const Envelope& e, const Eigen::VectorXcd& z);

// Function on C^n of the form  P(z, conj z) * exp(Q(z))  with P a sparse
// polynomial and Q an Envelope.  The polynomial lives over 2n formal
// variables: slots [0,n) hold z exponents, slots [n,2n) conjugate ones.
class ExpPoly {
 public:
  ExpPoly(Polynomial poly, Envelope env)
      : poly_(std::move(poly)), env_(std::move(env)) {
    if (poly_.nvars() != 2 * env_.n())
      throw DimensionMismatch("ExpPoly: polynomial/envelope dimensions");
  }

  static ExpPoly zero(int n) {
    return ExpPoly(Polynomial::zero(2 * n), Envelope::zero(n));
  }

  // The pure exponential exp(Q).
  static ExpPoly exponential(Envelope env) {
    Polynomial one = Polynomial::constant(2 * env.n(), 1.0);
    return ExpPoly(std::move(one), std::move(env));
  }

  // Monomial z^a conj(z)^b times exp(Q).
  static ExpPoly monomial(const Exponents& a, const Exponents& b, Cplx c,
                          Envelope env);

  int n() const { return env_.n(); }
  const Polynomial& poly() const { return poly_; }
  const Envelope& envelope() const { return env_; }
  bool is_zero() const { return poly_.is_zero(); }

 private:
  Polynomial poly_;
  Envelope env_;
};

enum class Var { z, zbar };

// Sum; both operands must share one envelope.
ExpPoly add(const ExpPoly& f, const ExpPoly& g);

ExpPoly scale(const ExpPoly& f, Cplx c);

// Product with a bare polynomial (envelope unchanged).
ExpPoly mul_poly(const ExpPoly& f, const Polynomial& p);

// Product of two functions (envelopes add).
ExpPoly mul(const ExpPoly& f, const ExpPoly& g);

// Wirtinger derivative with respect to z_j or conj(z_j), 0-based j.
// Exact: d(P e^Q) = (dP + P dQ) e^Q.
ExpPoly derive(const ExpPoly& f, int j, Var kind);

Cplx evaluate(const ExpPoly& f, const Eigen::VectorXcd& z);

// Pointwise complex conjugate of a polynomial in (z, conj z): conjugates
// coefficients and swaps the two exponent blocks.
Polynomial conj_function(const Polynomial& p, int n);

// Pointwise complex conjugate (swaps the exponent blocks).
ExpPoly conj(const ExpPoly& f);

bool approx_equal(const ExpPoly& f, const ExpPoly& g,
                  double rtol = kEqualityTol, double env_atol = kEnvelopeTol);

}  // namespace maglap
