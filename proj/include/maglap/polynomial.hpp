#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "maglap/errors.hpp"
#include "maglap/tolerances.hpp"

namespace maglap {

using Cplx = std::complex<double>;
using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exponents& e) {
  std::uint64_t d = 0;
  for (auto v : e) d += v;
  return d;
}

// Graded lexicographic order: lower total degree first, ties by lex.
struct GradedLexLess {
  bool operator()(const Exponents& x, const Exponents& y) const {
    auto dx = total_degree(x), dy = total_degree(y);
    if (dx != dy) return dx < dy;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
};

// Sparse multivariate polynomial with complex coefficients over a fixed
// number of formal variables.  Terms are kept in graded-lex order, which
// is also the canonical serialization order.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Cplx, GradedLexLess>;

  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw InvalidParameter("Polynomial: nvars must be >= 0");
  }

  static Polynomial zero(int nvars) { return Polynomial(nvars); }

  static Polynomial constant(int nvars, Cplx c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    p.prune();
    return p;
  }

  static Polynomial variable(int nvars, int v) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    p.check_var(v);
    e[v] = 1;
    p.add_term(e, Cplx(1.0, 0.0));
    return p;
  }

  static Polynomial monomial(int nvars, const Exponents& e, Cplx c) {
    Polynomial p(nvars);
    if (static_cast<int>(e.size()) != nvars)
      throw DimensionMismatch("Polynomial::monomial: exponent length");
    p.add_term(e, c);
    p.prune();
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // -1 for the zero polynomial.
  std::int64_t degree() const {
    if (terms_.empty()) return -1;
    return static_cast<std::int64_t>(total_degree(terms_.rbegin()->first));
  }

  Cplx coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Cplx(0.0, 0.0) : it->second;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

  void add_term(const Exponents& e, Cplx c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw DimensionMismatch("Polynomial::add_term: exponent length");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) it->second += c;
  }

  // Drops terms whose magnitude is below kZeroThreshold relative to the
  // largest coefficient, keeping the representation canonical.
  void prune() {
    double cut = kZeroThreshold * max_abs_coeff();
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (std::abs(it->second) <= cut)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    prune();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    prune();
    return *this;
  }

  Polynomial& operator*=(Cplx s) {
    for (auto& [e, c] : terms_) c *= s;
    prune();
    return *this;
  }

  void require_same_vars(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
      throw DimensionMismatch("Polynomial: variable count mismatch");
  }

  void check_var(int v) const {
    if (v < 0 || v >= nvars_)
      throw IndexOutOfRange("Polynomial: variable index out of range");
  }

 private:
  int nvars_;
  TermMap terms_;
};

inline Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
inline Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
inline Polynomial operator*(Polynomial a, Cplx s) { return a *= s; }
inline Polynomial operator*(Cplx s, Polynomial a) { return a *= s; }
inline Polynomial operator-(Polynomial a) { return a *= Cplx(-1.0, 0.0); }

Polynomial operator*(const Polynomial& a, const Polynomial& b);

// Power by repeated multiplication.
Polynomial pow(const Polynomial& p, unsigned k);

// Partial derivative with respect to variable v.
Polynomial derive(const Polynomial& p, int v);

// Multiplication by the monomial with the given exponents.
Polynomial mul_monomial(const Polynomial& p, const Exponents& e);

Cplx evaluate(const Polynomial& p, const Eigen::VectorXcd& x);

// Substitutes x_i -> sum_j M(i,j) y_j + shift(i).  M has one row per old
// variable and one column per new variable.
Polynomial substitute_affine(const Polynomial& p, const Eigen::MatrixXcd& M,
                             const Eigen::VectorXcd& shift);

// Conjugates every coefficient (exponents untouched).
Polynomial conj_coeffs(const Polynomial& p);

double max_abs_diff(const Polynomial& a, const Polynomial& b);

// Coefficient-wise comparison, tolerance relative to the largest
// coefficient present on either side.
bool approx_equal(const Polynomial& a, const Polynomial& b,
                  double rtol = kEqualityTol);

// All exponent vectors over nvars variables with total degree <= cap,
// the constant included.
std::vector<Exponents> monomial_exponents_up_to(int nvars, int cap);

}  // namespace maglap
