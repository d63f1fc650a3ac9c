#pragma once

#include "maglap/expoly.hpp"
#include "maglap/polynomial.hpp"

namespace maglap {

// Linear differential operator with polynomial coefficients over a fixed
// set of formal variables, kept in normal order: every term reads
//   c * x^m * d^k   (all multiplications to the left of all derivatives).
// The term key concatenates the monomial exponents m with the derivative
// orders k, so canonical ordering and serialization reuse GradedLexLess.
class DiffOp {
 public:
  using TermMap = std::map<Exponents, Cplx, GradedLexLess>;

  explicit DiffOp(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw InvalidParameter("DiffOp: nvars must be >= 0");
  }

  static DiffOp zero(int nvars) { return DiffOp(nvars); }

  static DiffOp identity(int nvars) {
    DiffOp d(nvars);
    d.add_term(Exponents(nvars, 0), Exponents(nvars, 0), 1.0);
    return d;
  }

  static DiffOp term(int nvars, const Exponents& mono, const Exponents& deriv,
                     Cplx c) {
    DiffOp d(nvars);
    d.add_term(mono, deriv, c);
    d.prune();
    return d;
  }

  // Multiplication by the variable x_v.
  static DiffOp mul_var(int nvars, int v) {
    Exponents m(nvars, 0);
    m[v] = 1;
    return term(nvars, m, Exponents(nvars, 0), 1.0);
  }

  // The derivative d/dx_v.
  static DiffOp partial(int nvars, int v) {
    Exponents k(nvars, 0);
    k[v] = 1;
    return term(nvars, Exponents(nvars, 0), k, 1.0);
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Exponents& mono, const Exponents& deriv, Cplx c) {
    if (static_cast<int>(mono.size()) != nvars_ ||
        static_cast<int>(deriv.size()) != nvars_)
      throw DimensionMismatch("DiffOp::add_term: exponent length");
    Exponents key(2 * nvars_);
    std::copy(mono.begin(), mono.end(), key.begin());
    std::copy(deriv.begin(), deriv.end(), key.begin() + nvars_);
    add_key(key, c);
  }

  void add_key(const Exponents& key, Cplx c) {
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) it->second += c;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

  void prune() {
    double cut = kZeroThreshold * max_abs_coeff();
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (std::abs(it->second) <= cut)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  DiffOp& operator+=(const DiffOp& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_key(e, c);
    prune();
    return *this;
  }

  DiffOp& operator-=(const DiffOp& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_key(e, -c);
    prune();
    return *this;
  }

  DiffOp& operator*=(Cplx s) {
    for (auto& [e, c] : terms_) c *= s;
    prune();
    return *this;
  }

  void require_same_vars(const DiffOp& o) const {
    if (nvars_ != o.nvars_)
      throw DimensionMismatch("DiffOp: variable count mismatch");
  }

 private:
  int nvars_;
  TermMap terms_;
};

inline DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
inline DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
inline DiffOp operator*(DiffOp a, Cplx s) { return a *= s; }
inline DiffOp operator*(Cplx s, DiffOp a) { return a *= s; }
inline DiffOp operator-(DiffOp a) { return a *= Cplx(-1.0, 0.0); }

// Operator composition a of b (a applied after b), renormal-ordered.
DiffOp compose(const DiffOp& a, const DiffOp& b);

inline DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  return compose(a, b);
}

DiffOp commutator(const DiffOp& a, const DiffOp& b);

// Action on a plain polynomial over the same variables.
Polynomial apply(const DiffOp& op, const Polynomial& p);

// Action on an exponential-polynomial; the operator's variables are the
// 2n slots (z, conj z) of the function space.
ExpPoly apply(const DiffOp& op, const ExpPoly& f);

bool approx_equal(const DiffOp& a, const DiffOp& b, double rtol = kEqualityTol);

double max_abs_diff(const DiffOp& a, const DiffOp& b);

}  // namespace maglap
