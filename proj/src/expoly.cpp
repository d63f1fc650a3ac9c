#include "maglap/expoly.hpp"

namespace maglap {

bool approx_equal(const Envelope& a, const Envelope& b, double atol) {
  if (a.n() != b.n()) return false;
  if (std::abs(a.alpha - b.alpha) > atol) return false;
  if (std::abs(a.delta - b.delta) > atol) return false;
  for (int j = 0; j < a.n(); ++j) {
    if (std::abs(a.beta[j] - b.beta[j]) > atol) return false;
    if (std::abs(a.gamma[j] - b.gamma[j]) > atol) return false;
  }
  return true;
}

Envelope operator+(const Envelope& a, const Envelope& b) {
  if (a.n() != b.n()) throw DimensionMismatch("Envelope: dimension mismatch");
  Envelope r = a;
  r.alpha += b.alpha;
  r.beta += b.beta;
  r.gamma += b.gamma;
  r.delta += b.delta;
  return r;
}

Envelope conj_envelope(const Envelope& e) {
  Envelope r = Envelope::zero(e.n());
  r.alpha = std::conj(e.alpha);
  r.beta = e.gamma.conjugate();
  r.gamma = e.beta.conjugate();
  r.delta = std::conj(e.delta);
  return r;
}

Cplx evaluate(const Envelope& e, const Eigen::VectorXcd& z) {
  if (z.size() != e.n()) throw DimensionMismatch("Envelope: point dimension");
  Cplx q = e.delta + e.alpha * z.squaredNorm();
  for (int j = 0; j < e.n(); ++j)
    q += e.beta[j] * z[j] + e.gamma[j] * std::conj(z[j]);
  return std::exp(q);
}

ExpPoly ExpPoly::monomial(const Exponents& a, const Exponents& b, Cplx c,
                          Envelope env) {
  const int n = env.n();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw DimensionMismatch("ExpPoly::monomial: multi-index length");
  Exponents e(2 * n, 0);
  for (int j = 0; j < n; ++j) {
    e[j] = a[j];
    e[n + j] = b[j];
  }
  return ExpPoly(Polynomial::monomial(2 * n, e, c), std::move(env));
}

ExpPoly add(const ExpPoly& f, const ExpPoly& g) {
  if (f.n() != g.n()) throw DimensionMismatch("add: dimension mismatch");
  // Adding zero never constrains the envelope.
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (!approx_equal(f.envelope(), g.envelope()))
    throw EnvelopeMismatch("add: envelopes differ");
  return ExpPoly(f.poly() + g.poly(), f.envelope());
}

ExpPoly scale(const ExpPoly& f, Cplx c) {
  return ExpPoly(f.poly() * c, f.envelope());
}

ExpPoly mul_poly(const ExpPoly& f, const Polynomial& p) {
  return ExpPoly(f.poly() * p, f.envelope());
}

ExpPoly mul(const ExpPoly& f, const ExpPoly& g) {
  if (f.n() != g.n()) throw DimensionMismatch("mul: dimension mismatch");
  return ExpPoly(f.poly() * g.poly(), f.envelope() + g.envelope());
}

ExpPoly derive(const ExpPoly& f, int j, Var kind) {
  const int n = f.n();
  if (j < 0 || j >= n) throw IndexOutOfRange("derive: coordinate index");
  const Envelope& env = f.envelope();
  // d/dz_j Q = alpha*conj(z_j) + beta_j ; d/dconj(z_j) Q = alpha*z_j + gamma_j.
  const int pvar = (kind == Var::z) ? j : n + j;
  const int ovar = (kind == Var::z) ? n + j : j;
  const Cplx lin = (kind == Var::z) ? env.beta[j] : env.gamma[j];

  Polynomial r = derive(f.poly(), pvar);
  Exponents e(2 * n, 0);
  e[ovar] = 1;
  r += mul_monomial(f.poly(), e) * env.alpha;
  r += f.poly() * lin;
  r.prune();
  return ExpPoly(std::move(r), env);
}

Cplx evaluate(const ExpPoly& f, const Eigen::VectorXcd& z) {
  const int n = f.n();
  if (z.size() != n) throw DimensionMismatch("evaluate: point dimension");
  Eigen::VectorXcd x(2 * n);
  x.head(n) = z;
  x.tail(n) = z.conjugate();
  return evaluate(f.poly(), x) * evaluate(f.envelope(), z);
}

Polynomial conj_function(const Polynomial& p, int n) {
  if (p.nvars() != 2 * n)
    throw DimensionMismatch("conj_function: polynomial is not over (z, conj z)");
  Polynomial r(2 * n);
  Exponents e(2 * n);
  for (const auto& [ep, c] : p.terms()) {
    for (int j = 0; j < n; ++j) {
      e[j] = ep[n + j];
      e[n + j] = ep[j];
    }
    r.add_term(e, std::conj(c));
  }
  return r;
}

ExpPoly conj(const ExpPoly& f) {
  return ExpPoly(conj_function(f.poly(), f.n()), conj_envelope(f.envelope()));
}

bool approx_equal(const ExpPoly& f, const ExpPoly& g, double rtol,
                  double env_atol) {
  if (f.n() != g.n()) return false;
  if (f.is_zero() && g.is_zero()) return true;
  if (f.is_zero() != g.is_zero()) return false;
  return approx_equal(f.envelope(), g.envelope(), env_atol) &&
         approx_equal(f.poly(), g.poly(), rtol);
}

}  // namespace maglap
