#include "maglap/operators.hpp"

namespace maglap {

namespace {

constexpr Cplx kI{0.0, 1.0};

void check_dims(double mu, int n) {
  if (n < 1) throw InvalidParameter("dimension n must be >= 1");
  if (!(mu > 0.0)) throw InvalidParameter("mu must be > 0");
}

void check_coord(int j, int n) {
  if (j < 0 || j >= n) throw IndexOutOfRange("coordinate index out of range");
}

}  // namespace

DiffOp euler(int n) {
  DiffOp r(2 * n);
  for (int j = 0; j < n; ++j) {
    Exponents m(2 * n, 0), d(2 * n, 0);
    m[j] = 1;
    d[j] = 1;
    r.add_term(m, d, 1.0);
  }
  return r;
}

DiffOp euler_bar(int n) {
  DiffOp r(2 * n);
  for (int j = 0; j < n; ++j) {
    Exponents m(2 * n, 0), d(2 * n, 0);
    m[n + j] = 1;
    d[n + j] = 1;
    r.add_term(m, d, 1.0);
  }
  return r;
}

DiffOp mul_abs2(int n) {
  DiffOp r(2 * n);
  for (int j = 0; j < n; ++j) {
    Exponents m(2 * n, 0), d(2 * n, 0);
    m[j] = 1;
    m[n + j] = 1;
    r.add_term(m, d, 1.0);
  }
  return r;
}

DiffOp laplacian(double nu, double mu, int n) {
  check_dims(mu, n);
  DiffOp r(2 * n);
  for (int j = 0; j < n; ++j) {
    Exponents m(2 * n, 0), d(2 * n, 0);
    d[j] = 1;
    d[n + j] = 1;
    r.add_term(m, d, 4.0);
  }
  r += Cplx(2.0) * (mu + kI * nu) * euler(n);
  r -= Cplx(2.0) * (mu - kI * nu) * euler_bar(n);
  r -= Cplx(nu * nu + mu * mu) * mul_abs2(n);
  r += Cplx(2.0) * kI * nu * static_cast<double>(n) * DiffOp::identity(2 * n);
  return r;
}

DiffOp tilde_laplacian(double nu, double mu, int n) {
  return Cplx(-0.25) * laplacian(nu, mu, n);
}

DiffOp creation(int j, double nu, double mu, int n) {
  check_dims(mu, n);
  check_coord(j, n);
  DiffOp r(2 * n);
  Exponents m(2 * n, 0), d(2 * n, 0);
  d[j] = 1;
  r.add_term(m, d, -1.0);
  Exponents m2(2 * n, 0), d2(2 * n, 0);
  m2[n + j] = 1;
  r.add_term(m2, d2, (mu - kI * nu) * 0.5);
  return r;
}

DiffOp annihilation(int j, double nu, double mu, int n) {
  check_dims(mu, n);
  check_coord(j, n);
  DiffOp r(2 * n);
  Exponents m(2 * n, 0), d(2 * n, 0);
  d[n + j] = 1;
  r.add_term(m, d, 1.0);
  Exponents m2(2 * n, 0), d2(2 * n, 0);
  m2[j] = 1;
  r.add_term(m2, d2, (mu + kI * nu) * 0.5);
  return r;
}

DiffOp gauge_conjugate(const DiffOp& op, Cplx c) {
  const int nv = op.nvars();
  if (nv % 2 != 0)
    throw DimensionMismatch("gauge_conjugate: operator is not over (z, conj z)");
  const int n = nv / 2;
  DiffOp r(nv);
  for (const auto& [key, coef] : op.terms()) {
    Exponents mono(key.begin(), key.begin() + nv);
    DiffOp t = DiffOp::term(nv, mono, Exponents(nv, 0), coef);
    for (int j = 0; j < n; ++j) {
      DiffOp dz = DiffOp::partial(nv, j) - c * DiffOp::mul_var(nv, n + j);
      DiffOp dzb = DiffOp::partial(nv, n + j) - c * DiffOp::mul_var(nv, j);
      for (std::uint32_t i = 0; i < key[nv + j]; ++i) t = compose(t, dz);
      for (std::uint32_t i = 0; i < key[nv + n + j]; ++i) t = compose(t, dzb);
    }
    r += t;
  }
  return r;
}

DiffOp complexify(const DiffOp& real_op) {
  const int nv = real_op.nvars();
  if (nv % 2 != 0)
    throw DimensionMismatch("complexify: expected interleaved (x, y) slots");
  const int n = nv / 2;
  DiffOp r(2 * n);
  for (const auto& [key, coef] : real_op.terms()) {
    DiffOp t = coef * DiffOp::identity(2 * n);
    for (int j = 0; j < n; ++j) {
      DiffOp zx = Cplx(0.5) * (DiffOp::mul_var(2 * n, j) + DiffOp::mul_var(2 * n, n + j));
      DiffOp zy = Cplx(0.0, -0.5) * (DiffOp::mul_var(2 * n, j) - DiffOp::mul_var(2 * n, n + j));
      for (std::uint32_t i = 0; i < key[2 * j]; ++i) t = compose(t, zx);
      for (std::uint32_t i = 0; i < key[2 * j + 1]; ++i) t = compose(t, zy);
    }
    for (int j = 0; j < n; ++j) {
      DiffOp dx = DiffOp::partial(2 * n, j) + DiffOp::partial(2 * n, n + j);
      DiffOp dy = kI * (DiffOp::partial(2 * n, j) - DiffOp::partial(2 * n, n + j));
      for (std::uint32_t i = 0; i < key[nv + 2 * j]; ++i) t = compose(t, dx);
      for (std::uint32_t i = 0; i < key[nv + 2 * j + 1]; ++i) t = compose(t, dy);
    }
    r += t;
  }
  return r;
}

MagneticPotential::MagneticPotential(double nu_, double mu_, int n_)
    : nu(nu_), mu(mu_), n(n_) {
  check_dims(mu, n);
}

Polynomial MagneticPotential::dz_coeff(int j) const {
  check_coord(j, n);
  Exponents e(2 * n, 0);
  e[n + j] = 1;
  return Polynomial::monomial(2 * n, e, -(mu - kI * nu) * 0.5);
}

Polynomial MagneticPotential::dzbar_coeff(int j) const {
  check_coord(j, n);
  Exponents e(2 * n, 0);
  e[j] = 1;
  return Polynomial::monomial(2 * n, e, (mu + kI * nu) * 0.5);
}

Polynomial MagneticPotential::real_component(int k) const {
  if (k < 0 || k >= 2 * n) throw IndexOutOfRange("real_component: index");
  const int j = k / 2;
  // dz_j = dx_j + i dy_j and dconj(z_j) = dx_j - i dy_j give
  // theta_x = P + Q, theta_y = i(P - Q); then A = theta / i.
  Polynomial p = dz_coeff(j), q = dzbar_coeff(j);
  Polynomial theta_k =
      (k % 2 == 0) ? (p + q) : (kI * (p - q));
  Polynomial a_k = theta_k * (-kI);
  // Substitute z_j = x_j + i y_j into the coefficient polynomial.
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int m = 0; m < n; ++m) {
    M(m, 2 * m) = 1.0;
    M(m, 2 * m + 1) = kI;
    M(n + m, 2 * m) = 1.0;
    M(n + m, 2 * m + 1) = -kI;
  }
  return substitute_affine(a_k, M, Eigen::VectorXcd::Zero(2 * n));
}

bool MagneticPotential::is_imaginary_form() const {
  // conj(theta) has dz_j coefficient conj(Q_j) and dconj(z_j) coefficient
  // conj(P_j), conjugation acting pointwise on the coefficient functions.
  for (int j = 0; j < n; ++j) {
    Polynomial a = dz_coeff(j) + conj_function(dzbar_coeff(j), n);
    Polynomial b = dzbar_coeff(j) + conj_function(dz_coeff(j), n);
    if (!a.is_zero() || !b.is_zero()) return false;
  }
  return true;
}

DiffOp magnetic_schrodinger(double nu, double mu, int n) {
  check_dims(mu, n);
  MagneticPotential pot(nu, mu, n);
  DiffOp h_real(2 * n);
  for (int k = 0; k < 2 * n; ++k) {
    DiffOp covariant = Cplx(0.0, -1.0) * DiffOp::partial(2 * n, k);
    const Polynomial a_k = pot.real_component(k);
    for (const auto& [e, c] : a_k.terms())
      covariant.add_term(e, Exponents(2 * n, 0), c);
    h_real += compose(covariant, covariant);
  }
  return complexify(h_real);
}

std::optional<Cplx> eigencheck(const DiffOp& op, const ExpPoly& f,
                               double rtol) {
  if (f.is_zero()) throw ZeroFunction("eigencheck: zero function");
  ExpPoly g = apply(op, f);
  if (g.is_zero()) return Cplx(0.0, 0.0);

  // Candidate ratio from the largest coefficient of f.
  const Exponents* best = nullptr;
  double best_abs = -1.0;
  for (const auto& [e, c] : f.poly().terms()) {
    if (std::abs(c) > best_abs) {
      best_abs = std::abs(c);
      best = &e;
    }
  }
  Cplx lambda = g.poly().coeff(*best) / f.poly().coeff(*best);
  Polynomial expect = f.poly() * lambda;
  double scale = std::max(g.poly().max_abs_coeff(), expect.max_abs_coeff());
  if (max_abs_diff(g.poly(), expect) > rtol * scale) return std::nullopt;
  return lambda;
}

}  // namespace maglap
