#include "maglap/heisenberg.hpp"

#include "maglap/operators.hpp"

namespace maglap {

namespace {

constexpr Cplx kI{0.0, 1.0};

// Monomial helper over nv variables.
Polynomial var_poly(int nv, int v) { return Polynomial::variable(nv, v); }

// All monomials of total degree <= cap (including the constant 1).
std::vector<Polynomial> monomials_up_to(int nvars, int cap) {
  std::vector<Polynomial> out;
  for (const Exponents& e : monomial_exponents_up_to(nvars, cap))
    out.push_back(Polynomial::monomial(nvars, e, 1.0));
  return out;
}

std::vector<VectorField> basis_from_law(const std::vector<Polynomial>& law,
                                        int m) {
  // Substitution fixing the g block and sending the w block to zero.
  Eigen::MatrixXcd drop = Eigen::MatrixXcd::Zero(2 * m, m);
  for (int i = 0; i < m; ++i) drop(i, i) = 1.0;
  Eigen::VectorXcd zero_shift = Eigen::VectorXcd::Zero(2 * m);

  std::vector<VectorField> fields(m);
  for (int col = 0; col < m; ++col) {
    VectorField X;
    X.coef.reserve(m);
    for (int row = 0; row < m; ++row) {
      Polynomial j = derive(law[row], m + col);
      X.coef.push_back(substitute_affine(j, drop, zero_shift));
    }
    fields[col] = std::move(X);
  }
  return fields;
}

// Extracts the affine map of w -> g w from the law at numeric g.
void translation_from_law(const std::vector<Polynomial>& law, int m,
                          const Eigen::VectorXd& gcoords, Eigen::MatrixXcd& M,
                          Eigen::VectorXcd& c) {
  // Old variables: g block becomes constants, w block becomes the new vars.
  Eigen::MatrixXcd sub = Eigen::MatrixXcd::Zero(2 * m, m);
  Eigen::VectorXcd shift = Eigen::VectorXcd::Zero(2 * m);
  for (int i = 0; i < m; ++i) {
    shift[i] = gcoords[i];
    sub(m + i, i) = 1.0;
  }
  M = Eigen::MatrixXcd::Zero(m, m);
  c = Eigen::VectorXcd::Zero(m);
  Exponents zero_e(m, 0);
  for (int row = 0; row < m; ++row) {
    Polynomial p = substitute_affine(law[row], sub, shift);
    c[row] = p.coeff(zero_e);
    for (int v = 0; v < m; ++v) {
      Exponents e(m, 0);
      e[v] = 1;
      M(row, v) = p.coeff(e);
    }
  }
}

bool invariance_check_impl(const VectorField& X,
                           const std::vector<Polynomial>& law, int m,
                           const Eigen::VectorXd& gcoords, int degree_cap) {
  if (X.nvars() != m)
    throw DimensionMismatch("left_invariance_check: field dimension");
  Eigen::MatrixXcd M;
  Eigen::VectorXcd c;
  translation_from_law(law, m, gcoords, M, c);
  for (const Polynomial& f : monomials_up_to(m, degree_cap)) {
    Polynomial lhs = apply(X, substitute_affine(f, M, c));
    Polynomial rhs = substitute_affine(apply(X, f), M, c);
    if (!approx_equal(lhs, rhs)) return false;
  }
  return true;
}

DiffOp sum_of_squares(const std::vector<VectorField>& fields, int first) {
  const int m = fields.front().nvars();
  DiffOp r(m);
  for (std::size_t i = first; i < fields.size(); ++i) {
    DiffOp d = to_diffop(fields[i]);
    r += compose(d, d);
  }
  return r;
}

}  // namespace

Cplx group_cocycle(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w) {
  if (z.size() != w.size()) throw DimensionMismatch("group_cocycle: sizes");
  Cplx s(0.0, 0.0);
  for (int j = 0; j < z.size(); ++j) s += z[j] * std::conj(w[j]);
  return s;
}

bool cocycle_check(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w,
                   const Eigen::VectorXcd& u, double tol) {
  Cplx lhs = group_cocycle(z, w) + group_cocycle(z + w, u);
  Cplx rhs = group_cocycle(z, w + u) + group_cocycle(w, u);
  double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) <= tol * scale;
}

GroupElement group_identity(int n) {
  return GroupElement{Cplx(0.0, 0.0), Eigen::VectorXcd::Zero(n)};
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  if (a.n() != b.n()) throw DimensionMismatch("group_mul: dimensions");
  return GroupElement{a.z0 + b.z0 + group_cocycle(a.z, b.z), a.z + b.z};
}

GroupElement group_inv(const GroupElement& a) {
  // (z0; z)^-1 = (<z,z> - z0; -z): the unique two-sided inverse under the
  // law above, since <z,-z> = -<z,z>.
  return GroupElement{group_cocycle(a.z, a.z) - a.z0, -a.z};
}

HeisenbergElement heis_identity(int n) {
  return HeisenbergElement{0.0, Eigen::VectorXcd::Zero(n)};
}

HeisenbergElement heis_mul(const HeisenbergElement& a,
                           const HeisenbergElement& b) {
  if (a.n() != b.n()) throw DimensionMismatch("heis_mul: dimensions");
  return HeisenbergElement{a.t + b.t + std::imag(group_cocycle(a.z, b.z)),
                           a.z + b.z};
}

HeisenbergElement heis_inv(const HeisenbergElement& a) {
  return HeisenbergElement{-a.t, -a.z};
}

HeisenbergElement project_q(const GroupElement& a) {
  return HeisenbergElement{std::imag(a.z0), a.z};
}

Eigen::VectorXd coordinates(const GroupElement& a) {
  Eigen::VectorXd u(2 * a.n() + 2);
  u[0] = std::real(a.z0);
  u[1] = std::imag(a.z0);
  for (int j = 0; j < a.n(); ++j) {
    u[2 + 2 * j] = std::real(a.z[j]);
    u[3 + 2 * j] = std::imag(a.z[j]);
  }
  return u;
}

Eigen::VectorXd coordinates(const HeisenbergElement& a) {
  Eigen::VectorXd u(2 * a.n() + 1);
  u[0] = a.t;
  for (int j = 0; j < a.n(); ++j) {
    u[1 + 2 * j] = std::real(a.z[j]);
    u[2 + 2 * j] = std::imag(a.z[j]);
  }
  return u;
}

Polynomial apply(const VectorField& X, const Polynomial& f) {
  if (X.nvars() != f.nvars())
    throw DimensionMismatch("apply: field/polynomial variables");
  Polynomial r(f.nvars());
  for (int v = 0; v < X.nvars(); ++v) {
    if (X.coef[v].is_zero()) continue;
    r += X.coef[v] * derive(f, v);
  }
  return r;
}

VectorField bracket(const VectorField& X, const VectorField& Y) {
  if (X.nvars() != Y.nvars())
    throw DimensionMismatch("bracket: field dimensions");
  VectorField r;
  r.coef.reserve(X.nvars());
  for (int v = 0; v < X.nvars(); ++v)
    r.coef.push_back(apply(X, Y.coef[v]) - apply(Y, X.coef[v]));
  return r;
}

DiffOp to_diffop(const VectorField& X) {
  const int m = X.nvars();
  DiffOp r(m);
  for (int v = 0; v < m; ++v) {
    Exponents d(m, 0);
    d[v] = 1;
    for (const auto& [e, c] : X.coef[v].terms()) r.add_term(e, d, c);
  }
  r.prune();
  return r;
}

bool approx_equal(const VectorField& X, const VectorField& Y, double rtol) {
  if (X.nvars() != Y.nvars()) return false;
  for (int v = 0; v < X.nvars(); ++v)
    if (!approx_equal(X.coef[v], Y.coef[v], rtol)) return false;
  return true;
}

std::vector<Polynomial> group_law_polys(int n) {
  const int m = 2 * n + 2;
  std::vector<Polynomial> law;
  law.reserve(m);
  // s'' = s + s' + sum (x x' + y y')
  Polynomial ps = var_poly(2 * m, 0) + var_poly(2 * m, m);
  for (int j = 0; j < n; ++j) {
    ps += var_poly(2 * m, 2 + 2 * j) * var_poly(2 * m, m + 2 + 2 * j);
    ps += var_poly(2 * m, 3 + 2 * j) * var_poly(2 * m, m + 3 + 2 * j);
  }
  law.push_back(ps);
  // t'' = t + t' + sum (y x' - x y')
  Polynomial pt = var_poly(2 * m, 1) + var_poly(2 * m, m + 1);
  for (int j = 0; j < n; ++j) {
    pt += var_poly(2 * m, 3 + 2 * j) * var_poly(2 * m, m + 2 + 2 * j);
    pt -= var_poly(2 * m, 2 + 2 * j) * var_poly(2 * m, m + 3 + 2 * j);
  }
  law.push_back(pt);
  for (int k = 2; k < m; ++k)
    law.push_back(var_poly(2 * m, k) + var_poly(2 * m, m + k));
  return law;
}

std::vector<Polynomial> heis_law_polys(int n) {
  const int m = 2 * n + 1;
  std::vector<Polynomial> law;
  law.reserve(m);
  Polynomial pt = var_poly(2 * m, 0) + var_poly(2 * m, m);
  for (int j = 0; j < n; ++j) {
    pt += var_poly(2 * m, 2 + 2 * j) * var_poly(2 * m, m + 1 + 2 * j);
    pt -= var_poly(2 * m, 1 + 2 * j) * var_poly(2 * m, m + 2 + 2 * j);
  }
  law.push_back(pt);
  for (int k = 1; k < m; ++k)
    law.push_back(var_poly(2 * m, k) + var_poly(2 * m, m + k));
  return law;
}

std::vector<VectorField> left_invariant_basis(int n) {
  if (n < 1) throw InvalidParameter("left_invariant_basis: n must be >= 1");
  return basis_from_law(group_law_polys(n), 2 * n + 2);
}

std::vector<VectorField> heisenberg_basis(int n) {
  if (n < 1) throw InvalidParameter("heisenberg_basis: n must be >= 1");
  return basis_from_law(heis_law_polys(n), 2 * n + 1);
}

void left_translation(const GroupElement& g, Eigen::MatrixXcd& M,
                      Eigen::VectorXcd& c) {
  translation_from_law(group_law_polys(g.n()), 2 * g.n() + 2, coordinates(g),
                       M, c);
}

void left_translation(const HeisenbergElement& g, Eigen::MatrixXcd& M,
                      Eigen::VectorXcd& c) {
  translation_from_law(heis_law_polys(g.n()), 2 * g.n() + 1, coordinates(g),
                       M, c);
}

bool left_invariance_check(const VectorField& X, const GroupElement& g,
                           int degree_cap) {
  return invariance_check_impl(X, group_law_polys(g.n()), 2 * g.n() + 2,
                               coordinates(g), degree_cap);
}

bool left_invariance_check(const VectorField& X, const HeisenbergElement& g,
                           int degree_cap) {
  return invariance_check_impl(X, heis_law_polys(g.n()), 2 * g.n() + 1,
                               coordinates(g), degree_cap);
}

DiffOp sub_laplacian(int n) {
  return sum_of_squares(left_invariant_basis(n), 2);
}

DiffOp sub_laplacian_explicit(int n) {
  const int m = 2 * n + 2;
  DiffOp r(m);
  for (int k = 2; k < m; ++k) {
    Exponents d(m, 0);
    d[k] = 2;
    r.add_term(Exponents(m, 0), d, 1.0);
  }
  for (int k = 2; k < m; ++k) {
    // 2 u_k d_{u_k} d_s  (Euler part)
    Exponents mo(m, 0), d(m, 0);
    mo[k] = 1;
    d[k] = 1;
    d[0] += 1;
    r.add_term(mo, d, 2.0);
  }
  {
    Exponents d(m, 0);
    d[0] = 1;
    r.add_term(Exponents(m, 0), d, 2.0 * n);
  }
  for (int j = 0; j < n; ++j) {
    // -2 (x_j d_{y_j} - y_j d_{x_j}) d_t
    Exponents mo(m, 0), d(m, 0);
    mo[2 + 2 * j] = 1;
    d[3 + 2 * j] = 1;
    d[1] = 1;
    r.add_term(mo, d, -2.0);
    Exponents mo2(m, 0), d2(m, 0);
    mo2[3 + 2 * j] = 1;
    d2[2 + 2 * j] = 1;
    d2[1] = 1;
    r.add_term(mo2, d2, 2.0);
  }
  for (int k = 2; k < m; ++k) {
    // u_k^2 (d_s^2 + d_t^2)
    Exponents mo(m, 0), ds(m, 0), dt(m, 0);
    mo[k] = 2;
    ds[0] = 2;
    dt[1] = 2;
    r.add_term(mo, ds, 1.0);
    r.add_term(mo, dt, 1.0);
  }
  return r;
}

DiffOp sub_laplacian_reduced(double nu, double mu, int n) {
  DiffOp full = sub_laplacian(n);
  const int m = 2 * n + 2;
  DiffOp projected(2 * n);
  for (const auto& [key, c] : full.terms()) {
    if (key[0] != 0 || key[1] != 0)
      throw InvalidParameter("sub_laplacian_reduced: s or t coefficient");
    Cplx factor = c;
    for (std::uint32_t i = 0; i < key[m]; ++i) factor *= kI * nu;
    for (std::uint32_t i = 0; i < key[m + 1]; ++i) factor *= kI * mu;
    Exponents mo(2 * n), d(2 * n);
    for (int k = 0; k < 2 * n; ++k) {
      mo[k] = key[2 + k];
      d[k] = key[m + 2 + k];
    }
    DiffOp t(2 * n);
    t.add_term(mo, d, factor);
    projected += t;
  }
  return complexify(projected);
}

DiffOp heisenberg_sub_laplacian(int n) {
  return sum_of_squares(heisenberg_basis(n), 1);
}

DiffOp heisenberg_sub_laplacian_explicit(int n) {
  const int m = 2 * n + 1;
  DiffOp r(m);
  for (int k = 1; k < m; ++k) {
    Exponents d(m, 0);
    d[k] = 2;
    r.add_term(Exponents(m, 0), d, 1.0);
  }
  for (int j = 0; j < n; ++j) {
    Exponents mo(m, 0), d(m, 0);
    mo[1 + 2 * j] = 1;
    d[2 + 2 * j] = 1;
    d[0] = 1;
    r.add_term(mo, d, -2.0);
    Exponents mo2(m, 0), d2(m, 0);
    mo2[2 + 2 * j] = 1;
    d2[1 + 2 * j] = 1;
    d2[0] = 1;
    r.add_term(mo2, d2, 2.0);
  }
  for (int k = 1; k < m; ++k) {
    Exponents mo(m, 0), dt(m, 0);
    mo[k] = 2;
    dt[0] = 2;
    r.add_term(mo, dt, 1.0);
  }
  return r;
}

DiffOp restrict_s_independent(const DiffOp& op) {
  const int m = op.nvars();
  if (m < 3) throw DimensionMismatch("restrict_s_independent: variables");
  DiffOp r(m - 1);
  for (const auto& [key, c] : op.terms()) {
    if (key[0] != 0)
      throw InvalidParameter("restrict_s_independent: s coefficient present");
    if (key[m] != 0) continue;
    Exponents mo(m - 1), d(m - 1);
    for (int k = 1; k < m; ++k) {
      mo[k - 1] = key[k];
      d[k - 1] = key[m + k];
    }
    r.add_term(mo, d, c);
  }
  r.prune();
  return r;
}

}  // namespace maglap
