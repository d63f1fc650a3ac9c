#include <doctest.h>

#include <random>

#include "maglap/heisenberg.hpp"
#include "maglap/operators.hpp"

using namespace maglap;

namespace {

constexpr Cplx kI{0.0, 1.0};

GroupElement random_element(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  GroupElement a{Cplx(box(rng), box(rng)), Eigen::VectorXcd(n)};
  for (int j = 0; j < n; ++j) a.z[j] = Cplx(box(rng), box(rng));
  return a;
}

bool same(const GroupElement& a, const GroupElement& b) {
  double d = std::abs(a.z0 - b.z0);
  for (int j = 0; j < a.n(); ++j) d = std::max(d, std::abs(a.z[j] - b.z[j]));
  return d < 1e-12;
}

}  // namespace

TEST_CASE("pairing and product law on frozen inputs") {
  Eigen::VectorXcd z(1), w(1);
  z[0] = 1.0;
  w[0] = kI;
  CHECK(std::abs(group_cocycle(z, w) - (-kI)) < 1e-15);

  GroupElement a{0.0, z}, b{0.0, w};
  GroupElement ab = group_mul(a, b);
  CHECK(std::abs(ab.z0 - (-kI)) < 1e-15);
  CHECK(std::abs(ab.z[0] - Cplx(1.0, 1.0)) < 1e-15);
}

TEST_CASE("group axioms hold") {
  std::mt19937_64 rng(41);
  for (int n : {1, 2}) {
    for (int t = 0; t < 10; ++t) {
      GroupElement a = random_element(n, rng);
      GroupElement b = random_element(n, rng);
      GroupElement c = random_element(n, rng);
      CHECK(same(group_mul(group_mul(a, b), c), group_mul(a, group_mul(b, c))));
      CHECK(same(group_mul(a, group_identity(n)), a));
      CHECK(same(group_mul(group_identity(n), a), a));
      CHECK(same(group_mul(a, group_inv(a)), group_identity(n)));
      CHECK(same(group_mul(group_inv(a), a), group_identity(n)));
    }
  }
}

TEST_CASE("pairing satisfies the product-compatibility identity") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 10; ++t) {
    Eigen::VectorXcd z = random_element(2, rng).z;
    Eigen::VectorXcd w = random_element(2, rng).z;
    Eigen::VectorXcd u = random_element(2, rng).z;
    CHECK(cocycle_check(z, w, u));
  }
}

TEST_CASE("central elements commute with everything") {
  std::mt19937_64 rng(43);
  GroupElement central{Cplx(0.7, -0.4), Eigen::VectorXcd::Zero(2)};
  GroupElement a = random_element(2, rng);
  CHECK(same(group_mul(central, a), group_mul(a, central)));
}

TEST_CASE("projection to the quotient is a homomorphism") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 10; ++t) {
    GroupElement a = random_element(2, rng);
    GroupElement b = random_element(2, rng);
    HeisenbergElement lhs = project_q(group_mul(a, b));
    HeisenbergElement rhs = heis_mul(project_q(a), project_q(b));
    CHECK(std::abs(lhs.t - rhs.t) < 1e-12);
    CHECK((lhs.z - rhs.z).norm() < 1e-12);
  }
}

TEST_CASE("quotient inverse undoes the product") {
  std::mt19937_64 rng(45);
  HeisenbergElement a = project_q(random_element(1, rng));
  HeisenbergElement e = heis_mul(a, heis_inv(a));
  CHECK(std::abs(e.t) < 1e-12);
  CHECK(e.z.norm() < 1e-12);
}

TEST_CASE("frame fields have the advertised closed forms") {
  const int n = 2, m = 2 * n + 2;
  auto basis = left_invariant_basis(n);
  REQUIRE(basis.size() == static_cast<std::size_t>(m));

  VectorField s_field;
  s_field.coef.assign(m, Polynomial::zero(m));
  s_field.coef[0] = Polynomial::constant(m, 1.0);
  CHECK(approx_equal(basis[0], s_field));

  // X_j = x_j d/ds + y_j d/dt + d/dx_j  (coords s,t,x_1,y_1,...)
  VectorField x1;
  x1.coef.assign(m, Polynomial::zero(m));
  x1.coef[0] = Polynomial::variable(m, 2);
  x1.coef[1] = Polynomial::variable(m, 3);
  x1.coef[2] = Polynomial::constant(m, 1.0);
  CHECK(approx_equal(basis[2], x1));

  // Y_j = y_j d/ds - x_j d/dt + d/dy_j
  VectorField y1;
  y1.coef.assign(m, Polynomial::zero(m));
  y1.coef[0] = Polynomial::variable(m, 3);
  y1.coef[1] = -Polynomial::variable(m, 2);
  y1.coef[3] = Polynomial::constant(m, 1.0);
  CHECK(approx_equal(basis[3], y1));
}

TEST_CASE("frame is left invariant and spans bracket relations") {
  std::mt19937_64 rng(46);
  for (int n : {1, 2}) {
    const int m = 2 * n + 2;
    auto basis = left_invariant_basis(n);
    for (int t = 0; t < 5; ++t) {
      GroupElement g = random_element(n, rng);
      for (const VectorField& f : basis) CHECK(left_invariance_check(f, g, 3));
    }
    VectorField zero;
    zero.coef.assign(m, Polynomial::zero(m));
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        VectorField want = zero;
        if (j == k) want.coef[1] = Polynomial::constant(m, -2.0);
        CHECK(approx_equal(bracket(basis[2 + 2 * j], basis[3 + 2 * k]), want));
        CHECK(approx_equal(bracket(basis[2 + 2 * j], basis[2 + 2 * k]), zero));
        CHECK(approx_equal(bracket(basis[3 + 2 * j], basis[3 + 2 * k]), zero));
      }
      CHECK(approx_equal(bracket(basis[0], basis[2 + 2 * j]), zero));
      CHECK(approx_equal(bracket(basis[1], basis[3 + 2 * j]), zero));
    }
  }
}

TEST_CASE("plain coordinate derivatives are not left invariant") {
  std::mt19937_64 rng(47);
  const int n = 1, m = 2 * n + 2;
  VectorField dx;
  dx.coef.assign(m, Polynomial::zero(m));
  dx.coef[2] = Polynomial::constant(m, 1.0);
  GroupElement g = random_element(n, rng);
  CHECK(!left_invariance_check(dx, g, 3));
}

TEST_CASE("sum of squares agrees with its expanded form") {
  for (int n : {1, 2}) {
    CHECK(approx_equal(sub_laplacian(n), sub_laplacian_explicit(n)));
    CHECK(approx_equal(heisenberg_sub_laplacian(n),
                       heisenberg_sub_laplacian_explicit(n)));
  }
}

TEST_CASE("partial Fourier reduction lands on the twisted operator") {
  for (int n : {1, 2}) {
    CHECK(approx_equal(sub_laplacian_reduced(0.5, 1.0, n),
                       laplacian(0.5, 1.0, n)));
    CHECK(approx_equal(sub_laplacian_reduced(-2.0, 0.7, n),
                       laplacian(-2.0, 0.7, n)));
  }
}

TEST_CASE("reduction at zero parameters is the flat operator") {
  const int n = 2;
  DiffOp flat(2 * n);
  for (int j = 0; j < n; ++j) {
    Exponents d(2 * n, 0);
    d[j] = 1;
    d[n + j] = 1;
    flat += DiffOp::term(2 * n, Exponents(2 * n, 0), d, 4.0);
  }
  CHECK(approx_equal(sub_laplacian_reduced(0.0, 0.0, n), flat));
}

TEST_CASE("s-independent restriction gives the quotient operator") {
  for (int n : {1, 2})
    CHECK(approx_equal(restrict_s_independent(sub_laplacian(n)),
                       heisenberg_sub_laplacian(n)));
}

TEST_CASE("quotient frame brackets close on the center") {
  const int n = 1, m = 2 * n + 1;
  auto basis = heisenberg_basis(n);
  REQUIRE(basis.size() == static_cast<std::size_t>(m));
  VectorField want;
  want.coef.assign(m, Polynomial::zero(m));
  want.coef[0] = Polynomial::constant(m, -2.0);
  CHECK(approx_equal(bracket(basis[1], basis[2]), want));

  std::mt19937_64 rng(48);
  HeisenbergElement g = project_q(random_element(n, rng));
  for (const VectorField& f : basis) CHECK(left_invariance_check(f, g, 3));
}

TEST_CASE("quotient operator on sample functions") {
  DiffOp lq = heisenberg_sub_laplacian(1);
  // coords (t, x, y); L(t^2) = 2(x^2+y^2), L(x^2+y^2) = 4
  Polynomial t2 = pow(Polynomial::variable(3, 0), 2);
  Polynomial r2 = pow(Polynomial::variable(3, 1), 2) +
                  pow(Polynomial::variable(3, 2), 2);
  CHECK(approx_equal(apply(lq, t2), r2 * Cplx(2.0)));
  CHECK(approx_equal(apply(lq, r2), Polynomial::constant(3, 4.0)));
}

TEST_CASE("operators with vertical coefficients cannot be reduced") {
  // an operator multiplying by s has no s-independent restriction
  DiffOp bad = DiffOp::mul_var(4, 0);
  CHECK_THROWS_AS(restrict_s_independent(bad), InvalidParameter);
}
