#include <doctest.h>

#include "maglap/operators.hpp"

using namespace maglap;

namespace {

constexpr Cplx kI{0.0, 1.0};

Envelope ground_env(double nu, double mu, int n) {
  return Envelope::gaussian(n, Cplx(-mu * 0.5, -nu * 0.5));
}

}  // namespace

TEST_CASE("twisted operator assembles its printed terms") {
  const double nu = 1.0, mu = 2.0;
  const int n = 2;
  DiffOp want(2 * n);
  for (int j = 0; j < n; ++j) {
    Exponents d(2 * n, 0);
    d[j] = 1;
    d[n + j] = 1;
    want += DiffOp::term(2 * n, Exponents(2 * n, 0), d, 4.0);
  }
  want += euler(n) * (2.0 * Cplx(mu, nu));
  want -= euler_bar(n) * (2.0 * Cplx(mu, -nu));
  want -= mul_abs2(n) * Cplx(nu * nu + mu * mu);
  want += DiffOp::identity(2 * n) * (2.0 * kI * nu * static_cast<double>(n));
  CHECK(approx_equal(laplacian(nu, mu, n), want));
}

TEST_CASE("quarter rescaling relates the two operator forms") {
  CHECK(approx_equal(tilde_laplacian(0.5, 1.5, 2),
                     laplacian(0.5, 1.5, 2) * Cplx(-0.25)));
}

TEST_CASE("ground state is an eigenfunction with the bottom eigenvalue") {
  for (int n : {1, 2}) {
    for (double nu : {0.0, 1.0}) {
      const double mu = 1.3;
      ExpPoly g = ExpPoly::exponential(ground_env(nu, mu, n));
      auto lam = eigencheck(laplacian(nu, mu, n), g);
      REQUIRE(lam.has_value());
      CHECK(std::abs(*lam - Cplx(-2.0 * mu * n)) < 1e-10 * mu * n);
    }
  }
}

TEST_CASE("degree operators count holomorphic and antiholomorphic degree") {
  ExpPoly f = ExpPoly::monomial({3}, {2}, 1.0, Envelope::zero(1));
  CHECK(approx_equal(apply(euler(1), f), scale(f, 3.0)));
  CHECK(approx_equal(apply(euler_bar(1), f), scale(f, 2.0)));
  CHECK(commutator(euler(2), euler_bar(2)).is_zero());
}

TEST_CASE("ladder operators obey their commutation table") {
  const double nu = -0.7, mu = 1.1;
  for (int n : {1, 2}) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        DiffOp c = commutator(annihilation(j, nu, mu, n),
                              creation(k, nu, mu, n));
        if (j == k)
          CHECK(approx_equal(c, DiffOp::identity(2 * n) * Cplx(mu)));
        else
          CHECK(c.is_zero());
      }
    }
  }
}

TEST_CASE("factorization sums to the rescaled operator with a shift") {
  const double nu = 0.4, mu = 0.9;
  const int n = 2;
  DiffOp sum(2 * n);
  for (int j = 0; j < n; ++j)
    sum += compose(creation(j, nu, mu, n), annihilation(j, nu, mu, n));
  DiffOp want = tilde_laplacian(nu, mu, n);
  want -= DiffOp::identity(2 * n) * Cplx(0.5 * n * mu);
  CHECK(approx_equal(sum, want));
}

TEST_CASE("independent magnetic build agrees with the twisted operator") {
  for (int n : {1, 2}) {
    for (double nu : {0.0, 0.8}) {
      const double mu = 1.2;
      CHECK(approx_equal(magnetic_schrodinger(nu, mu, n),
                         -laplacian(nu, mu, n)));
    }
  }
}

TEST_CASE("potential form is purely imaginary") {
  MagneticPotential pot(0.6, 1.4, 2);
  CHECK(pot.is_imaginary_form());
}

TEST_CASE("gauge conjugation by zero weight is the identity map") {
  DiffOp lap = laplacian(0.3, 1.0, 1);
  CHECK(approx_equal(gauge_conjugate(lap, Cplx(0.0, 0.0)), lap));
}

TEST_CASE("gauge conjugation produces the rotation-coupled operator") {
  for (double nu : {0.0, 1.0, -2.0}) {
    const double mu = 0.7;
    CHECK(approx_equal(laplacian(nu, mu, 2),
                       gauge_conjugate(laplacian(0.0, mu, 2),
                                       -kI * (nu * 0.5))));
  }
}

TEST_CASE("real-coordinate rewrite is exact on generators") {
  // d/dx = d/dz + d/dzbar
  DiffOp dx = DiffOp::partial(2, 0);
  DiffOp want = DiffOp::partial(2, 0) + DiffOp::partial(2, 1);
  CHECK(approx_equal(complexify(dx), want));
  // x = (z + zbar)/2
  DiffOp x = DiffOp::mul_var(2, 0);
  DiffOp half = (DiffOp::mul_var(2, 0) + DiffOp::mul_var(2, 1)) * Cplx(0.5);
  CHECK(approx_equal(complexify(x), half));
}

TEST_CASE("eigencheck separates eigenfunctions from the rest") {
  const double mu = 1.0;
  ExpPoly mono = ExpPoly::monomial({1}, {0}, 1.0, Envelope::zero(1));
  CHECK(!eigencheck(laplacian(0.0, mu, 1), mono).has_value());
  auto one = eigencheck(DiffOp::identity(2), mono);
  REQUIRE(one.has_value());
  CHECK(std::abs(*one - Cplx(1.0)) < 1e-12);
  CHECK_THROWS_AS(eigencheck(laplacian(0.0, mu, 1), ExpPoly::zero(1)),
                  ZeroFunction);
}

TEST_CASE("field strength must be positive") {
  CHECK_THROWS_AS(laplacian(0.0, 0.0, 1), InvalidParameter);
  CHECK_THROWS_AS(laplacian(0.0, -1.0, 1), InvalidParameter);
  CHECK_THROWS_AS(creation(0, 0.0, -2.0, 1), InvalidParameter);
  CHECK_THROWS_AS(laplacian(0.0, 1.0, 0), InvalidParameter);
}
