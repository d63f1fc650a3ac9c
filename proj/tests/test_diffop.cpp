#include <doctest.h>

#include <random>

#include "maglap/diffop.hpp"

using namespace maglap;

namespace {

Polynomial random_poly(int nvars, int degree_cap, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(0, degree_cap);
  Polynomial p(nvars);
  for (int t = 0; t < 4; ++t) {
    Exponents e(nvars, 0);
    int budget = degree_cap;
    for (int v = 0; v < nvars && budget > 0; ++v) {
      int k = expo(rng) % (budget + 1);
      e[v] = k;
      budget -= k;
    }
    p.add_term(e, Cplx(box(rng), box(rng)));
  }
  p.prune();
  return p;
}

DiffOp random_op(int nvars, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  std::uniform_int_distribution<int> pick(0, nvars - 1);
  std::uniform_int_distribution<int> ord(0, 2);
  DiffOp op(nvars);
  for (int t = 0; t < 3; ++t) {
    Exponents mono(nvars, 0), deriv(nvars, 0);
    mono[pick(rng)] += ord(rng);
    deriv[pick(rng)] += ord(rng);
    op += DiffOp::term(nvars, mono, deriv, Cplx(box(rng), box(rng)));
  }
  op.prune();
  return op;
}

}  // namespace

TEST_CASE("canonical commutator of derivative and coordinate") {
  DiffOp d = DiffOp::partial(2, 0);
  DiffOp x = DiffOp::mul_var(2, 0);
  CHECK(approx_equal(commutator(d, x), DiffOp::identity(2)));
  CHECK(commutator(d, DiffOp::mul_var(2, 1)).is_zero());
}

TEST_CASE("composition is normal ordered") {
  // d/dx o x = x d/dx + 1, all monomials left of all derivatives
  DiffOp c = compose(DiffOp::partial(1, 0), DiffOp::mul_var(1, 0));
  DiffOp want = DiffOp::identity(1);
  want += DiffOp::term(1, {1}, {1}, 1.0);
  CHECK(approx_equal(c, want));
}

TEST_CASE("composition matches sequential application on polynomials") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    DiffOp a = random_op(3, rng);
    DiffOp b = random_op(3, rng);
    Polynomial p = random_poly(3, 4, rng);
    CHECK(approx_equal(apply(compose(a, b), p), apply(a, apply(b, p)),
                       1e-10));
  }
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 5; ++t) {
    DiffOp a = random_op(2, rng), b = random_op(2, rng), c = random_op(2, rng);
    CHECK(approx_equal(compose(compose(a, b), c), compose(a, compose(b, c)),
                       1e-10));
  }
}

TEST_CASE("commutator is antisymmetric and bilinear") {
  std::mt19937_64 rng(33);
  DiffOp a = random_op(2, rng), b = random_op(2, rng), c = random_op(2, rng);
  CHECK(approx_equal(commutator(a, b), -commutator(b, a), 1e-10));
  CHECK(approx_equal(commutator(a + b, c),
                     commutator(a, c) + commutator(b, c), 1e-10));
  CHECK(commutator(a, a).is_zero());
}

TEST_CASE("application to a frozen polynomial") {
  // (x d/dx)(x^3) = 3 x^3
  DiffOp euler = DiffOp::term(1, {1}, {1}, 1.0);
  Polynomial x3 = Polynomial::monomial(1, {3}, 1.0);
  CHECK(approx_equal(apply(euler, x3), x3 * Cplx(3.0)));
  // d^2/dx^2 (x^3) = 6x
  DiffOp d2 = DiffOp::term(1, {0}, {2}, 1.0);
  CHECK(approx_equal(apply(d2, x3), Polynomial::monomial(1, {1}, 6.0)));
}

TEST_CASE("application to exponential-polynomials uses the chain rule") {
  Envelope env = Envelope::gaussian(1, Cplx(-0.5, 0.1));
  ExpPoly f = ExpPoly::monomial({1}, {0}, 1.0, env);
  // d/dz (z e^Q) = (1 + z dQ/dz) e^Q with dQ/dz = alpha conj z
  ExpPoly lhs = apply(DiffOp::partial(2, 0), f);
  ExpPoly rhs = derive(f, 0, Var::z);
  CHECK(approx_equal(lhs, rhs));
  // multiplication operators act on the polynomial part alone
  ExpPoly zf = apply(DiffOp::mul_var(2, 0), f);
  CHECK(approx_equal(zf, ExpPoly::monomial({2}, {0}, 1.0, env)));
}

TEST_CASE("scalar multiples and sums of operators act linearly") {
  std::mt19937_64 rng(34);
  DiffOp a = random_op(2, rng), b = random_op(2, rng);
  Polynomial p = random_poly(2, 3, rng);
  CHECK(approx_equal(apply(a + b, p), apply(a, p) + apply(b, p), 1e-10));
  CHECK(approx_equal(apply(a * Cplx(2.0, 1.0), p),
                     apply(a, p) * Cplx(2.0, 1.0), 1e-10));
}

TEST_CASE("identity and zero behave as units") {
  std::mt19937_64 rng(35);
  DiffOp a = random_op(2, rng);
  CHECK(approx_equal(compose(DiffOp::identity(2), a), a));
  CHECK(approx_equal(compose(a, DiffOp::identity(2)), a));
  CHECK(compose(DiffOp::zero(2), a).is_zero());
  CHECK(DiffOp::zero(2).is_zero());
}
