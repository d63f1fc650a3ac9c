#include <doctest.h>

#include <random>

#include "maglap/polynomial.hpp"

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

Eigen::VectorXcd random_point(int nvars, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> box(-1.5, 1.5);
  Eigen::VectorXcd x(nvars);
  for (int j = 0; j < nvars; ++j) x[j] = Cplx(box(rng), box(rng));
  return x;
}

}  // namespace

TEST_CASE("terms iterate in graded-lex order") {
  Polynomial p(2);
  p.add_term({2, 0}, 1.0);
  p.add_term({0, 0}, 1.0);
  p.add_term({0, 1}, 1.0);
  p.add_term({1, 0}, 1.0);
  p.add_term({1, 1}, 1.0);
  std::vector<Exponents> order;
  for (const auto& [e, c] : p.terms()) order.push_back(e);
  CHECK(order == std::vector<Exponents>{
                     {0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}});
}

TEST_CASE("product expands difference of squares") {
  Polynomial one = Polynomial::constant(1, 1.0);
  Polynomial z = Polynomial::variable(1, 0);
  Polynomial prod = (one + z) * (one - z);
  Polynomial want = one - pow(z, 2);
  CHECK(approx_equal(prod, want));
}

TEST_CASE("derivative satisfies the product rule") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    Polynomial p = random_poly(3, 3, rng);
    Polynomial q = random_poly(3, 3, rng);
    for (int v = 0; v < 3; ++v) {
      Polynomial lhs = derive(p * q, v);
      Polynomial rhs = derive(p, v) * q + p * derive(q, v);
      CHECK(approx_equal(lhs, rhs));
    }
  }
}

TEST_CASE("derivative of a frozen monomial") {
  Polynomial p = Polynomial::monomial(2, {3, 1}, 2.0);
  Polynomial want = Polynomial::monomial(2, {2, 1}, 6.0);
  CHECK(approx_equal(derive(p, 0), want));
  CHECK(derive(Polynomial::constant(2, 5.0), 1).is_zero());
}

TEST_CASE("substitution agrees with evaluation after the affine map") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  for (int t = 0; t < 8; ++t) {
    Polynomial p = random_poly(2, 3, rng);
    Eigen::MatrixXcd m(2, 3);
    Eigen::VectorXcd shift(2);
    for (int i = 0; i < 2; ++i) {
      shift[i] = Cplx(box(rng), box(rng));
      for (int j = 0; j < 3; ++j) m(i, j) = Cplx(box(rng), box(rng));
    }
    Polynomial q = substitute_affine(p, m, shift);
    Eigen::VectorXcd y = random_point(3, rng);
    Cplx direct = evaluate(p, (m * y + shift).eval());
    CHECK(std::abs(evaluate(q, y) - direct) < 1e-10);
  }
}

TEST_CASE("substitution by the identity changes nothing") {
  std::mt19937_64 rng(13);
  Polynomial p = random_poly(3, 3, rng);
  Polynomial q = substitute_affine(p, Eigen::MatrixXcd::Identity(3, 3),
                                   Eigen::VectorXcd::Zero(3));
  CHECK(approx_equal(p, q));
}

TEST_CASE("coefficient conjugation is an involution") {
  std::mt19937_64 rng(14);
  Polynomial p = random_poly(2, 3, rng);
  CHECK(approx_equal(conj_coeffs(conj_coeffs(p)), p));
  CHECK(max_abs_diff(p, p) == 0.0);
}

TEST_CASE("prune drops relatively tiny terms") {
  Polynomial p(1);
  p.add_term({0}, 1.0);
  p.add_term({1}, 1e-16);
  p.prune();
  CHECK(p.terms().size() == 1);
  CHECK(p.degree() == 0);
}

TEST_CASE("monomial enumeration counts binomially") {
  // degree <= cap in nvars variables: C(nvars + cap, nvars) vectors
  CHECK(monomial_exponents_up_to(2, 3).size() == 10);
  CHECK(monomial_exponents_up_to(3, 2).size() == 10);
  CHECK(monomial_exponents_up_to(1, 0).size() == 1);
  for (const Exponents& e : monomial_exponents_up_to(2, 3))
    CHECK(total_degree(e) <= 3);
}

TEST_CASE("dimension mismatches are rejected") {
  Polynomial p(2);
  CHECK_THROWS_AS(p.add_term({1}, 1.0), DimensionMismatch);
  CHECK_THROWS_AS(Polynomial::variable(2, 5), IndexOutOfRange);
  Polynomial q(3);
  CHECK_THROWS_AS(p += q, DimensionMismatch);
}
