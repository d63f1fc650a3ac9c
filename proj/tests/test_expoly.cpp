#include <doctest.h>

#include <random>

#include "maglap/expoly.hpp"
#include "maglap/tolerances.hpp"

using namespace maglap;

namespace {

Envelope sample_envelope(int n) {
  Envelope e = Envelope::gaussian(n, Cplx(-0.7, 0.3));
  for (int j = 0; j < n; ++j) {
    e.beta[j] = Cplx(0.2, -0.1 * (j + 1));
    e.gamma[j] = Cplx(-0.3, 0.05 * (j + 1));
  }
  e.delta = Cplx(0.1, 0.2);
  return e;
}

ExpPoly sample_function(int n) {
  Polynomial p(2 * n);
  Exponents e(2 * n, 0);
  e[0] = 2;
  p.add_term(e, Cplx(1.0, 0.5));
  e.assign(2 * n, 0);
  e[n] = 1;
  p.add_term(e, Cplx(-0.4, 0.0));
  p.add_term(Exponents(2 * n, 0), Cplx(0.3, -0.2));
  return ExpPoly(std::move(p), sample_envelope(n));
}

Eigen::VectorXcd point(std::initializer_list<Cplx> vals) {
  Eigen::VectorXcd z(static_cast<int>(vals.size()));
  int j = 0;
  for (Cplx v : vals) z[j++] = v;
  return z;
}

// Wirtinger derivative by central differences in the real coordinates.
Cplx numeric_derive(const ExpPoly& f, const Eigen::VectorXcd& z, int j,
                    Var kind) {
  const double h = 1e-5;
  Eigen::VectorXcd zp = z, zm = z;
  zp[j] += h;
  zm[j] -= h;
  Cplx dx = (evaluate(f, zp) - evaluate(f, zm)) / (2.0 * h);
  zp = z;
  zm = z;
  zp[j] += Cplx(0.0, h);
  zm[j] -= Cplx(0.0, h);
  Cplx dy = (evaluate(f, zp) - evaluate(f, zm)) / (2.0 * h);
  Cplx i{0.0, 1.0};
  return kind == Var::z ? 0.5 * (dx - i * dy) : 0.5 * (dx + i * dy);
}

}  // namespace

TEST_CASE("envelope evaluation matches its definition") {
  Envelope e = sample_envelope(1);
  Eigen::VectorXcd z = point({Cplx(0.8, -0.3)});
  Cplx q = e.alpha * std::norm(z[0]) + e.beta[0] * z[0] +
           e.gamma[0] * std::conj(z[0]) + e.delta;
  CHECK(std::abs(evaluate(e, z) - std::exp(q)) < 1e-14);
}

TEST_CASE("derivatives match finite differences") {
  for (int n : {1, 2}) {
    ExpPoly f = sample_function(n);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    Eigen::VectorXcd z(n);
    for (int j = 0; j < n; ++j) z[j] = Cplx(box(rng), box(rng));
    for (int j = 0; j < n; ++j) {
      for (Var kind : {Var::z, Var::zbar}) {
        Cplx exact = evaluate(derive(f, j, kind), z);
        Cplx approx = numeric_derive(f, z, j, kind);
        double scale = std::max(1.0, std::abs(exact));
        CHECK(std::abs(exact - approx) < kFiniteDiffTol * scale);
      }
    }
  }
}

TEST_CASE("product evaluates pointwise") {
  ExpPoly f = sample_function(1);
  ExpPoly g = ExpPoly::monomial({1}, {0}, Cplx(0.0, 1.0),
                                Envelope::gaussian(1, Cplx(-0.4, -0.2)));
  Eigen::VectorXcd z = point({Cplx(-0.6, 0.9)});
  CHECK(std::abs(evaluate(mul(f, g), z) - evaluate(f, z) * evaluate(g, z)) <
        1e-12);
}

TEST_CASE("conjugation evaluates pointwise") {
  ExpPoly f = sample_function(1);
  Eigen::VectorXcd z = point({Cplx(0.4, 0.7)});
  CHECK(std::abs(evaluate(conj(f), z) - std::conj(evaluate(f, z))) < 1e-13);
  // involution
  CHECK(approx_equal(conj(conj(f)), f));
}

TEST_CASE("sum requires a common envelope") {
  ExpPoly f = sample_function(1);
  ExpPoly g = ExpPoly::exponential(Envelope::gaussian(1, Cplx(-1.0, 0.0)));
  CHECK_THROWS_AS(add(f, g), EnvelopeMismatch);
  CHECK(approx_equal(add(f, ExpPoly::zero(1)), f));
  CHECK(approx_equal(add(ExpPoly::zero(1), f), f));
}

TEST_CASE("scaling is pointwise multiplication by a constant") {
  ExpPoly f = sample_function(2);
  Eigen::VectorXcd z = point({Cplx(0.1, 0.2), Cplx(-0.3, 0.4)});
  Cplx c{2.0, -1.0};
  CHECK(std::abs(evaluate(scale(f, c), z) - c * evaluate(f, z)) < 1e-12);
}

TEST_CASE("monomial constructor places exponents in both blocks") {
  ExpPoly f = ExpPoly::monomial({2, 0}, {0, 1}, Cplx(3.0, 0.0),
                                Envelope::zero(2));
  Eigen::VectorXcd z = point({Cplx(1.0, 1.0), Cplx(0.0, 2.0)});
  Cplx want = 3.0 * z[0] * z[0] * std::conj(z[1]);
  CHECK(std::abs(evaluate(f, z) - want) < 1e-12);
}

TEST_CASE("derivative of a pure exponential multiplies by the gradient") {
  Envelope e = Envelope::gaussian(1, Cplx(-0.5, 0.0));
  ExpPoly g = ExpPoly::exponential(e);
  // d/dz exp(alpha z conj z) = alpha conj(z) exp(...)
  ExpPoly d = derive(g, 0, Var::z);
  CHECK(d.poly().terms().size() == 1);
  Eigen::VectorXcd z = point({Cplx(0.3, -0.4)});
  Cplx want = e.alpha * std::conj(z[0]) * evaluate(g, z);
  CHECK(std::abs(evaluate(d, z) - want) < 1e-13);
}

TEST_CASE("polynomial and envelope dimensions must agree") {
  CHECK_THROWS_AS(ExpPoly(Polynomial::zero(3), Envelope::zero(1)),
                  DimensionMismatch);
}
