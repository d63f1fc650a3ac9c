#include <doctest.h>

#include <random>

#include "maglap/integrate.hpp"
#include "maglap/operators.hpp"
#include "maglap/spectra.hpp"
#include "maglap/symmetry.hpp"
#include "maglap/tolerances.hpp"

using namespace maglap;

namespace {

constexpr Cplx kI{0.0, 1.0};

ExpPoly sample_state(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  Envelope env = Envelope::gaussian(n, Cplx(-0.8, 0.2));
  for (int j = 0; j < n; ++j) {
    env.beta[j] = 0.5 * Cplx(box(rng), box(rng));
    env.gamma[j] = 0.5 * Cplx(box(rng), box(rng));
  }
  Polynomial p(2 * n);
  Exponents e(2 * n, 0);
  e[0] = 1;
  p.add_term(e, Cplx(box(rng), box(rng)));
  p.add_term(Exponents(2 * n, 0), Cplx(box(rng), box(rng)));
  return ExpPoly(std::move(p), env);
}

}  // namespace

TEST_CASE("motions compose, invert, and act consistently") {
  std::mt19937_64 rng(71);
  for (int n : {1, 2}) {
    for (int t = 0; t < 5; ++t) {
      Motion g = random_motion(n, rng), k = random_motion(n, rng);
      Eigen::VectorXcd z = random_point(n, rng);
      CHECK((act(motion_compose(g, k), z) - act(g, act(k, z))).norm() < 1e-12);
      CHECK((act(motion_inverse(g), act(g, z)) - z).norm() < 1e-12);
      CHECK((act(g, Eigen::VectorXcd::Zero(n)) - g.b).norm() < 1e-14);
    }
  }
}

TEST_CASE("non-unitary blocks are rejected") {
  Eigen::MatrixXcd a(1, 1);
  a(0, 0) = 2.0;
  CHECK_THROWS_AS(make_motion(a, Eigen::VectorXcd::Zero(1)), NotUnitary);
}

TEST_CASE("random rotations are unitary and fix the origin") {
  std::mt19937_64 rng(72);
  Motion r = random_rotation(3, rng);
  CHECK((r.A * r.A.adjoint() - Eigen::MatrixXcd::Identity(3, 3)).norm() <
        1e-12);
  CHECK(r.b.norm() == 0.0);
}

TEST_CASE("phase vanishes for the identity and on frozen samples") {
  std::mt19937_64 rng(73);
  Eigen::VectorXcd z = random_point(2, rng);
  CHECK(std::abs(phase(motion_identity(2), z, 0.7, 1.3)) < 1e-14);
  CHECK(std::abs(autfactor(motion_identity(2), z, 0.7, 1.3) - Cplx(1.0)) <
        1e-14);

  Motion shift = motion_identity(1);
  shift.b[0] = 1.0;
  Eigen::VectorXcd zi(1);
  zi[0] = kI;
  CHECK(phase(shift, zi, 0.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(std::abs(autfactor(shift, zi, 0.5, 1.0)) - 1.0) < 1e-14);
}

TEST_CASE("composition rule is exact when either factor fixes the origin") {
  std::mt19937_64 rng(74);
  const double nu = 0.4, mu = 1.1;
  for (int t = 0; t < 20; ++t) {
    Motion g = (t % 2 == 0) ? random_rotation(2, rng) : random_motion(2, rng);
    Motion k = (t % 2 == 0) ? random_motion(2, rng) : random_rotation(2, rng);
    Eigen::VectorXcd z = random_point(2, rng);
    Cplx lhs = autfactor(motion_compose(g, k), z, nu, mu);
    Cplx rhs = autfactor(g, act(k, z), nu, mu) * autfactor(k, z, nu, mu);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("generic pairs pick up a constant unit-modulus defect") {
  std::mt19937_64 rng(75);
  const double nu = 0.4, mu = 1.1;
  Motion g = random_motion(1, rng), k = random_motion(1, rng);
  Cplx defect = chain_defect(g, k, nu, mu);
  CHECK(std::abs(std::abs(defect) - 1.0) < 1e-13);
  bool generic = false;
  for (int t = 0; t < 5; ++t) {
    Eigen::VectorXcd z = random_point(1, rng);
    Cplx lhs = autfactor(motion_compose(g, k), z, nu, mu);
    Cplx rhs = autfactor(g, act(k, z), nu, mu) * autfactor(k, z, nu, mu);
    CHECK(std::abs(lhs - defect * rhs) < 1e-12);
    if (std::abs(lhs - rhs) > 1e-6) generic = true;
  }
  CHECK(generic);
}

TEST_CASE("weighted pullback is unitary and respects composition") {
  std::mt19937_64 rng(76);
  const double nu = 0.6, mu = 1.0;
  const int n = 1;
  for (int t = 0; t < 5; ++t) {
    Motion g = random_motion(n, rng), k = random_motion(n, rng);
    ExpPoly f = sample_state(n, rng), h = sample_state(n, rng);

    CHECK(approx_equal(t_apply(motion_identity(n), f, nu, mu), f));

    Cplx before = inner_product(f, h).value;
    Cplx after =
        inner_product(t_apply(g, f, nu, mu), t_apply(g, h, nu, mu)).value;
    CHECK(std::abs(before - after) < 1e-10 * std::max(1.0, std::abs(before)));

    // The multiplier sits in the envelope constant: both sides share the
    // same substituted polynomial, so the scalar shifts delta exactly.
    ExpPoly lhs = t_apply(g, t_apply(k, f, nu, mu), nu, mu);
    ExpPoly direct = t_apply(motion_compose(k, g), f, nu, mu);
    Envelope shifted = direct.envelope();
    shifted.delta += kI * phase(k, g.b, nu, mu);
    ExpPoly rhs(direct.poly(), shifted);
    CHECK(approx_equal(lhs, rhs, kRouteTol));
  }
}

TEST_CASE("translations commute up to the magnetic scalar") {
  std::mt19937_64 rng(77);
  const double nu = 0.2, mu = 1.3;
  const int n = 2;
  Motion tb = random_translation(n, rng), tc = random_translation(n, rng);
  ExpPoly f = sample_state(n, rng);
  Cplx pairing = tb.b.cwiseProduct(tc.b.conjugate()).sum();
  ExpPoly lhs = t_apply(tb, t_apply(tc, f, nu, mu), nu, mu);
  ExpPoly inner = t_apply(tc, t_apply(tb, f, nu, mu), nu, mu);
  // Swapping translations multiplies by exp(-2 i mu Im<b,c>), landing in
  // the shared envelope constant rather than the coefficients.
  Envelope shifted = inner.envelope();
  shifted.delta += Cplx(0.0, -2.0 * mu * pairing.imag());
  ExpPoly rhs(inner.poly(), shifted);
  CHECK(approx_equal(lhs, rhs, kRouteTol));
}

TEST_CASE("weighted action commutes with the twisted operator") {
  std::mt19937_64 rng(78);
  const double nu = 0.5, mu = 1.0;
  const int n = 1;
  CHECK(intertwine_check(random_translation(n, rng), nu, mu, n, 3));
  CHECK(intertwine_check(random_rotation(n, rng), nu, mu, n, 3));
  CHECK(intertwine_check(random_motion(n, rng), nu, mu, n, 3));
}

TEST_CASE("plain pullback without the weight fails to commute") {
  std::mt19937_64 rng(79);
  const double nu = 0.0, mu = 1.0;
  const int n = 1;
  Motion tr = random_translation(n, rng);
  ExpPoly f =
      ExpPoly::exponential(Envelope::gaussian(n, Cplx(-mu * 0.5, -nu * 0.5)));
  DiffOp lap = laplacian(nu, mu, n);
  ExpPoly moved_then_op = apply(lap, t_apply(tr, f, 0.0, 0.0));
  ExpPoly op_then_moved = t_apply(tr, apply(lap, f), 0.0, 0.0);
  CHECK(!approx_equal(moved_then_op, op_then_moved, kRouteTol));
}

TEST_CASE("connection form pulls back with the phase differential") {
  std::mt19937_64 rng(80);
  const double nu = 0.7, mu = 1.2;
  for (int n : {1, 2}) {
    CHECK(pullback_theta_check(motion_identity(n), nu, mu));
    CHECK(pullback_theta_check(random_translation(n, rng), nu, mu));
    CHECK(pullback_theta_check(random_rotation(n, rng), nu, mu));
    CHECK(pullback_theta_check(random_motion(n, rng), nu, mu));
  }
}

TEST_CASE("weighted action preserves each eigenspace") {
  std::mt19937_64 rng(81);
  const double nu = 0.3, mu = 1.0;
  const int n = 1;
  Motion g = random_motion(n, rng);
  DiffOp lap = laplacian(nu, mu, n);
  for (std::uint32_t level : {0u, 1u, 2u}) {
    ExpPoly f = hermite_rodrigues({level}, {0}, nu, mu, n);
    auto lam = eigencheck(lap, t_apply(g, f, nu, mu));
    REQUIRE(lam.has_value());
    CHECK(std::abs(*lam - Cplx(-2.0 * mu * (2.0 * level + n))) < 1e-9);
  }
}

TEST_CASE("inverse motion sends the origin to the advertised preimage") {
  std::mt19937_64 rng(82);
  Motion g = random_motion(2, rng);
  Eigen::VectorXcd w0 = act(motion_inverse(g), Eigen::VectorXcd::Zero(2));
  CHECK((w0 + g.A.adjoint() * g.b).norm() < 1e-13);
}
