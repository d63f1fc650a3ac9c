#include "maglap/symmetry.hpp"

#include <cmath>

#include "maglap/operators.hpp"

namespace maglap {

namespace {

constexpr Cplx kI{0.0, 1.0};

void check_motion(const Motion& g) {
  const int n = g.n();
  if (g.A.rows() != n || g.A.cols() != n)
    throw DimensionMismatch("motion: matrix and translation sizes differ");
  double dev = (g.A * g.A.adjoint() - Eigen::MatrixXcd::Identity(n, n))
                   .cwiseAbs()
                   .maxCoeff();
  if (dev > kUnitaryTol) throw NotUnitary("motion: A A* deviates from I");
}

Eigen::VectorXcd origin_preimage(const Motion& g) {
  return -(g.A.adjoint() * g.b);
}

// Plain bilinear sum a_j b_j (no conjugation).
Cplx bilinear(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return a.cwiseProduct(b).sum();
}

Cplx hermitian_product(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w) {
  return bilinear(z, w.conjugate());
}

// Affine substitution data for z -> A z + b over the 2n ring [z | zbar].
void affine_blocks(const Motion& g, Eigen::MatrixXcd& M,
                   Eigen::VectorXcd& shift) {
  const int n = g.n();
  M = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  M.block(0, 0, n, n) = g.A;
  M.block(n, n, n, n) = g.A.conjugate();
  shift.resize(2 * n);
  shift.head(n) = g.b;
  shift.tail(n) = g.b.conjugate();
}

}  // namespace

Motion make_motion(Eigen::MatrixXcd A, Eigen::VectorXcd b) {
  Motion g{std::move(A), std::move(b)};
  check_motion(g);
  return g;
}

Motion motion_identity(int n) {
  if (n < 1) throw InvalidParameter("motion_identity: dimension must be >= 1");
  return Motion{Eigen::MatrixXcd::Identity(n, n), Eigen::VectorXcd::Zero(n)};
}

Eigen::VectorXcd act(const Motion& g, const Eigen::VectorXcd& z) {
  check_motion(g);
  if (z.size() != g.n()) throw DimensionMismatch("act: point dimension");
  return g.A * z + g.b;
}

Motion motion_compose(const Motion& g, const Motion& h) {
  check_motion(g);
  check_motion(h);
  if (g.n() != h.n()) throw DimensionMismatch("motion_compose: dimensions");
  return Motion{g.A * h.A, g.A * h.b + g.b};
}

Motion motion_inverse(const Motion& g) {
  check_motion(g);
  return Motion{g.A.adjoint(), origin_preimage(g)};
}

double phase(const Motion& g, const Eigen::VectorXcd& z, double nu,
             double mu) {
  check_motion(g);
  if (z.size() != g.n()) throw DimensionMismatch("phase: point dimension");
  const Cplx h = hermitian_product(z, origin_preimage(g));
  return -nu * std::real(h) + mu * std::imag(h);
}

Cplx autfactor(const Motion& g, const Eigen::VectorXcd& z, double nu,
               double mu) {
  return std::exp(kI * phase(g, z, nu, mu));
}

Cplx chain_defect(const Motion& g, const Motion& h, double nu, double mu) {
  check_motion(g);
  check_motion(h);
  if (g.n() != h.n()) throw DimensionMismatch("chain_defect: dimensions");
  return std::exp(-kI * phase(g, h.b, nu, mu));
}

ExpPoly t_apply(const Motion& g, const ExpPoly& f, double nu, double mu) {
  check_motion(g);
  if (f.n() != g.n()) throw DimensionMismatch("t_apply: function dimension");
  const int n = f.n();
  const Envelope& fe = f.envelope();
  const Eigen::VectorXcd w0 = origin_preimage(g);
  const Cplx cz(mu * 0.5, -nu * 0.5);
  const Cplx czb(mu * 0.5, nu * 0.5);

  Envelope env = Envelope::zero(n);
  env.alpha = fe.alpha;
  env.beta = g.A.transpose() * fe.beta + (cz - fe.alpha) * w0.conjugate();
  env.gamma = g.A.adjoint() * fe.gamma - (czb + fe.alpha) * w0;
  env.delta = fe.delta + fe.alpha * g.b.squaredNorm() + bilinear(fe.beta, g.b) +
              bilinear(fe.gamma, g.b.conjugate());

  Eigen::MatrixXcd M;
  Eigen::VectorXcd shift;
  affine_blocks(g, M, shift);
  return ExpPoly(substitute_affine(f.poly(), M, shift), std::move(env));
}

bool intertwine_check(const Motion& g, double nu, double mu, int n,
                      int degree_cap) {
  if (n < 1) throw InvalidParameter("intertwine_check: dimension must be >= 1");
  if (!(mu > 0.0)) throw InvalidParameter("intertwine_check: mu must be > 0");
  if (degree_cap < 0)
    throw InvalidParameter("intertwine_check: degree cap must be >= 0");
  check_motion(g);
  if (g.n() != n) throw DimensionMismatch("intertwine_check: dimensions");

  const DiffOp lap = laplacian(nu, mu, n);
  const Envelope envs[] = {
      Envelope::gaussian(n, Cplx(-mu * 0.5, -nu * 0.5)),
      Envelope::gaussian(n, Cplx(-mu, 0.0)),
  };
  for (const Envelope& env : envs) {
    for (const Exponents& e : monomial_exponents_up_to(2 * n, degree_cap)) {
      Exponents a(e.begin(), e.begin() + n), b(e.begin() + n, e.end());
      ExpPoly f = ExpPoly::monomial(a, b, 1.0, env);
      ExpPoly lhs = apply(lap, t_apply(g, f, nu, mu));
      ExpPoly rhs = t_apply(g, apply(lap, f), nu, mu);
      if (!approx_equal(lhs, rhs, kRouteTol)) return false;
    }
  }
  return true;
}

bool pullback_theta_check(const Motion& g, double nu, double mu) {
  check_motion(g);
  const int n = g.n();
  const MagneticPotential theta(nu, mu, n);
  const Eigen::VectorXcd w0 = origin_preimage(g);

  Eigen::MatrixXcd M;
  Eigen::VectorXcd shift;
  affine_blocks(g, M, shift);

  std::vector<Polynomial> pz, pzb;
  pz.reserve(n);
  pzb.reserve(n);
  for (int j = 0; j < n; ++j) {
    pz.push_back(substitute_affine(theta.dz_coeff(j), M, shift));
    pzb.push_back(substitute_affine(theta.dzbar_coeff(j), M, shift));
  }

  for (int k = 0; k < n; ++k) {
    Polynomial lhs_z(2 * n), lhs_zb(2 * n);
    for (int j = 0; j < n; ++j) {
      lhs_z += g.A(j, k) * pz[j];
      lhs_zb += std::conj(g.A(j, k)) * pzb[j];
    }
    Polynomial rhs_z = theta.dz_coeff(k);
    rhs_z += Polynomial::constant(2 * n,
                                  Cplx(mu * 0.5, -nu * 0.5) * std::conj(w0[k]));
    Polynomial rhs_zb = theta.dzbar_coeff(k);
    rhs_zb +=
        Polynomial::constant(2 * n, -Cplx(mu * 0.5, nu * 0.5) * w0[k]);
    if (!approx_equal(lhs_z, rhs_z)) return false;
    if (!approx_equal(lhs_zb, rhs_zb)) return false;
  }
  return true;
}

Motion random_rotation(int n, std::mt19937_64& rng) {
  if (n < 1) throw InvalidParameter("random_rotation: dimension must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd raw(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) raw(i, j) = Cplx(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(raw);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const Cplx d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return Motion{q, Eigen::VectorXcd::Zero(n)};
}

Motion random_translation(int n, std::mt19937_64& rng) {
  return Motion{Eigen::MatrixXcd::Identity(n, n), random_point(n, rng)};
}

Motion random_motion(int n, std::mt19937_64& rng) {
  Motion rot = random_rotation(n, rng);
  return Motion{std::move(rot.A), random_point(n, rng)};
}

Eigen::VectorXcd random_point(int n, std::mt19937_64& rng) {
  if (n < 1) throw InvalidParameter("random_point: dimension must be >= 1");
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  Eigen::VectorXcd z(n);
  for (int j = 0; j < n; ++j) z[j] = Cplx(box(rng), box(rng));
  return z;
}

}  // namespace maglap
