#include "maglap/integrate.hpp"

#include <cmath>
#include <numbers>

#include "maglap/spectra.hpp"

namespace maglap {

namespace {

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= static_cast<double>(i);
  return r;
}

Cplx cpow(Cplx base, int k) {
  Cplx r(1.0, 0.0);
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

// sum_k a! b! / (k! (a-k)! (b-k)!) u^(a+b-k) beta^(b-k) gamma^(a-k),
// the polynomial factor of the differentiated generating integral.
Cplx moment_sum(int a, int b, Cplx u, Cplx beta, Cplx gamma) {
  Cplx s(0.0, 0.0);
  const int kmax = std::min(a, b);
  for (int k = 0; k <= kmax; ++k) {
    double c = factorial(a) * factorial(b) /
               (factorial(k) * factorial(a - k) * factorial(b - k));
    s += c * cpow(u, a + b - k) * cpow(beta, b - k) * cpow(gamma, a - k);
  }
  return s;
}

// Same sum with gamma a polynomial (degree one in practice).
Polynomial moment_sum_poly(int a, int b, Cplx u, Cplx beta,
                           const Polynomial& gamma) {
  Polynomial s(gamma.nvars());
  const int kmax = std::min(a, b);
  for (int k = 0; k <= kmax; ++k) {
    double c = factorial(a) * factorial(b) /
               (factorial(k) * factorial(a - k) * factorial(b - k));
    s += (c * cpow(u, a + b - k) * cpow(beta, b - k)) *
         pow(gamma, static_cast<unsigned>(a - k));
  }
  return s;
}

}  // namespace

Cplx gaussian_moment(int a, int b, Cplx alpha, Cplx beta, Cplx gamma) {
  if (a < 0 || b < 0)
    throw InvalidParameter("gaussian_moment: exponents must be >= 0");
  if (std::real(alpha) >= 0.0)
    throw NonIntegrable("gaussian_moment: Re(alpha) must be < 0");
  const Cplx u = -1.0 / alpha;
  return (std::numbers::pi / (-alpha)) * std::exp(-beta * gamma / alpha) *
         moment_sum(a, b, u, beta, gamma);
}

InnerProductReport inner_product(const ExpPoly& f, const ExpPoly& g) {
  ExpPoly h = mul(f, conj(g));
  const Envelope& env = h.envelope();
  if (std::real(env.alpha) >= 0.0)
    throw NonIntegrable("inner_product: combined envelope not integrable");
  const int n = h.n();

  Cplx value(0.0, 0.0);
  double magnitude = 0.0;
  const Cplx c0 = std::exp(env.delta);
  for (const auto& [e, c] : h.poly().terms()) {
    Cplx m = c * c0;
    for (int j = 0; j < n; ++j) {
      m *= gaussian_moment(static_cast<int>(e[j]), static_cast<int>(e[n + j]),
                           env.alpha, env.beta[j], env.gamma[j]);
    }
    value += m;
    magnitude += std::abs(m);
  }
  return InnerProductReport{value, kErrorEstimateFactor * magnitude};
}

double norm_squared(const ExpPoly& f) {
  return std::real(inner_product(f, f).value);
}

ExpPoly project_level(const ExpPoly& f, int l, double nu, double mu, int n) {
  if (n < 1) throw InvalidParameter("project_level: dimension must be >= 1");
  if (!(mu > 0.0)) throw InvalidParameter("project_level: mu must be > 0");
  if (l < 0) throw InvalidParameter("project_level: level must be >= 0");
  if (f.n() != n) throw DimensionMismatch("project_level: function dimension");

  const Envelope& fe = f.envelope();
  const Cplx alpha_w = fe.alpha + Cplx(-mu * 0.5, nu * 0.5);
  if (std::real(alpha_w) >= 0.0)
    throw NonIntegrable("project_level: kernel pairing not integrable");
  const Cplx u = -1.0 / alpha_w;

  // Joint ring [z | zbar | w | wbar]: lift f's polynomial into the w block.
  Eigen::MatrixXcd lift = Eigen::MatrixXcd::Zero(2 * n, 4 * n);
  for (int j = 0; j < n; ++j) {
    lift(j, 2 * n + j) = 1.0;
    lift(n + j, 3 * n + j) = 1.0;
  }
  Polynomial integrand =
      kernel_joint_poly(l, mu, n) *
      substitute_affine(f.poly(), lift, Eigen::VectorXcd::Zero(2 * n));

  // Linear wbar coefficient of the combined envelope, per coordinate, as a
  // degree-one polynomial in z.
  std::vector<Polynomial> gamma_w;
  gamma_w.reserve(n);
  for (int j = 0; j < n; ++j) {
    Polynomial gj(2 * n);
    Exponents ez(2 * n, 0);
    ez[j] = 1;
    gj.add_term(ez, Cplx(mu, 0.0));
    gj.add_term(Exponents(2 * n, 0), fe.gamma[j]);
    gj.prune();
    gamma_w.push_back(std::move(gj));
  }

  Polynomial result(2 * n);
  for (const auto& [e, c] : integrand.terms()) {
    Exponents zpart(e.begin(), e.begin() + 2 * n);
    Polynomial contrib(2 * n);
    contrib.add_term(zpart, c);
    for (int j = 0; j < n; ++j) {
      contrib = contrib * moment_sum_poly(static_cast<int>(e[2 * n + j]),
                                          static_cast<int>(e[3 * n + j]), u,
                                          fe.beta[j], gamma_w[j]);
    }
    result += contrib;
  }
  result *= cpow(std::numbers::pi / (-alpha_w), n);
  result.prune();

  Envelope env = Envelope::zero(n);
  env.alpha = Cplx(-mu * 0.5, -nu * 0.5);
  env.delta = fe.delta;
  for (int j = 0; j < n; ++j) {
    env.beta[j] = -mu * fe.beta[j] / alpha_w;
    env.delta -= fe.beta[j] * fe.gamma[j] / alpha_w;
  }
  return ExpPoly(std::move(result), std::move(env));
}

}  // namespace maglap
