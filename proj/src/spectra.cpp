#include "maglap/spectra.hpp"

#include <cmath>
#include <numbers>

#include "maglap/operators.hpp"

namespace maglap {

namespace {

constexpr Cplx kI{0.0, 1.0};

bool is_nonpositive_integer(Cplx v, double tol = 1e-12) {
  double r = std::round(std::real(v));
  return std::abs(std::imag(v)) <= tol && std::abs(std::real(v) - r) <= tol &&
         r <= 0.0;
}

bool is_nonnegative_integer(double v, double tol = 1e-12) {
  double r = std::round(v);
  return std::abs(v - r) <= tol && r >= 0.0;
}

double factorial(std::uint32_t k) {
  double r = 1.0;
  for (std::uint32_t i = 2; i <= k; ++i) r *= static_cast<double>(i);
  return r;
}

// 1/Gamma(a), zero at the poles.
double inv_gamma(double a) {
  if (is_nonpositive_integer(Cplx(a, 0.0))) return 0.0;
  return 1.0 / std::tgamma(a);
}

void check_spec_params(double mu, int n) {
  if (n < 1) throw InvalidParameter("dimension n must be >= 1");
  if (!(mu > 0.0)) throw InvalidParameter("mu must be > 0");
}

void check_multi_index(const Exponents& r, int n, const char* what) {
  if (static_cast<int>(r.size()) != n)
    throw DimensionMismatch(std::string(what) + ": multi-index length");
}

Cplx hermitian_product(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w) {
  Cplx s(0.0, 0.0);
  for (int j = 0; j < z.size(); ++j) s += z[j] * std::conj(w[j]);
  return s;
}

// |z - w|^2 as a polynomial in (w, conj w) for fixed z.
Polynomial squared_distance_poly(const Eigen::VectorXcd& z, int n) {
  Polynomial q(2 * n);
  Exponents e(2 * n, 0);
  for (int j = 0; j < n; ++j) {
    q.add_term(e, std::norm(z[j]));
    Exponents ew(2 * n, 0);
    ew[n + j] = 1;
    q.add_term(ew, -z[j]);
    Exponents ewb(2 * n, 0);
    ewb[j] = 1;
    q.add_term(ewb, -std::conj(z[j]));
    Exponents eww(2 * n, 0);
    eww[j] = 1;
    eww[n + j] = 1;
    q.add_term(eww, 1.0);
  }
  q.prune();
  return q;
}

// Polynomial part of 1F1(-l; n; mu q) with q a given polynomial.
Polynomial hyp1f1_poly(int l, int n, double mu, const Polynomial& q) {
  Polynomial sum = Polynomial::constant(q.nvars(), 1.0);
  Polynomial qk = Polynomial::constant(q.nvars(), 1.0);
  double c = 1.0;
  for (int k = 0; k < l; ++k) {
    c *= static_cast<double>(-l + k) /
         (static_cast<double>(n + k) * static_cast<double>(k + 1));
    qk = qk * q;
    sum += (c * std::pow(mu, k + 1)) * qk;
  }
  return sum;
}

}  // namespace

Cplx hyp1f1(Cplx a, Cplx c, Cplx x) {
  if (is_nonpositive_integer(c))
    throw PoleAtC("hyp1f1: c is a non-positive integer");
  const bool terminating = is_nonpositive_integer(a);
  const int last = terminating ? static_cast<int>(-std::round(std::real(a))) : -1;

  Cplx sum(1.0, 0.0);
  Cplx term(1.0, 0.0);
  for (int k = 0; k < kSeriesMaxTerms; ++k) {
    if (terminating && k == last) return sum;
    term *= (a + Cplx(k)) / ((c + Cplx(k)) * Cplx(k + 1.0)) * x;
    sum += term;
    if (std::abs(term) <= kSeriesTol * std::abs(sum)) return sum;
  }
  throw NonConvergence("hyp1f1: series did not converge");
}

// Optimally truncated correction sum  sum_k (p)_k (q)_k / (k! t^k):
// stops at a vanishing numerator, at the smallest term, or at round-off.
Cplx correction_sum(double p, double q, Cplx t) {
  Cplx sum(1.0, 0.0);
  Cplx term(1.0, 0.0);
  double prev = 1.0;
  for (int k = 0; k < kSeriesMaxTerms; ++k) {
    Cplx next = term * Cplx(p + k, 0.0) * Cplx(q + k, 0.0) /
                (Cplx(k + 1.0, 0.0) * t);
    double mag = std::abs(next);
    if (mag == 0.0 || mag >= prev) break;
    sum += next;
    term = next;
    prev = mag;
    if (mag <= kSeriesTol * std::abs(sum)) break;
  }
  return sum;
}

Cplx hyp1f1_asymptotic(double a, double c, double x, double x_min) {
  if (x < x_min)
    throw DomainTooSmall("hyp1f1_asymptotic: x below asymptotic regime");
  const double g_c = std::tgamma(c);

  Cplx leading;
  if (is_nonpositive_integer(Cplx(a, 0.0))) {
    // (-x)^(-a) with -a a non-negative integer: exact sign.
    int p = static_cast<int>(std::round(-a));
    leading = Cplx((p % 2 == 0) ? 1.0 : -1.0) * std::pow(x, p);
  } else {
    leading = std::pow(Cplx(-x, 0.0), Cplx(-a, 0.0));
  }
  Cplx first = leading * inv_gamma(c - a) *
               correction_sum(a, a - c + 1.0, Cplx(-x, 0.0));
  Cplx second = std::exp(x) * std::pow(x, a - c) * inv_gamma(a) *
                correction_sum(c - a, 1.0 - a, Cplx(x, 0.0));
  return g_c * (first + second);
}

SpectrumLevel eigenvalue(int l, double mu, int n) {
  check_spec_params(mu, n);
  if (l < 0) throw InvalidParameter("eigenvalue: level must be >= 0");
  return SpectrumLevel{l, -2.0 * mu * (2.0 * l + n), mu * (0.5 * n + l)};
}

std::vector<SpectrumLevel> spectrum_table(int n, double mu, int lmax) {
  check_spec_params(mu, n);
  if (lmax < 0) throw InvalidParameter("spectrum_table: lmax must be >= 0");
  std::vector<SpectrumLevel> t;
  t.reserve(lmax + 1);
  for (int l = 0; l <= lmax; ++l) t.push_back(eigenvalue(l, mu, n));
  return t;
}

Cplx RadialEigenfunction::eval(const Eigen::VectorXcd& z) const {
  if (z.size() != n) throw DimensionMismatch("RadialEigenfunction: point");
  const double q = z.squaredNorm();
  const Cplx alpha = printed_envelope_sign ? Cplx(-mu * 0.5, nu * 0.5)
                                           : Cplx(-mu * 0.5, -nu * 0.5);
  return std::exp(alpha * q) * hyp1f1(Cplx(-lambda), Cplx(n), Cplx(mu * q));
}

RadialEigenfunction radial_eigenfunction(double lambda, double nu, double mu,
                                         int n, bool printed_envelope_sign) {
  check_spec_params(mu, n);
  RadialEigenfunction r{lambda, nu, mu, n, printed_envelope_sign, false, {}};

  if (is_nonnegative_integer(lambda)) {
    r.bounded = true;
    const int l = static_cast<int>(std::round(lambda));
    Polynomial abs2(2 * n);
    for (int j = 0; j < n; ++j) {
      Exponents e(2 * n, 0);
      e[j] = 1;
      e[n + j] = 1;
      abs2.add_term(e, 1.0);
    }
    Cplx alpha = printed_envelope_sign ? Cplx(-mu * 0.5, nu * 0.5)
                                       : Cplx(-mu * 0.5, -nu * 0.5);
    r.closed_form = ExpPoly(hyp1f1_poly(l, n, mu, abs2),
                            Envelope::gaussian(n, alpha));
  } else {
    // Magnitude along mu|z|^2 = x from the asymptotics: growth in
    // e^{-x/2} |1F1(-lambda; n; x)| means the function is unbounded.
    auto mag = [&](double x) {
      return std::exp(-x / 2.0) *
             std::abs(hyp1f1_asymptotic(-lambda, n, x));
    };
    r.bounded = !(mag(60.0) > 2.0 * mag(40.0));
  }
  return r;
}

std::optional<HermiteRoute> parse_route(const std::string& name) {
  if (name == "rodrigues") return HermiteRoute::Rodrigues;
  if (name == "ladder") return HermiteRoute::Ladder;
  if (name == "explicit") return HermiteRoute::Explicit;
  if (name == "paper-verbatim") return HermiteRoute::Verbatim;
  return std::nullopt;
}

std::string route_name(HermiteRoute route) {
  switch (route) {
    case HermiteRoute::Rodrigues: return "rodrigues";
    case HermiteRoute::Ladder: return "ladder";
    case HermiteRoute::Explicit: return "explicit";
    case HermiteRoute::Verbatim: return "paper-verbatim";
  }
  return "unknown";
}

ExpPoly hermite_rodrigues(const Exponents& r, const Exponents& s, double nu,
                          double mu, int n) {
  check_spec_params(mu, n);
  check_multi_index(r, n, "hermite_rodrigues r");
  check_multi_index(s, n, "hermite_rodrigues s");
  ExpPoly f = ExpPoly::exponential(Envelope::gaussian(n, Cplx(-mu, 0.0)));
  for (int j = 0; j < n; ++j) {
    for (std::uint32_t i = 0; i < r[j]; ++i) f = derive(f, j, Var::z);
    for (std::uint32_t i = 0; i < s[j]; ++i) f = derive(f, j, Var::zbar);
  }
  f = mul(f, ExpPoly::exponential(
                 Envelope::gaussian(n, Cplx(mu * 0.5, -nu * 0.5))));
  const auto parity = (total_degree(r) + total_degree(s)) % 2;
  Cplx pref = (parity ? -1.0 : 1.0) *
              std::pow(mu, -static_cast<double>(total_degree(s)));
  return scale(f, pref);
}

ExpPoly hermite_ladder(const Exponents& r, const Exponents& s, double nu,
                       double mu, int n) {
  check_spec_params(mu, n);
  check_multi_index(r, n, "hermite_ladder r");
  check_multi_index(s, n, "hermite_ladder s");
  ExpPoly f = ExpPoly::monomial(
      s, Exponents(n, 0), 1.0,
      Envelope::gaussian(n, Cplx(-mu * 0.5, -nu * 0.5)));
  for (int j = 0; j < n; ++j) {
    DiffOp up = creation(j, nu, mu, n);
    for (std::uint32_t i = 0; i < r[j]; ++i) f = apply(up, f);
  }
  return f;
}

ExpPoly hermite_explicit(const Exponents& r, const Exponents& s, double nu,
                         double mu, int n) {
  check_spec_params(mu, n);
  check_multi_index(r, n, "hermite_explicit r");
  check_multi_index(s, n, "hermite_explicit s");
  Polynomial p(2 * n);
  Exponents k(n, 0);
  while (true) {
    double coef = 1.0;
    Exponents e(2 * n, 0);
    for (int j = 0; j < n; ++j) {
      coef *= (k[j] % 2 ? -1.0 : 1.0) *
              std::pow(mu, static_cast<double>(r[j] - k[j])) * factorial(r[j]) *
              factorial(s[j]) /
              (factorial(k[j]) * factorial(r[j] - k[j]) * factorial(s[j] - k[j]));
      e[j] = s[j] - k[j];
      e[n + j] = r[j] - k[j];
    }
    p.add_term(e, coef);

    int j = 0;
    for (; j < n; ++j) {
      if (k[j] < std::min(r[j], s[j])) {
        ++k[j];
        break;
      }
      k[j] = 0;
    }
    if (j == n) break;
  }
  p.prune();
  return ExpPoly(std::move(p),
                 Envelope::gaussian(n, Cplx(-mu * 0.5, -nu * 0.5)));
}

ExpPoly hermite_verbatim(const Exponents& r, const Exponents& s, double nu,
                         double mu, int n) {
  check_spec_params(mu, n);
  check_multi_index(r, n, "hermite_verbatim r");
  check_multi_index(s, n, "hermite_verbatim s");
  const auto degr = total_degree(r), degs = total_degree(s);
  const double sign = ((degr + degs) % 2) ? -1.0 : 1.0;
  Polynomial p(2 * n);
  Exponents k(n, 0);
  while (true) {
    const auto degk = total_degree(k);
    double coef = sign * std::pow(std::sqrt(mu),
                                  static_cast<double>(degr + degs - 2 * degk));
    Exponents e(2 * n, 0);
    for (int j = 0; j < n; ++j) {
      coef *= factorial(r[j]) * factorial(s[j]) /
              (factorial(k[j]) * factorial(r[j] - k[j]) * factorial(s[j] - k[j]));
      e[j] = s[j] - k[j];
      e[n + j] = r[j] - k[j];
    }
    p.add_term(e, coef);

    int j = 0;
    for (; j < n; ++j) {
      if (k[j] < std::min(r[j], s[j])) {
        ++k[j];
        break;
      }
      k[j] = 0;
    }
    if (j == n) break;
  }
  p.prune();
  p *= std::pow(mu, -static_cast<double>(degs));
  return ExpPoly(std::move(p),
                 Envelope::gaussian(n, Cplx(-mu * 0.5, -nu * 0.5)));
}

ExpPoly hermite(const Exponents& r, const Exponents& s, double nu, double mu,
                int n, HermiteRoute route) {
  switch (route) {
    case HermiteRoute::Rodrigues: return hermite_rodrigues(r, s, nu, mu, n);
    case HermiteRoute::Ladder: return hermite_ladder(r, s, nu, mu, n);
    case HermiteRoute::Explicit: return hermite_explicit(r, s, nu, mu, n);
    case HermiteRoute::Verbatim: return hermite_verbatim(r, s, nu, mu, n);
  }
  throw InvalidParameter("hermite: unknown route");
}

Cplx jfactor(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w, double nu,
             double mu) {
  if (z.size() != w.size()) throw DimensionMismatch("jfactor: dimensions");
  Cplx h = hermitian_product(z, w);
  Cplx arg = -kI * (nu * 0.5) * (z.squaredNorm() - w.squaredNorm()) +
             (mu * 0.5) * (h - std::conj(h));
  return std::exp(arg);
}

double kernel_diagonal(int l, double mu, int n) {
  check_spec_params(mu, n);
  if (l < 0) throw InvalidParameter("kernel_diagonal: level must be >= 0");
  double logc = std::lgamma(n + l) - std::lgamma(n) - std::lgamma(l + 1);
  return std::pow(mu / std::numbers::pi, n) * std::exp(logc);
}

Cplx kernel_eval(int l, double nu, double mu, int n,
                 const Eigen::VectorXcd& z, const Eigen::VectorXcd& w) {
  check_spec_params(mu, n);
  if (l < 0) throw InvalidParameter("kernel_eval: level must be >= 0");
  if (z.size() != n || w.size() != n)
    throw DimensionMismatch("kernel_eval: point dimension");
  const double d2 = (z - w).squaredNorm();
  return kernel_diagonal(l, mu, n) * jfactor(z, w, nu, mu) *
         std::exp(-mu * 0.5 * d2) * hyp1f1(Cplx(-l), Cplx(n), Cplx(mu * d2));
}

Polynomial kernel_joint_poly(int l, double mu, int n) {
  check_spec_params(mu, n);
  if (l < 0) throw InvalidParameter("kernel_joint_poly: level must be >= 0");
  // |z - w|^2 over [z | zbar | w | wbar].
  Polynomial q(4 * n);
  for (int j = 0; j < n; ++j) {
    Exponents zz(4 * n, 0), zw(4 * n, 0), wz(4 * n, 0), ww(4 * n, 0);
    zz[j] = 1;
    zz[n + j] = 1;
    zw[j] = 1;
    zw[3 * n + j] = 1;
    wz[2 * n + j] = 1;
    wz[n + j] = 1;
    ww[2 * n + j] = 1;
    ww[3 * n + j] = 1;
    q.add_term(zz, 1.0);
    q.add_term(zw, -1.0);
    q.add_term(wz, -1.0);
    q.add_term(ww, 1.0);
  }
  Polynomial p = hyp1f1_poly(l, n, mu, q);
  p *= kernel_diagonal(l, mu, n);
  return p;
}

ExpPoly kernel_in_w(int l, double nu, double mu, int n,
                    const Eigen::VectorXcd& z) {
  check_spec_params(mu, n);
  if (l < 0) throw InvalidParameter("kernel_in_w: level must be >= 0");
  if (z.size() != n) throw DimensionMismatch("kernel_in_w: point dimension");

  Envelope env = Envelope::zero(n);
  env.alpha = Cplx(-mu * 0.5, nu * 0.5);
  env.gamma = mu * z;
  env.delta = Cplx(-mu * 0.5, -nu * 0.5) * z.squaredNorm();

  Polynomial p = hyp1f1_poly(l, n, mu, squared_distance_poly(z, n));
  p *= kernel_diagonal(l, mu, n);
  return ExpPoly(std::move(p), std::move(env));
}

}  // namespace maglap
