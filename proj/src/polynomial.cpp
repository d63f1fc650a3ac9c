#include "maglap/polynomial.hpp"

#include <algorithm>

namespace maglap {

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_vars(b);
  Polynomial r(a.nvars());
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (int v = 0; v < a.nvars(); ++v) e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  }
  r.prune();
  return r;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial r = Polynomial::constant(p.nvars(), 1.0);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

Polynomial derive(const Polynomial& p, int v) {
  p.check_var(v);
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[v] == 0) continue;
    Exponents d = e;
    d[v] -= 1;
    r.add_term(d, c * static_cast<double>(e[v]));
  }
  r.prune();
  return r;
}

Polynomial mul_monomial(const Polynomial& p, const Exponents& m) {
  if (static_cast<int>(m.size()) != p.nvars())
    throw DimensionMismatch("mul_monomial: exponent length");
  Polynomial r(p.nvars());
  Exponents e(p.nvars());
  for (const auto& [ep, c] : p.terms()) {
    for (int v = 0; v < p.nvars(); ++v) e[v] = ep[v] + m[v];
    r.add_term(e, c);
  }
  return r;
}

Cplx evaluate(const Polynomial& p, const Eigen::VectorXcd& x) {
  if (x.size() != p.nvars())
    throw DimensionMismatch("evaluate: point dimension");
  Cplx sum(0.0, 0.0);
  for (const auto& [e, c] : p.terms()) {
    Cplx t = c;
    for (int v = 0; v < p.nvars(); ++v)
      for (std::uint32_t k = 0; k < e[v]; ++k) t *= x[v];
    sum += t;
  }
  return sum;
}

Polynomial substitute_affine(const Polynomial& p, const Eigen::MatrixXcd& M,
                             const Eigen::VectorXcd& shift) {
  if (M.rows() != p.nvars() || shift.size() != M.rows())
    throw DimensionMismatch("substitute_affine: matrix shape");
  const int nout = static_cast<int>(M.cols());

  // Affine image of each old variable, then cached powers as needed.
  std::vector<Polynomial> image;
  image.reserve(p.nvars());
  for (int v = 0; v < p.nvars(); ++v) {
    Polynomial a(nout);
    if (shift[v] != Cplx(0.0, 0.0)) a.add_term(Exponents(nout, 0), shift[v]);
    for (int j = 0; j < nout; ++j) {
      if (M(v, j) != Cplx(0.0, 0.0)) {
        Exponents e(nout, 0);
        e[j] = 1;
        a.add_term(e, M(v, j));
      }
    }
    image.push_back(a);
  }
  std::vector<std::vector<Polynomial>> powers(p.nvars());
  for (int v = 0; v < p.nvars(); ++v)
    powers[v].push_back(Polynomial::constant(nout, 1.0));

  Polynomial r(nout);
  for (const auto& [e, c] : p.terms()) {
    Polynomial t = Polynomial::constant(nout, c);
    for (int v = 0; v < p.nvars(); ++v) {
      while (powers[v].size() <= e[v])
        powers[v].push_back(powers[v].back() * image[v]);
      if (e[v] > 0) t = t * powers[v][e[v]];
    }
    r += t;
  }
  r.prune();
  return r;
}

Polynomial conj_coeffs(const Polynomial& p) {
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, std::conj(c));
  return r;
}

double max_abs_diff(const Polynomial& a, const Polynomial& b) {
  a.require_same_vars(b);
  double m = 0.0;
  for (const auto& [e, c] : a.terms()) m = std::max(m, std::abs(c - b.coeff(e)));
  for (const auto& [e, c] : b.terms()) m = std::max(m, std::abs(c - a.coeff(e)));
  return m;
}

bool approx_equal(const Polynomial& a, const Polynomial& b, double rtol) {
  double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  if (scale == 0.0) return true;
  return max_abs_diff(a, b) <= rtol * scale;
}

namespace {

void grow_exponents(int nvars, int cap, Exponents& e, int from,
                    std::vector<Exponents>& out) {
  out.push_back(e);
  if (cap == 0) return;
  for (int v = from; v < nvars; ++v) {
    e[v] += 1;
    grow_exponents(nvars, cap - 1, e, v, out);
    e[v] -= 1;
  }
}

}  // namespace

std::vector<Exponents> monomial_exponents_up_to(int nvars, int cap) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  grow_exponents(nvars, cap, e, 0, out);
  return out;
}

}  // namespace maglap
