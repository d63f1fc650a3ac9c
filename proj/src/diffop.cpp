#include "maglap/diffop.hpp"

namespace maglap {

namespace {

double binom(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::uint32_t i = 0; i < k; ++i)
    r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

double falling(std::uint32_t n, std::uint32_t k) {
  double r = 1.0;
  for (std::uint32_t i = 0; i < k; ++i) r *= static_cast<double>(n - i);
  return r;
}

}  // namespace

// Pushes the derivatives of the left factor through the monomial of the
// right factor with the Leibniz rule, one variable at a time:
//   d^p (x^a g) = sum_k C(p,k) a!/(a-k)! x^(a-k) d^(p-k) g.
DiffOp compose(const DiffOp& a, const DiffOp& b) {
  a.require_same_vars(b);
  const int nv = a.nvars();
  DiffOp r(nv);
  Exponents key(2 * nv);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // Variables where a derivative of `a` meets a power of `b`'s monomial.
      std::vector<int> active;
      for (int v = 0; v < nv; ++v)
        if (ka[nv + v] > 0 && kb[v] > 0) active.push_back(v);

      Exponents k(active.size(), 0);
      while (true) {
        double w = 1.0;
        for (std::size_t i = 0; i < active.size(); ++i) {
          int v = active[i];
          w *= binom(ka[nv + v], k[i]) * falling(kb[v], k[i]);
        }
        for (int v = 0; v < nv; ++v) {
          key[v] = ka[v] + kb[v];
          key[nv + v] = ka[nv + v] + kb[nv + v];
        }
        for (std::size_t i = 0; i < active.size(); ++i) {
          int v = active[i];
          key[v] -= k[i];
          key[nv + v] -= k[i];
        }
        r.add_key(key, ca * cb * w);

        // Odometer over 0 <= k_i <= min(deriv_a, mono_b) per active slot.
        std::size_t i = 0;
        for (; i < active.size(); ++i) {
          int v = active[i];
          if (k[i] < std::min(ka[nv + v], kb[v])) {
            ++k[i];
            break;
          }
          k[i] = 0;
        }
        if (i == active.size()) break;
      }
    }
  }
  r.prune();
  return r;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) {
  return compose(a, b) - compose(b, a);
}

Polynomial apply(const DiffOp& op, const Polynomial& p) {
  if (op.nvars() != p.nvars())
    throw DimensionMismatch("apply: operator/polynomial variables");
  const int nv = op.nvars();
  Polynomial r(nv);
  for (const auto& [key, c] : op.terms()) {
    Polynomial t = p;
    for (int v = 0; v < nv; ++v)
      for (std::uint32_t i = 0; i < key[nv + v]; ++i) t = derive(t, v);
    if (t.is_zero()) continue;
    Exponents mono(key.begin(), key.begin() + nv);
    r += mul_monomial(t, mono) * c;
  }
  r.prune();
  return r;
}

ExpPoly apply(const DiffOp& op, const ExpPoly& f) {
  const int n = f.n();
  if (op.nvars() != 2 * n)
    throw DimensionMismatch("apply: operator is not over (z, conj z)");
  ExpPoly r = ExpPoly::zero(n);
  for (const auto& [key, c] : op.terms()) {
    ExpPoly t = f;
    for (int j = 0; j < n; ++j) {
      for (std::uint32_t i = 0; i < key[2 * n + j]; ++i)
        t = derive(t, j, Var::z);
      for (std::uint32_t i = 0; i < key[3 * n + j]; ++i)
        t = derive(t, j, Var::zbar);
    }
    Exponents mono(key.begin(), key.begin() + 2 * n);
    r = add(r, ExpPoly(mul_monomial(t.poly(), mono) * c, t.envelope()));
  }
  return r;
}

double max_abs_diff(const DiffOp& a, const DiffOp& b) {
  a.require_same_vars(b);
  double m = 0.0;
  for (const auto& [e, c] : a.terms()) {
    auto it = b.terms().find(e);
    Cplx cb = it == b.terms().end() ? Cplx(0.0, 0.0) : it->second;
    m = std::max(m, std::abs(c - cb));
  }
  for (const auto& [e, c] : b.terms()) {
    auto it = a.terms().find(e);
    Cplx ca = it == a.terms().end() ? Cplx(0.0, 0.0) : it->second;
    m = std::max(m, std::abs(c - ca));
  }
  return m;
}

bool approx_equal(const DiffOp& a, const DiffOp& b, double rtol) {
  double scale = std::max(a.max_abs_coeff(), b.max_abs_coeff());
  if (scale == 0.0) return true;
  return max_abs_diff(a, b) <= rtol * scale;
}

}  // namespace maglap
