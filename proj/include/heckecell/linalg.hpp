#pragma once

// Exact linear algebra over the fields the pipeline works with: Q, F_p and
// the cyclotomic fields Q[x]/Phi_e. Every algorithm takes the field object
// explicitly, so the same template serves all three.

#include "heckecell/exactalg.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace heckecell {

struct RationalField {
  using Elem = Rational;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_integer(const Integer& n) const { return Rational(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  std::string format(const Elem& a) const;
  /// Rational roots of sum_i coeffs[i] x^i (rational root theorem).
  std::vector<Elem> roots(const std::vector<Elem>& coeffs) const;
};

struct PrimeField {
  using Elem = std::uint64_t;
  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime);
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_integer(const Integer& n) const;
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p); }
  Elem neg(Elem a) const { return (p - a) % p; }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::uint64_t characteristic() const { return p; }
  std::string name() const { return "F" + std::to_string(p); }
  std::string format(Elem a) const { return std::to_string(a); }
  /// Roots in F_p; exhaustive for p <= 65536, small residues otherwise.
  std::vector<Elem> roots(const std::vector<Elem>& coeffs) const;
};

/// Q(zeta_e) realised as Q[x]/Phi_e(x); elements are coefficient vectors of
/// length phi(e) in the power basis.
struct CyclotomicField {
  using Elem = std::vector<Rational>;
  int e;
  std::vector<Rational> modulus;  // Phi_e, monic, low degree first

  explicit CyclotomicField(int order);
  std::size_t degree() const { return modulus.size() - 1; }
  Elem zero() const { return Elem(degree(), Rational(0)); }
  Elem one() const;
  Elem from_integer(const Integer& n) const;
  /// zeta^k for any integer k.
  Elem zeta_power(long k) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q(zeta_" + std::to_string(e) + ")"; }
  std::string format(const Elem& a) const;
  /// Best effort: tests 0, small integers and +-zeta^k.
  std::vector<Elem> roots(const std::vector<Elem>& coeffs) const;
};

/// The e-th cyclotomic polynomial over Z, low degree first.
std::vector<Integer> cyclotomic_polynomial(int e);

template <class F>
using FMatrix = Matrix<typename F::Elem>;

template <class F>
FMatrix<F> zero_matrix(const F& f, std::size_t r, std::size_t c) {
  return FMatrix<F>(r, c, f.zero());
}

template <class F>
FMatrix<F> identity_matrix(const F& f, std::size_t n) {
  auto m = zero_matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class F>
FMatrix<F> mat_mul(const F& f, const FMatrix<F>& a, const FMatrix<F>& b) {
  auto c = zero_matrix(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!f.is_zero(b(k, j))) c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
    }
  return c;
}

template <class F>
FMatrix<F> mat_add(const F& f, const FMatrix<F>& a, const FMatrix<F>& b) {
  auto c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = f.add(a.data()[i], b.data()[i]);
  return c;
}

template <class F>
FMatrix<F> mat_scale(const F& f, const typename F::Elem& s, const FMatrix<F>& a) {
  auto c = a;
  for (auto& x : c.data()) x = f.mul(s, x);
  return c;
}

template <class F>
bool mat_eq(const F& f, const FMatrix<F>& a, const FMatrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    if (!f.eq(a.data()[i], b.data()[i])) return false;
  return true;
}

template <class F>
bool mat_is_zero(const F& f, const FMatrix<F>& a) {
  for (const auto& x : a.data())
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
std::vector<typename F::Elem> mat_vec(const F& f, const FMatrix<F>& a, const std::vector<typename F::Elem>& x) {
  std::vector<typename F::Elem> y(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!f.is_zero(a(i, j)) && !f.is_zero(x[j])) y[i] = f.add(y[i], f.mul(a(i, j), x[j]));
  return y;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(const F& f, FMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F& f, FMatrix<F> m) {
  return rref(f, m).size();
}

/// Basis of {x : m x = 0}.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace(const F& f, FMatrix<F> m) {
  const auto pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> x(m.cols(), f.zero());
    x[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(m(i, free));
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class F>
typename F::Elem determinant(const F& f, FMatrix<F> m) {
  const std::size_t n = m.rows();
  auto det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && f.is_zero(m(p, c))) ++p;
    if (p == n) return f.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const auto inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m(i, c))) continue;
      const auto factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

template <class F>
std::optional<FMatrix<F>> inverse(const F& f, const FMatrix<F>& m) {
  const std::size_t n = m.rows();
  auto aug = zero_matrix(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  const auto pivots = rref(f, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  auto inv = zero_matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Characteristic polynomial det(xI - m), low degree first, via reduction to
/// Hessenberg form (valid over any field).
template <class F>
std::vector<typename F::Elem> charpoly(const F& f, FMatrix<F> h) {
  using E = typename F::Elem;
  const std::size_t n = h.rows();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && f.is_zero(h(i, m - 1))) ++i;
    if (i == n) continue;
    if (i > m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const E tinv = f.inv(h(m, m - 1));
    for (std::size_t j = m + 1; j < n; ++j) {
      const E u = f.mul(h(j, m - 1), tinv);
      if (f.is_zero(u)) continue;
      for (std::size_t k = 0; k < n; ++k) h(j, k) = f.sub(h(j, k), f.mul(u, h(m, k)));
      for (std::size_t k = 0; k < n; ++k) h(k, m) = f.add(h(k, m), f.mul(u, h(k, j)));
    }
  }
  std::vector<std::vector<E>> p(n + 1);
  p[0] = {f.one()};
  for (std::size_t m = 1; m <= n; ++m) {
    // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i t_i h[m-i-1][m-1] p_{m-i-1}
    std::vector<E> cur(m + 1, f.zero());
    for (std::size_t k = 0; k < p[m - 1].size(); ++k) {
      cur[k + 1] = f.add(cur[k + 1], p[m - 1][k]);
      cur[k] = f.sub(cur[k], f.mul(h(m - 1, m - 1), p[m - 1][k]));
    }
    E t = f.one();
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h(m - i, m - i - 1));
      const E coef = f.mul(t, h(m - i - 1, m - 1));
      if (f.is_zero(coef)) continue;
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) cur[k] = f.sub(cur[k], f.mul(coef, p[m - i - 1][k]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

/// Incrementally built echelon basis of a subspace of k^n (row vectors).
template <class F>
class Echelon {
 public:
  using E = typename F::Elem;
  using Vec = std::vector<E>;

  explicit Echelon(const F& f) : f_(f) {}

  /// Reduces v against the current rows; zero iff v lies in the span.
  Vec reduce(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const E c = v[pivots_[i]];
      if (f_.is_zero(c)) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f_.sub(v[j], f_.mul(c, rows_[i][j]));
    }
    return v;
  }
  /// Adds v; returns false if it was already in the span.
  bool add(const Vec& v) {
    Vec r = reduce(v);
    std::size_t p = 0;
    while (p < r.size() && f_.is_zero(r[p])) ++p;
    if (p == r.size()) return false;
    const E inv = f_.inv(r[p]);
    for (auto& x : r) x = f_.mul(x, inv);
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    originals_.push_back(v);
    return true;
  }
  bool contains(const Vec& v) const {
    const Vec r = reduce(v);
    for (const auto& x : r)
      if (!f_.is_zero(x)) return false;
    return true;
  }
  std::size_t dim() const { return rows_.size(); }
  /// The vectors accepted by add(), in order.
  const std::vector<Vec>& originals() const { return originals_; }

 private:
  F f_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> originals_;
};

/// Smallest subspace containing `seeds` and stable under every matrix in
/// `gens` (acting on column vectors). Returns the accepted spanning vectors.
template <class F>
std::vector<std::vector<typename F::Elem>> spin(const F& f, const std::vector<FMatrix<F>>& gens,
                                                const std::vector<std::vector<typename F::Elem>>& seeds) {
  Echelon<F> ech(f);
  std::vector<std::vector<typename F::Elem>> queue;
  for (const auto& s : seeds)
    if (ech.add(s)) queue.push_back(s);
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& g : gens) {
      auto w = mat_vec(f, g, queue[k]);
      if (ech.add(w)) queue.push_back(std::move(w));
    }
  return queue;
}

template <class F>
typename F::Elem poly_eval(const F& f, const std::vector<typename F::Elem>& coeffs, const typename F::Elem& x) {
  auto acc = f.zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

/// Specialisation theta: A -> k with v -> q (q a unit of k).
template <class F>
typename F::Elem specialize_poly(const F& f, const LaurentPoly& p, const typename F::Elem& q) {
  auto acc = f.zero();
  if (p.is_zero()) return acc;
  const auto qinv = f.inv(q);
  for (const auto& t : p.terms()) {
    auto pw = f.one();
    const auto& base = t.exp >= 0 ? q : qinv;
    for (int i = 0; i < std::abs(t.exp); ++i) pw = f.mul(pw, base);
    acc = f.add(acc, f.mul(f.from_integer(t.coeff), pw));
  }
  return acc;
}

template <class F>
FMatrix<F> specialize_matrix(const F& f, const PolyMatrix& m, const typename F::Elem& q) {
  auto out = zero_matrix(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = specialize_poly(f, m(i, j), q);
  return out;
}

template <class F>
FMatrix<F> lift_int_matrix(const F& f, const IntMatrix& m) {
  auto out = zero_matrix(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = f.from_integer(m.data()[i]);
  return out;
}

}  // namespace heckecell
