#include "heckecell/exactalg.hpp"

#include <algorithm>
#include <sstream>

namespace heckecell {

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(int c) {
  if (c != 0) terms_.push_back({0, Integer(c)});
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::monomial(int exp, const Integer& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exp, coeff});
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<int>& exps,
                                    const std::vector<Integer>& coeffs) {
  if (exps.size() != coeffs.size())
    throw std::invalid_argument("LaurentPoly: exponent and coefficient lists differ in length");
  LaurentPoly p;
  for (std::size_t i = 0; i < exps.size(); ++i) p.terms_.push_back({exps[i], coeffs[i]});
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.front().exp;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.back().exp;
}

Integer LaurentPoly::coeff_at(int k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == k) return it->coeff;
  return 0;
}

Integer LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
  return terms_.back().coeff;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.push_back({-it->exp, it->coeff});
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp += k;
  return p;
}

bool LaurentPoly::in_strictly_negative_part() const {
  return terms_.empty() || terms_.back().exp <= -1;
}

bool LaurentPoly::in_polynomial_part() const {
  return terms_.empty() || terms_.front().exp >= 0;
}

bool LaurentPoly::is_bar_invariant() const { return bar() == *this; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void LaurentPoly::add_scaled(const LaurentPoly& p, const Integer& c, int shift) {
  if (p.terms_.empty() || c == 0) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + p.terms_.size());
  auto a = terms_.begin();
  auto b = p.terms_.begin();
  while (a != terms_.end() || b != p.terms_.end()) {
    if (b == p.terms_.end() || (a != terms_.end() && a->exp < b->exp + shift)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->exp + shift < a->exp) {
      out.push_back({b->exp + shift, b->coeff * c});
      ++b;
    } else {
      Integer s = a->coeff + b->coeff * c;
      if (s != 0) out.push_back({a->exp, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, 1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1, 0);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.num_terms() == 1) {
    out = b.shifted(a.terms().front().exp);
    out *= a.terms().front().coeff;
    return out;
  }
  if (b.num_terms() == 1) {
    out = a.shifted(b.terms().front().exp);
    out *= b.terms().front().coeff;
    return out;
  }
  const int lo = a.min_exp() + b.min_exp();
  const int hi = a.max_exp() + b.max_exp();
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) dense[static_cast<std::size_t>(s.exp + t.exp - lo)] += s.coeff * t.coeff;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.terms_.push_back({lo + static_cast<int>(i), std::move(dense[i])});
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.num_terms() == 1) {
    add_scaled(b, a.terms().front().coeff, a.terms().front().exp);
    return;
  }
  if (b.num_terms() == 1) {
    add_scaled(a, b.terms().front().coeff, b.terms().front().exp);
    return;
  }
  *this += a * b;
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

Rational LaurentPoly::evaluate(const Rational& q) const {
  if (q == 0) throw std::invalid_argument("LaurentPoly::evaluate at zero");
  Rational s = 0;
  const Rational qi = 1 / q;
  for (const auto& t : terms_) {
    Rational pw = 1;
    const Rational& base = t.exp >= 0 ? q : qi;
    for (int i = 0; i < std::abs(t.exp); ++i) pw *= base;
    s += Rational(t.coeff) * pw;
  }
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->coeff;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0) {
      os << "-";
      c = abs(c);
    }
    first = false;
    if (it->exp == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << "v";
    if (it->exp != 1) os << "^" << it->exp;
  }
  return os.str();
}

LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly poly_bar(const LaurentPoly& p) { return p.bar(); }
Integer coeff_at(const LaurentPoly& p, int k) { return p.coeff_at(k); }

LaurentPoly v_difference(int L) {
  if (L == 0) return {};
  return LaurentPoly::monomial(L) - LaurentPoly::monomial(-L);
}

// ---------------------------------------------------------------------------
// Matrices

IntMatrix identity_int(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.data()) x *= s;
  return c;
}

bool is_zero(const IntMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Integer& x) { return x == 0; });
}

Integer trace(const IntMatrix& m) {
  Integer t = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

bool is_symmetric(const IntMatrix& m) { return m.rows() == m.cols() && m == m.transposed(); }

PolyMatrix identity_poly(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  PolyMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j).add_product(a(i, k), b(k, j));
    }
  return c;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

PolyMatrix operator*(const LaurentPoly& s, const PolyMatrix& a) {
  PolyMatrix c = a;
  for (auto& x : c.data()) x = s * x;
  return c;
}

std::pair<IntMatrix, Integer> gcd_normalize(const IntMatrix& m) {
  Integer g = 0;
  for (const auto& x : m.data())
    if (x != 0) g = gcd(g, x);
  if (g == 0) throw DegenerateInput("gcd_normalize: zero matrix");
  g = abs(g);
  IntMatrix out = m;
  for (auto& x : out.data()) x /= g;
  return {out, g};
}

Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_positive_definite(const IntMatrix& m) {
  if (!is_symmetric(m)) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    if (determinant(sub) <= 0) return false;
  }
  return true;
}

std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return {};
  const std::size_t n = rows.front().size();
  std::vector<std::vector<Integer>> out;
  std::size_t r = 0;  // next pivot row
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    // Euclid on column `col` among rows r.. until one nonzero entry remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q = rows[i][col] / rows[r][col];
        for (std::size_t j = col; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      // floor division into [0, pivot)
      Integer q = rows[i][col] / rows[r][col];
      if (rows[i][col] - q * rows[r][col] < 0) q -= 1;
      if (q != 0)
        for (std::size_t j = col; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<Integer> make_primitive(std::vector<Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  for (const auto& x : v)
    if (x != 0) {
      if (x < 0) g = -abs(g);
      else g = abs(g);
      break;
    }
  for (auto& x : v) x /= g;
  return v;
}

std::map<Integer, int> factorize(Integer n, std::uint64_t bound) {
  std::map<Integer, int> f;
  n = abs(n);
  if (n <= 1) return f;
  for (std::uint64_t p = 2; p <= bound; p += (p == 2 ? 1 : 2)) {
    const Integer P(p);
    if (P * P > n) break;
    while (n % P == 0) {
      ++f[P];
      n /= P;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  // Deterministic Miller-Rabin for 64-bit inputs.
  static const std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : bases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
      if (e & 1) r = mulmod(r, a);
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t b : bases) {
    std::uint64_t x = powmod(b, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

Integer to_integer(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) throw std::domain_error("rational value is not an integer");
  return boost::multiprecision::numerator(q);
}

}  // namespace heckecell
