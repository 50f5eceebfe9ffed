#include "heckecell/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace heckecell {

namespace {

std::vector<Integer> divisors(const Integer& n, std::size_t limit) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    Integer pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
      if (divs.size() > limit) return divs;
    }
  }
  return divs;
}

}  // namespace

// --- Q ---------------------------------------------------------------------

Rational RationalField::inv(const Rational& a) const {
  if (a == 0) throw std::domain_error("division by zero in Q");
  return 1 / a;
}

std::string RationalField::format(const Rational& a) const {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::vector<Rational> RationalField::roots(const std::vector<Rational>& coeffs) const {
  std::vector<Rational> out;
  // Clear denominators.
  Integer l = 1;
  for (const auto& c : coeffs) {
    const Integer d = boost::multiprecision::denominator(c);
    l = l / gcd(l, d) * d;
  }
  std::vector<Integer> ic;
  for (const auto& c : coeffs) ic.push_back(to_integer(c * l));
  while (!ic.empty() && ic.back() == 0) ic.pop_back();
  if (ic.size() <= 1) return out;
  std::size_t shift = 0;
  while (ic[shift] == 0) ++shift;
  if (shift > 0) out.push_back(0);
  std::vector<Integer> red(ic.begin() + static_cast<long>(shift), ic.end());
  if (red.size() <= 1) return out;
  const auto num = divisors(abs(red.front()), 4096);
  const auto den = divisors(abs(red.back()), 4096);
  std::set<Rational> seen;
  for (const auto& p : num)
    for (const auto& q : den)
      for (int sgn : {1, -1}) {
        Rational cand = Rational(p * sgn) / Rational(q);
        if (!seen.insert(cand).second) continue;
        if (poly_eval(*this, coeffs, cand) == 0) out.push_back(cand);
      }
  return out;
}

// --- F_p -------------------------------------------------------------------

PrimeField::PrimeField(std::uint64_t prime) : p(prime) {
  if (!is_prime(prime) || prime >= (1ULL << 62)) throw std::invalid_argument("PrimeField: modulus must be a prime < 2^62");
}

std::uint64_t PrimeField::from_integer(const Integer& n) const {
  Integer r = n % Integer(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p == 0) throw std::domain_error("division by zero in F_p");
  // Fermat
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> PrimeField::roots(const std::vector<std::uint64_t>& coeffs) const {
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = p <= 65536 ? p : 4096;
  for (std::uint64_t x = 0; x < limit; ++x)
    if (poly_eval(*this, coeffs, x) == 0) out.push_back(x);
  return out;
}

// --- Q(zeta_e) ---------------------------------------------------------------

std::vector<Integer> cyclotomic_polynomial(int e) {
  if (e < 1) throw std::invalid_argument("cyclotomic order must be positive");
  // x^e - 1 divided by Phi_d for proper divisors d.
  std::vector<Integer> num(static_cast<std::size_t>(e) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(e)] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    const auto div = cyclotomic_polynomial(d);
    // exact monic long division
    std::vector<Integer> q(num.size() - div.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      q[i] = num[i + div.size() - 1];
      for (std::size_t j = 0; j < div.size(); ++j) num[i + j] -= q[i] * div[j];
    }
    num = q;
  }
  return num;
}

CyclotomicField::CyclotomicField(int order) : e(order) {
  for (const auto& c : cyclotomic_polynomial(order)) modulus.emplace_back(c);
}

CyclotomicField::Elem CyclotomicField::one() const {
  Elem x = zero();
  x[0] = 1;
  return x;
}

CyclotomicField::Elem CyclotomicField::from_integer(const Integer& n) const {
  Elem x = zero();
  x[0] = Rational(n);
  return x;
}

CyclotomicField::Elem CyclotomicField::zeta_power(long k) const {
  long r = ((k % e) + e) % e;
  // reduce x^r modulo Phi_e
  std::vector<Rational> poly(static_cast<std::size_t>(r) + 1, Rational(0));
  poly[static_cast<std::size_t>(r)] = 1;
  const std::size_t n = degree();
  for (std::size_t i = poly.size(); i-- > n;) {
    const Rational c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) poly[i - n + j] -= c * modulus[j];
  }
  poly.resize(n, Rational(0));
  return poly;
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
  Elem c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
  Elem c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
  Elem c = a;
  for (auto& x : c) x = -x;
  return c;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
  const std::size_t n = degree();
  std::vector<Rational> prod(2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  for (std::size_t i = prod.size(); i-- > n;) {
    const Rational c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) prod[i - n + j] -= c * modulus[j];
  }
  prod.resize(n);
  return prod;
}

bool CyclotomicField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

CyclotomicField::Elem CyclotomicField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero in cyclotomic field");
  // Solve a * x = 1 via the multiplication matrix of a.
  const std::size_t n = degree();
  RationalField q;
  FMatrix<RationalField> m(n, n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Elem basis = zero();
    basis[j] = 1;
    const Elem col = mul(a, basis);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  auto minv = heckecell::inverse(q, m);
  if (!minv) throw std::domain_error("cyclotomic element not invertible");
  Elem x = zero();
  for (std::size_t i = 0; i < n; ++i) x[i] = (*minv)(i, 0);
  return x;
}

std::string CyclotomicField::format(const Elem& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << a[i] << ")";
    if (i > 0) os << "z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<CyclotomicField::Elem> CyclotomicField::roots(const std::vector<Elem>& coeffs) const {
  std::vector<Elem> cands;
  cands.push_back(zero());
  for (int c = 1; c <= 4; ++c) {
    cands.push_back(from_integer(c));
    cands.push_back(from_integer(-c));
  }
  for (long k = 1; k < e; ++k) {
    cands.push_back(zeta_power(k));
    cands.push_back(neg(zeta_power(k)));
  }
  std::vector<Elem> out;
  for (const auto& c : cands) {
    if (std::find(out.begin(), out.end(), c) != out.end()) continue;
    if (is_zero(poly_eval(*this, coeffs, c))) out.push_back(c);
  }
  return out;
}

}  // namespace heckecell
