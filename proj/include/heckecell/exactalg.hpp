#pragma once

// Exact arithmetic: integer Laurent polynomials in v and dense integer matrices.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heckecell {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an operation receives mathematically degenerate input.
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);

/// Element of Z[v, v^-1]. Terms are kept sorted by exponent with no zero
/// coefficients, so the zero polynomial has no terms and equality is
/// structural.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT(google-explicit-constructor): constants
  LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exp, const Integer& coeff = 1);
  /// Builds from parallel exponent/coefficient lists; duplicates are summed.
  static LaurentPoly from_terms(const std::vector<int>& exps,
                                const std::vector<Integer>& coeffs);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  /// Lowest / highest exponent present. Precondition: nonzero.
  int min_exp() const;
  int max_exp() const;
  Integer coeff_at(int k) const;
  Integer leading_coeff() const;

  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;
  /// True iff every exponent is <= -1.
  bool in_strictly_negative_part() const;
  /// True iff every exponent is >= 0.
  bool in_polynomial_part() const;
  bool is_bar_invariant() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);
  /// this += c * v^shift * p, the hot-loop primitive of the table kernels.
  void add_scaled(const LaurentPoly& p, const Integer& c, int shift);
  /// this += a * b.
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

  /// Evaluates at v = 1.
  Integer at_one() const;
  /// Evaluates at a nonzero rational point.
  Rational evaluate(const Rational& q) const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_bar(const LaurentPoly& p);
Integer coeff_at(const LaurentPoly& p, int k);

/// v^L - v^-L.
LaurentPoly v_difference(int L);

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  bool operator==(const Matrix&) const = default;

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<LaurentPoly>;

IntMatrix identity_int(std::size_t n);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& c, const IntMatrix& a);
bool is_zero(const IntMatrix& m);
Integer trace(const IntMatrix& m);
bool is_symmetric(const IntMatrix& m);

PolyMatrix identity_poly(std::size_t n);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const LaurentPoly& c, const PolyMatrix& a);

/// Divides out the gcd of all nonzero entries. Returns (M / n, n) with n > 0.
/// Throws DegenerateInput on the zero matrix.
std::pair<IntMatrix, Integer> gcd_normalize(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(IntMatrix m);

/// True iff all leading principal minors are positive.
bool is_positive_definite(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the given integer
/// row vectors. Returns the nonzero rows, echelon with positive pivots and
/// entries above each pivot reduced into [0, pivot).
std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows);

/// Divides a vector by the gcd of its entries (sign fixed so the first
/// nonzero entry is positive).
std::vector<Integer> make_primitive(std::vector<Integer> v);

/// Prime factorisation by trial division up to `bound`. A cofactor above the
/// bound is returned as a single "prime" entry if it survives.
std::map<Integer, int> factorize(Integer n, std::uint64_t bound = 1000000);
std::vector<Integer> prime_divisors(const Integer& n);
bool is_prime(std::uint64_t n);

/// Converts an integer-valued rational; throws if the denominator is not 1.
Integer to_integer(const Rational& q);

}  // namespace heckecell
