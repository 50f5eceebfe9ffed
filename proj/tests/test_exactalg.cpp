#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <numeric>

using namespace heckecell;
using testing::int_matrix;
using testing::random_poly;
using testing::v;

TEST_CASE("poly_mul examples") {
  const LaurentPoly s = v(1) + v(-1);
  CHECK(poly_mul(s, s) == v(2) + LaurentPoly(2) + v(-2));
  CHECK(poly_mul(s, LaurentPoly()) == LaurentPoly());
  CHECK(poly_mul(LaurentPoly(), s).is_zero());
  CHECK(poly_mul(v_difference(2), v(-2)) == LaurentPoly(1) - v(-4));
}

TEST_CASE("poly_bar examples") {
  CHECK(poly_bar(v(2) + LaurentPoly::monomial(-1, 3)) == v(-2) + LaurentPoly::monomial(1, 3));
  CHECK(poly_bar(LaurentPoly(5)) == LaurentPoly(5));
  CHECK(poly_bar(v(1) + v(-1)) == v(1) + v(-1));
}

TEST_CASE("coeff_at examples") {
  CHECK(coeff_at(v(2) + LaurentPoly(2) + v(-2), 0) == 2);
  for (int k = -5; k <= 5; ++k) CHECK(coeff_at(LaurentPoly(), k) == 0);
  const LaurentPoly h = v(-1) + v(-3);
  CHECK(coeff_at(h.shifted(1), 0) == 1);
}

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly p = v(3) + v(-1);
  p -= v(3);
  REQUIRE(p.num_terms() == 1);
  CHECK(p.terms().front().exp == -1);
  p -= v(-1);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK(LaurentPoly::from_terms({1, 1, 2}, {2, -2, 0}).is_zero());
}

TEST_CASE("arithmetic is exact beyond 64 bits") {
  LaurentPoly p = LaurentPoly(Integer(1) << 40) * v(1);
  const LaurentPoly q = p * p * p;
  CHECK(q.coeff_at(3) == Integer(1) << 120);
  CHECK(q.min_exp() == 3);
}

TEST_CASE("ring axioms on random inputs, with evaluation as the oracle") {
  std::mt19937_64 rng(7);
  const std::vector<Rational> points{Rational(2), Rational(-3), Rational(1, 2), Rational(5, 7)};
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a - a == LaurentPoly());
    for (const auto& x : points) {
      CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
      CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    }
  }
}

TEST_CASE("bar is a multiplicative involution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng), b = random_poly(rng);
    CHECK(poly_bar(poly_bar(a)) == a);
    CHECK(poly_bar(a * b) == poly_bar(a) * poly_bar(b));
    CHECK(poly_bar(a).evaluate(Rational(3)) == a.evaluate(Rational(1, 3)));
  }
}

TEST_CASE("gcd_normalize examples") {
  auto [m1, n1] = gcd_normalize(int_matrix(2, 2, {3, 0, 0, 6}));
  CHECK(m1 == int_matrix(2, 2, {1, 0, 0, 2}));
  CHECK(n1 == 3);
  auto [m2, n2] = gcd_normalize(identity_int(3));
  CHECK(m2 == identity_int(3));
  CHECK(n2 == 1);
  auto [m3, n3] = gcd_normalize(int_matrix(2, 2, {2, 4, 6, 8}));
  CHECK(m3 == int_matrix(2, 2, {1, 2, 3, 4}));
  CHECK(n3 == 2);
  CHECK_THROWS_AS(gcd_normalize(IntMatrix(2, 2, Integer(0))), DegenerateInput);
}

TEST_CASE("gcd_normalize of the Gram sum of the displayed B2 matrices") {
  // t_1, t_s1, t_s2s1, t_s1s2s1, t_s2, t_s1s2, t_s2s1s2, t_w0 as printed.
  const std::vector<IntMatrix> r{
      int_matrix(2, 2, {0, 0, 0, 0}),  int_matrix(2, 2, {1, 0, 0, 0}), int_matrix(2, 2, {0, 0, -1, 0}),
      int_matrix(2, 2, {1, 0, 0, 0}),  int_matrix(2, 2, {0, 0, 0, 1}), int_matrix(2, 2, {0, -2, 0, 0}),
      int_matrix(2, 2, {0, 0, 0, 1}),  int_matrix(2, 2, {0, 0, 0, 0})};
  IntMatrix b1(2, 2, Integer(0));
  for (const auto& m : r) b1 = b1 + m.transposed() * m;
  CHECK(b1 == int_matrix(2, 2, {3, 0, 0, 6}));
  auto [b, n] = gcd_normalize(b1);
  CHECK(b == int_matrix(2, 2, {1, 0, 0, 2}));
  CHECK(n == 3);
}

TEST_CASE("gcd_normalize commutes with positive scaling") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m(3, 2);
    for (auto& x : m.data()) x = d(rng);
    if (is_zero(m)) continue;
    const Integer c = 1 + trial % 9;
    auto [base, n] = gcd_normalize(m);
    auto [scaled, cn] = gcd_normalize(c * m);
    CHECK(scaled == base);
    CHECK(cn == c * n);
    Integer g = 0;
    for (const auto& x : base.data()) g = gcd(g, x);
    CHECK(g == 1);
  }
}

namespace {

// Leibniz expansion.
Integer leibniz(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix m(n, n);
      for (auto& x : m.data()) x = d(rng);
      CHECK(determinant(m) == leibniz(m));
    }
}

TEST_CASE("positive definiteness by leading minors") {
  CHECK(is_positive_definite(int_matrix(2, 2, {1, 0, 0, 2})));
  CHECK(is_positive_definite(int_matrix(2, 2, {2, -1, -1, 2})));
  CHECK_FALSE(is_positive_definite(int_matrix(2, 2, {1, 2, 2, 1})));
  CHECK_FALSE(is_positive_definite(int_matrix(1, 1, {-1})));
}

TEST_CASE("Hermite normal form is an invariant of the lattice") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<Integer>> rows(3, std::vector<Integer>(4));
    for (auto& r : rows)
      for (auto& x : r) x = d(rng);
    // A unimodular change of generators: add multiples and swap.
    auto other = rows;
    const int k = d(rng);
    for (std::size_t j = 0; j < 4; ++j) other[0][j] += k * other[1][j];
    std::swap(other[1], other[2]);
    for (auto& x : other[2]) x = -x;
    const auto h1 = hermite_normal_form(rows);
    CHECK(h1 == hermite_normal_form(other));
    // Echelon with positive pivots and reduced entries above them.
    std::size_t last = 0;
    for (std::size_t i = 0; i < h1.size(); ++i) {
      std::size_t p = 0;
      while (h1[i][p] == 0) ++p;
      if (i) CHECK(p > last);
      last = p;
      CHECK(h1[i][p] > 0);
      for (std::size_t r = 0; r < i; ++r) {
        CHECK(h1[r][p] >= 0);
        CHECK(h1[r][p] < h1[i][p]);
      }
    }
  }
}

TEST_CASE("primality matches trial division") {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == slow(n));
  CHECK(is_prime(2305843009213693951ULL));
  CHECK_FALSE(is_prime(2305843009213693953ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("prime divisors") {
  CHECK(prime_divisors(Integer(3888)) == std::vector<Integer>{2, 3});
  CHECK(prime_divisors(Integer(-32)) == std::vector<Integer>{2});
  CHECK(prime_divisors(Integer(1)).empty());
}

TEST_CASE("JSON forms") {
  const LaurentPoly p = v(-1) + v(1);
  CHECK(to_json(p).dump() == R"({"e":[-1,1],"c":[1,1]})");
  CHECK(poly_from_json(to_json(p)) == p);
  CHECK(to_json(LaurentPoly()).dump() == R"({"e":[],"c":[]})");
  const Integer big = Integer(1) << 100;
  CHECK(to_json(big).is_string());
  CHECK(integer_from_json(to_json(big)) == big);
  CHECK(poly_from_json(to_json(LaurentPoly(big) * v(3))) == LaurentPoly(big) * v(3));
  const IntMatrix m = int_matrix(2, 3, {1, -2, 3, 0, 5, -6});
  CHECK(to_json(m).dump() == R"({"rows":2,"cols":3,"data":[1,-2,3,0,5,-6]})");
  CHECK(int_matrix_from_json(to_json(m)) == m);
  CHECK_THROWS(poly_from_json(Json::parse(R"({"e":[1],"c":[]})")));
}
