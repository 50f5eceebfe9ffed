#include "doctest.h"
#include "support.hpp"

using namespace heckecell;
using testing::v;
using testing::ws;

namespace {

const std::vector<std::pair<std::string, std::string>> kTypes{
    {"A1", ""}, {"A2", ""}, {"A3", ""}, {"B2", ""}, {"B2", "2,1"}, {"B3", ""}, {"B3", "2,1,1"},
    {"G2", ""}, {"G2", "3,1"}};

JElement t(const Workspace& w, std::initializer_list<int> word) {
  return j_basis(w.group().size(), w.group().from_word(word));
}

JElement operator+(JElement a, const JElement& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

JAElement lift(const JElement& x) {
  JAElement out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = LaurentPoly(x[i]);
  return out;
}

}  // namespace

TEST_CASE("A1: gamma and the identity") {
  auto& w = ws("A1");
  const Elem s = w.group().generator(0);
  CHECK(w.gamma().gamma(s, s, s) == 1);
  CHECK(j_identity(w.adata()) == t(w, {}) + t(w, {0}));
  CHECK(j_multiply(w.gamma(), t(w, {0}), t(w, {0})) == t(w, {0}));
  CHECK(j_multiply(w.gamma(), t(w, {}), t(w, {0})) == JElement(2, 0));
}

TEST_CASE("B2 equal parameters: the displayed relations in J") {
  auto& w = ws("B2");
  const auto& gt = w.gamma();
  auto mul = [&](const JElement& a, const JElement& b) { return j_multiply(gt, a, b); };
  const JElement zero(w.group().size(), 0);
  const auto one = t(w, {}), s1 = t(w, {0}), s2 = t(w, {1}), s12 = t(w, {0, 1}), s21 = t(w, {1, 0}),
             s121 = t(w, {0, 1, 0}), s212 = t(w, {1, 0, 1}), w0 = t(w, {0, 1, 0, 1});
  CHECK(mul(one, one) == one);
  CHECK(mul(w0, w0) == w0);
  for (std::size_t x = 0; x < w.group().size(); ++x) {
    const auto tx = j_basis(w.group().size(), x);
    if (tx != one) CHECK(mul(one, tx) == zero);
    if (tx != w0) CHECK(mul(w0, tx) == zero);
  }
  CHECK(mul(s1, s1) == s1);
  CHECK(mul(s1, s12) == s12);
  CHECK(mul(s1, s121) == s121);
  CHECK(mul(s2, s2) == s2);
  CHECK(mul(s2, s21) == s21);
  CHECK(mul(s2, s212) == s212);
  CHECK(mul(s12, s21) == s1 + s121);
  CHECK(mul(s12, s212) == s12);
  CHECK(mul(s21, s12) == s2 + s212);
  CHECK(mul(s21, s121) == s21);
  CHECK(mul(s121, s121) == s1);
  CHECK(mul(s212, s212) == s2);
  CHECK(j_identity(w.adata()) == one + s1 + s2 + w0);
}

TEST_CASE("B2: the displayed 2x2 matrices define a representation of J") {
  auto& w = ws("B2");
  const auto& g = w.group();
  std::map<Elem, IntMatrix> rho{
      {g.from_word({}), testing::int_matrix(2, 2, {0, 0, 0, 0})},
      {g.from_word({0}), testing::int_matrix(2, 2, {1, 0, 0, 0})},
      {g.from_word({1, 0}), testing::int_matrix(2, 2, {0, 0, -1, 0})},
      {g.from_word({0, 1, 0}), testing::int_matrix(2, 2, {1, 0, 0, 0})},
      {g.from_word({1}), testing::int_matrix(2, 2, {0, 0, 0, 1})},
      {g.from_word({0, 1}), testing::int_matrix(2, 2, {0, -2, 0, 0})},
      {g.from_word({1, 0, 1}), testing::int_matrix(2, 2, {0, 0, 0, 1})},
      {g.longest(), testing::int_matrix(2, 2, {0, 0, 0, 0})}};
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y) {
      IntMatrix sum(2, 2, Integer(0));
      for (const auto& term : w.gamma().product(x, y)) sum = sum + term.g * rho.at(term.z);
      CHECK(rho.at(x) * rho.at(y) == sum);
    }
}

TEST_CASE("gamma is the constant term of v^a(z) h_{x,y,z}") {
  for (const auto& [type, wts] : kTypes) {
    auto& w = ws(type, wts);
    const auto& g = w.group();
    const auto& gt = w.gamma();
    for (std::size_t x = 0; x < g.size(); ++x)
      for (std::size_t y = 0; y < g.size(); ++y) {
        JElement expect(g.size(), 0);
        for (const auto& term : w.h().row(x, y)) expect[term.z] = term.h.coeff_at(-w.adata().a[term.z]);
        CHECK(j_multiply(gt, j_basis(g.size(), x), j_basis(g.size(), y)) == expect);
        for (std::size_t z = 0; z < g.size(); ++z) CHECK(gt.gamma(x, y, g.inverse(z)) == expect[z]);
      }
  }
}

TEST_CASE("gamma symmetries and cell support") {
  for (const auto& [type, wts] : kTypes) {
    CAPTURE(type);
    CAPTURE(wts);
    auto& w = ws(type, wts);
    const auto& g = w.group();
    const auto& gt = w.gamma();
    const auto& cp = w.cells();
    for (std::size_t x = 0; x < g.size(); ++x)
      for (std::size_t y = 0; y < g.size(); ++y)
        for (std::size_t z = 0; z < g.size(); ++z) {
          const Integer c = gt.gamma(x, y, z);
          if (c != gt.gamma(y, z, x)) FAIL("cyclic symmetry");
          if (c != gt.gamma(g.inverse(y), g.inverse(x), g.inverse(z))) FAIL("inverse symmetry");
          if (c != 0 && !(cp.left_equiv(x, g.inverse(y)) && cp.left_equiv(y, g.inverse(z)) &&
                          cp.left_equiv(z, g.inverse(x))))
            FAIL("cell support");
        }
  }
}

TEST_CASE("J is associative with identity 1_J") {
  for (const auto& [type, wts] : kTypes) {
    auto& w = ws(type, wts);
    const std::size_t n = w.group().size();
    const auto& gt = w.gamma();
    const auto one = j_identity(w.adata());
    CHECK(j_multiply(gt, one, one) == one);
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(j_multiply(gt, one, j_basis(n, x)) == j_basis(n, x));
      CHECK(j_multiply(gt, j_basis(n, x), one) == j_basis(n, x));
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const auto xy = j_multiply(gt, j_basis(n, x), j_basis(n, y));
        for (std::size_t z = 0; z < n; ++z)
          if (j_multiply(gt, xy, j_basis(n, z)) != j_multiply(gt, j_basis(n, x), j_multiply(gt, j_basis(n, y), j_basis(n, z))))
            FAIL("J not associative");
      }
  }
}

TEST_CASE("phi is multiplicative on c_s^+ c_y^+") {
  for (const auto& [type, wts] : kTypes) {
    CAPTURE(type);
    CAPTURE(wts);
    auto& w = ws(type, wts);
    const auto& H = w.hecke();
    const auto& g = w.group();
    const auto& kl = w.kl().kl;
    const auto& phi = w.phi();
    CHECK(phi.of_cdagger(g.identity()) == lift(j_identity(w.adata())));
    for (int s = 0; s < g.rank(); ++s) {
      const auto cs = c_basis_element(H, kl, g.generator(s), true);
      for (std::size_t y = 0; y < g.size(); ++y) {
        // Product computed on the T-basis, then rewritten on the c-dagger basis.
        const auto prod = t_to_c(H, kl, H.t_multiply(cs, c_basis_element(H, kl, y, true)), true);
        CHECK(phi.apply(prod) == ja_multiply(w.gamma(), phi.of_cdagger(g.generator(s)), phi.of_cdagger(y)));
      }
    }
  }
}

TEST_CASE("phi coefficients follow the displayed formula") {
  auto& w = ws("G2", "3,1");
  const auto& g = w.group();
  const auto& ad = w.adata();
  for (std::size_t x = 0; x < g.size(); ++x) {
    JAElement expect(g.size());
    for (Elem d : ad.dset)
      for (const auto& term : w.h().row(x, d))
        if (ad.a[term.z] == ad.a[d]) expect[term.z] += term.h * LaurentPoly(ad.nhat[term.z]);
    CHECK(w.phi().of_cdagger(x) == expect);
  }
}

TEST_CASE("phi_1 is invertible and unital") {
  for (const char* type : {"A1", "A2", "A3", "B2", "B3", "G2"}) {
    CAPTURE(type);
    auto& w = ws(type);
    const RationalField q;
    const auto m = phi_one(t_basis_in_cdagger(w.hecke(), w.h()), w.phi());
    CHECK(determinant(q, m) != 0);
    const auto one = j_identity(w.adata());
    for (std::size_t i = 0; i < m.rows(); ++i) CHECK(m(i, w.group().identity()) == Rational(one[i]));
  }
  auto& a1 = ws("A1");
  const auto m = phi_one(t_basis_in_cdagger(a1.hecke(), a1.h()), a1.phi());
  // phi_1(1) = t_1 + t_s and phi_1(s) = t_1 - t_s.
  CHECK(m(0, 0) == 1);
  CHECK(m(1, 0) == 1);
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 1) == -1);
}

TEST_CASE("verify_jring") {
  for (const auto& [type, wts] : kTypes) {
    CAPTURE(type);
    CAPTURE(wts);
    auto& w = ws(type, wts);
    const Report r = verify_jring(w.hecke(), w.h(), w.adata(), w.cells(), w.gamma(), w.phi(), 7);
    CHECK_MESSAGE(r.all_passed(), testing::failures(r));
  }
}
