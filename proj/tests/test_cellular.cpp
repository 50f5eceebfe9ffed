#include "doctest.h"
#include "support.hpp"

#include "heckecell/golden.hpp"

#include <algorithm>

using namespace heckecell;
using testing::int_matrix;
using testing::v;
using testing::ws;

namespace {

const std::vector<std::pair<std::string, std::string>> kTypes{
    {"A1", ""}, {"A2", ""}, {"A3", ""}, {"B2", ""}, {"B2", "2,1"}, {"B2", "1,2"}, {"B3", ""}, {"B3", "2,1,1"},
    {"G2", ""}, {"G2", "3,1"}, {"D4", ""}};

CellularContext context(Workspace& w) {
  return {w.hecke(), w.kl().kl, w.h(), w.adata(), w.gamma(), w.phi(), w.reps()};
}

// c-dagger coordinates from (word, coefficient) pairs.
std::vector<Integer> cdag(const CoxeterGroup& g, std::initializer_list<std::pair<Word, int>> terms) {
  std::vector<Integer> out(g.size(), 0);
  for (const auto& [word, c] : terms) out[g.from_word(word)] = c;
  return out;
}

HeckeElement to_hecke(const std::vector<Integer>& coords) {
  HeckeElement x(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) x[i] = LaurentPoly(coords[i]);
  return x;
}

}  // namespace

TEST_CASE("type A: the cellular basis is the c-dagger basis") {
  for (int n = 1; n <= 4; ++n) {
    auto& w = ws("A" + std::to_string(n));
    const auto signs = cdagger_signs(w.datum());
    REQUIRE(signs.has_value());
    for (int d : *signs) CHECK(d == 1);
    const Integer det = determinant(transition_matrix(w.datum()));
    CHECK((det == 1 || det == -1));
  }
}

TEST_CASE("B2: the displayed matrices reproduce the displayed table") {
  auto& w = ws("B2");
  const auto& g = w.group();
  std::vector<IntMatrix> rho(g.size(), IntMatrix(2, 2, Integer(0)));
  rho[g.from_word({0})] = int_matrix(2, 2, {1, 0, 0, 0});
  rho[g.from_word({1, 0})] = int_matrix(2, 2, {0, 0, -1, 0});
  rho[g.from_word({0, 1, 0})] = int_matrix(2, 2, {1, 0, 0, 0});
  rho[g.from_word({1})] = int_matrix(2, 2, {0, 0, 0, 1});
  rho[g.from_word({0, 1})] = int_matrix(2, 2, {0, -2, 0, 0});
  rho[g.from_word({1, 0, 1})] = int_matrix(2, 2, {0, 0, 0, 1});
  const auto c = cellular_elements(g, w.adata(), rho, int_matrix(2, 2, {1, 0, 0, 2}));
  REQUIRE(c.size() == 4);
  CHECK(c[0] == cdag(g, {{{0}, 1}, {{0, 1, 0}, 1}}));
  CHECK(c[1] == cdag(g, {{{0, 1}, -2}}));
  CHECK(c[2] == cdag(g, {{{1, 0}, -2}}));
  CHECK(c[3] == cdag(g, {{{1}, 2}, {{1, 0, 1}, 2}}));
}

TEST_CASE("B2 equal parameters: computed datum against the displayed table") {
  auto& w = ws("B2");
  const auto& g = w.group();
  const auto& datum = w.datum();
  const std::vector<std::vector<Integer>> one_dim{cdag(g, {{{}, 1}}), cdag(g, {{{0, 1, 0, 1}, 1}}),
                                                  cdag(g, {{{1}, 1}, {{1, 0, 1}, -1}}),
                                                  cdag(g, {{{0}, 1}, {{0, 1, 0}, -1}})};
  std::vector<std::vector<Integer>> got_one;
  std::vector<std::vector<Integer>> r_block;
  for (std::size_t l = 0; l < datum.lambdas.size(); ++l) {
    if (datum.lambdas[l].dim == 1) got_one.push_back(datum.element(l, 0, 0));
    else
      for (const auto& c : datum.C[l]) r_block.push_back(c);
  }
  CHECK(got_one.size() == 4);
  for (const auto& e : one_dim) CHECK(std::find(got_one.begin(), got_one.end(), e) != got_one.end());
  const std::vector<std::vector<Integer>> table_r{cdag(g, {{{0}, 1}, {{0, 1, 0}, 1}}), cdag(g, {{{0, 1}, -2}}),
                                                  cdag(g, {{{1, 0}, -2}}), cdag(g, {{{1}, 2}, {{1, 0, 1}, 2}})};
  CHECK(hermite_normal_form(r_block) == hermite_normal_form(table_r));
  const Integer det = determinant(transition_matrix(datum));
  CHECK(abs(det) == 32);
  CHECK(prime_divisors(det) == std::vector<Integer>{2});
  CHECK_FALSE(cdagger_signs(datum).has_value());
}

TEST_CASE("the star involution swaps s and t") {
  for (const auto& [type, wts] : kTypes) {
    auto& w = ws(type, wts);
    const auto& g = w.group();
    const auto& datum = w.datum();
    for (std::size_t l = 0; l < datum.lambdas.size(); ++l)
      for (std::size_t s = 0; s < datum.lambdas[l].dim; ++s)
        for (std::size_t t = 0; t < datum.lambdas[l].dim; ++t) {
          const auto& c = datum.element(l, s, t);
          std::vector<Integer> starred(g.size(), 0);
          for (std::size_t x = 0; x < g.size(); ++x) starred[g.inverse(x)] = c[x];
          CHECK(starred == datum.element(l, t, s));
          for (std::size_t x = 0; x < g.size(); ++x)
            if (c[x] != 0) CHECK(w.adata().a[x] == datum.lambdas[l].a);
        }
  }
}

TEST_CASE("r-matrices: unit, sign and relations") {
  for (const auto& [type, wts] : kTypes) {
    CAPTURE(type);
    CAPTURE(wts);
    auto& w = ws(type, wts);
    const auto& g = w.group();
    const auto& H = w.hecke();
    for (const auto& rep : w.reps()) {
      CHECK(r_coefficients(w.phi().of_cdagger(g.identity()), rep.rho) == identity_poly(rep.dim));
      const auto act = generator_actions(H, w.phi(), w.adata(), rep.rho);
      for (int s = 0; s < g.rank(); ++s) {
        const int L = H.L(s);
        if (rep.a == 0) CHECK(act[s] == PolyMatrix(1, 1, v(L)));
        if (rep.a == weight(g, w.weights(), g.longest())) CHECK(act[s] == PolyMatrix(1, 1, LaurentPoly() - v(-L)));
        CHECK(act[s] * act[s] == identity_poly(rep.dim) + v_difference(L) * act[s]);
        for (int u = s + 1; u < g.rank(); ++u) {
          PolyMatrix lhs = identity_poly(rep.dim), rhs = identity_poly(rep.dim);
          for (int k = 0; k < g.coxeter_m(s, u); ++k) {
            lhs = lhs * act[k % 2 ? u : s];
            rhs = rhs * act[k % 2 ? s : u];
          }
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("B2: the 2-dimensional cell module has the expected character") {
  auto& w = ws("B2");
  for (const auto& rep : w.reps()) {
    if (rep.dim != 2) continue;
    for (const auto& m : generator_actions(w.hecke(), w.phi(), w.adata(), rep.rho))
      CHECK(m(0, 0) + m(1, 1) == v(1) - v(-1));
  }
}

TEST_CASE("J action on the c-dagger basis") {
  auto& w = ws("B2");
  const auto& g = w.group();
  const Elem s1 = g.generator(0);
  const auto r = jaction_on_c(w.gamma(), w.adata(), s1, s1);
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == s1);
  CHECK(r[0].second == 1);
  CHECK(jaction_on_c(w.gamma(), w.adata(), g.longest(), s1).empty());
  CHECK(jaction_on_c(w.gamma(), w.adata(), s1, g.generator(1)).empty());
}

TEST_CASE("(C3) recomputed on the T-basis") {
  for (const auto& [type, wts] : std::vector<std::pair<std::string, std::string>>{
           {"A3", ""}, {"B2", ""}, {"B2", "2,1"}, {"G2", ""}, {"G2", "3,1"}, {"B3", ""}, {"B3", "2,1,1"}}) {
    CAPTURE(type);
    CAPTURE(wts);
    auto& w = ws(type, wts);
    const auto& H = w.hecke();
    const auto& g = w.group();
    const auto& kl = w.kl().kl;
    const auto& datum = w.datum();
    for (std::size_t l = 0; l < datum.lambdas.size(); ++l) {
      const std::size_t d = datum.lambdas[l].dim;
      const auto act = generator_actions(H, w.phi(), w.adata(), w.reps()[datum.lambdas[l].label].rho);
      for (int s = 0; s < g.rank(); ++s)
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t t = 0; t < d; ++t) {
            const auto lhs = t_to_c(H, kl, H.t_multiply(H.t(g.generator(s)), c_to_t(H, kl, to_hecke(datum.element(l, a, t)), true)), true);
            HeckeElement rem = lhs;
            for (std::size_t b = 0; b < d; ++b) rem.add_scaled(to_hecke(datum.element(l, b, t)), LaurentPoly() - act[s](b, a));
            for (std::size_t y = 0; y < g.size(); ++y)
              if (!rem[y].is_zero() && w.adata().a[y] <= datum.lambdas[l].a) FAIL("remainder outside H^{>=a+1}");
          }
    }
  }
}

TEST_CASE("one-dimensional lambda: sum of (-1)^l(w) eta(w) c_w^+ over a + m(w) = 0") {
  for (const auto& [type, wts] : kTypes) {
    CAPTURE(type);
    CAPTURE(wts);
    auto& w = ws(type, wts);
    const auto& g = w.group();
    const auto& datum = w.datum();
    for (std::size_t l = 0; l < datum.lambdas.size(); ++l) {
      if (datum.lambdas[l].dim != 1) continue;
      std::vector<int> eta_s, m_s;
      for (const auto& m : generator_actions(w.hecke(), w.phi(), w.adata(), w.reps()[datum.lambdas[l].label].rho)) {
        const auto& p = m(0, 0);
        REQUIRE(p.num_terms() == 1);
        m_s.push_back(p.min_exp());
        eta_s.push_back(p.terms().front().coeff > 0 ? 1 : -1);
      }
      std::vector<Integer> expect(g.size(), 0);
      for (std::size_t x = 0; x < g.size(); ++x) {
        int eta = 1, m = 0;
        for (int s : g.word(x)) {
          eta *= eta_s[s];
          m += m_s[s];
        }
        if (datum.lambdas[l].a + m == 0) expect[x] = (g.length(x) % 2 ? -1 : 1) * eta;
      }
      CHECK(datum.element(l, 0, 0) == expect);
    }
  }
}

TEST_CASE("c_y^+ is recovered from the cellular basis") {
  for (const char* type : {"B2", "G2", "B3"}) {
    CAPTURE(type);
    auto& w = ws(type);
    const auto& g = w.group();
    const auto& datum = w.datum();
    const RationalField q;
    std::vector<FMatrix<RationalField>> binv;
    for (const auto& rep : w.reps()) {
      auto b = zero_matrix(q, rep.dim, rep.dim);
      for (std::size_t i = 0; i < rep.dim; ++i)
        for (std::size_t j = 0; j < rep.dim; ++j) b(i, j) = Rational(rep.B(i, j));
      binv.push_back(*inverse(q, b));
    }
    for (std::size_t y = 0; y < g.size(); ++y) {
      std::vector<Rational> sum(g.size(), Rational(0));
      for (std::size_t l = 0; l < datum.lambdas.size(); ++l) {
        const auto& rep = w.reps()[datum.lambdas[l].label];
        const std::size_t d = rep.dim;
        for (std::size_t s = 0; s < d; ++s)
          for (std::size_t t = 0; t < d; ++t) {
            Rational coeff = 0;
            for (std::size_t u = 0; u < d; ++u) coeff += Rational(rep.rho[y](s, u)) * binv[l](u, t);
            coeff /= Rational(rep.f);
            const auto& c = datum.element(l, s, t);
            for (std::size_t x = 0; x < g.size(); ++x) sum[x] += coeff * Rational(c[x]);
          }
      }
      std::vector<Rational> expect(g.size(), Rational(0));
      expect[y] = w.adata().nhat[y] * w.adata().nhat[g.inverse(y)];
      CHECK(sum == expect);
    }
  }
}

TEST_CASE("B2 weights 2,1: all c-dagger up to one sign") {
  auto& w = ws("B2", "2,1");
  const auto& g = w.group();
  const auto signs = cdagger_signs(w.datum());
  REQUIRE(signs.has_value());
  for (std::size_t x = 0; x < g.size(); ++x) CHECK((*signs)[x] == (g.format(x) == "s1s2s1" ? -1 : 1));
  CHECK(w.adata().nz[g.from_word({0, 1, 0})] == -1);
  CHECK(determinant(transition_matrix(w.datum())) == -1);
  // Swapping the weights moves the sign to s2s1s2.
  auto& u = ws("B2", "1,2");
  const auto other = cdagger_signs(u.datum());
  REQUIRE(other.has_value());
  for (std::size_t x = 0; x < g.size(); ++x) CHECK((*other)[x] == (g.format(x) == "s2s1s2" ? -1 : 1));
}

TEST_CASE("verify_axioms") {
  for (const auto& [type, wts] : kTypes) {
    CAPTURE(type);
    CAPTURE(wts);
    auto& w = ws(type, wts);
    const Report r = verify_axioms(context(w), w.datum());
    CHECK_MESSAGE(r.all_passed(), testing::failures(r));
    const Integer det = determinant(transition_matrix(w.datum()));
    CHECK(det != 0);
    const auto bad = bad_primes(w.reps());
    for (const auto& p : prime_divisors(det)) CHECK(std::find(bad.begin(), bad.end(), p) != bad.end());
  }
}

TEST_CASE("golden B2 comparison") {
  auto& w = ws("B2");
  const auto cmp = compare_golden_b2(w.group(), w.weights(), w.cells(), w.adata(), w.gamma(), w.reps(), w.datum());
  CHECK_MESSAGE(cmp.report.all_passed(), testing::failures(cmp.report));
  for (const auto& row : cmp.rows) CHECK_MESSAGE(row.match, row.item);
  auto& a2 = ws("A2");
  CHECK_THROWS_AS(compare_golden_b2(a2.group(), a2.weights(), a2.cells(), a2.adata(), a2.gamma(), a2.reps(), a2.datum()),
                  std::invalid_argument);
}
