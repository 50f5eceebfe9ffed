#include "doctest.h"
#include "support.hpp"

using namespace heckecell;
using testing::v;
using testing::ws;

namespace {

// p_{y,w} from bar(c_w) = c_w alone: writing bar(T_z) = sum_y a_{y,z} T_y,
// p_{y,w} - bar(p_{y,w}) = sum_{z > y} a_{y,z} bar(p_{z,w}), and p_{y,w} is
// the strictly negative part of the right-hand side.
std::vector<std::vector<LaurentPoly>> kl_by_bar_invariance(const HeckeAlgebra& H) {
  const std::size_t n = H.size();
  std::vector<HeckeElement> bars;
  for (std::size_t z = 0; z < n; ++z) bars.push_back(H.bar(H.t(z)));
  std::vector<std::vector<LaurentPoly>> p(n, std::vector<LaurentPoly>(n));
  for (std::size_t w = 0; w < n; ++w) {
    p[w][w] = 1;
    for (std::size_t y = w; y-- > 0;) {
      LaurentPoly rhs;
      for (std::size_t z = y + 1; z <= w; ++z)
        if (!p[w][z].is_zero()) rhs += bars[z][y] * p[w][z].bar();
      LaurentPoly neg;
      for (const auto& t : rhs.terms())
        if (t.exp < 0) neg += LaurentPoly::monomial(t.exp, t.coeff);
      p[w][y] = neg;
    }
  }
  return p;
}

const std::vector<std::pair<std::string, std::string>> kTypes{
    {"A1", ""}, {"A2", ""}, {"A3", ""}, {"B2", ""}, {"B2", "2,1"}, {"B2", "1,2"}, {"B3", ""},
    {"B3", "2,1,1"}, {"G2", ""}, {"G2", "3,1"}, {"G2", "1,2"}};

}  // namespace

TEST_CASE("T-basis multiplication rule") {
  auto& w = ws("B2", "2,1");
  const auto& H = w.hecke();
  const auto& g = w.group();
  for (int s = 0; s < g.rank(); ++s) {
    const auto ts = H.t(g.generator(s));
    HeckeElement expect = H.t(g.identity());
    expect[g.generator(s)] = v_difference(H.L(s));
    CHECK(H.t_multiply(ts, ts) == expect);
    for (std::size_t x = 0; x < g.size(); ++x) {
      const Elem sx = g.left_mul(s, x);
      if (g.length(sx) > g.length(x)) CHECK(H.t_multiply(ts, H.t(x)) == H.t(sx));
      CHECK(H.t_multiply(H.t(g.identity()), H.t(x)) == H.t(x));
    }
  }
  CHECK(H.L(0) == 2);
  CHECK(H.qdiff(1) == v(1) - v(-1));
}

TEST_CASE("T-basis product is associative") {
  std::mt19937_64 rng(2);
  auto& w = ws("G2", "3,1");
  const auto& H = w.hecke();
  std::uniform_int_distribution<std::size_t> pick(0, H.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    HeckeElement a(H.size()), b(H.size()), c(H.size());
    for (int k = 0; k < 3; ++k) {
      a[pick(rng)] += testing::random_poly(rng, 2, 2);
      b[pick(rng)] += testing::random_poly(rng, 2, 2);
      c[pick(rng)] += testing::random_poly(rng, 2, 2);
    }
    CHECK(H.t_multiply(H.t_multiply(a, b), c) == H.t_multiply(a, H.t_multiply(b, c)));
  }
}

TEST_CASE("KL polynomials agree with the bar-invariance oracle") {
  for (const auto& [t, wts] : kTypes) {
    CAPTURE(t);
    CAPTURE(wts);
    auto& w = ws(t, wts);
    const auto oracle = kl_by_bar_invariance(w.hecke());
    const auto& kl = w.kl().kl;
    for (std::size_t x = 0; x < w.group().size(); ++x)
      for (std::size_t y = 0; y < w.group().size(); ++y) CHECK(kl.p(y, x) == oracle[x][y]);
  }
}

TEST_CASE("c_s = T_s + v^-L(s) T_1") {
  for (const auto& [t, wts] : kTypes) {
    auto& w = ws(t, wts);
    const auto& g = w.group();
    for (int s = 0; s < g.rank(); ++s) {
      HeckeElement expect = w.hecke().t(g.generator(s));
      expect[g.identity()] = v(-w.hecke().L(s));
      CHECK(c_basis_element(w.hecke(), w.kl().kl, g.generator(s), false) == expect);
    }
  }
}

TEST_CASE("A2: c_w0 = sum_w v^(l(w)-3) T_w") {
  auto& w = ws("A2");
  const auto& g = w.group();
  HeckeElement expect(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) expect[x] = v(g.length(x) - 3);
  CHECK(w.hecke().bar(expect) == expect);
  CHECK(c_basis_element(w.hecke(), w.kl().kl, g.longest(), false) == expect);
}

TEST_CASE("B2 weights 2,1: p_{1,s1s2s1} = v^-5 - v^-3") {
  auto& w = ws("B2", "2,1");
  const auto& g = w.group();
  CHECK(w.kl().kl.p(g.identity(), g.from_word({0, 1, 0})) == v(-5) - v(-3));
  CHECK(w.kl().kl.p(g.identity(), g.from_word({1, 0, 1})) == v(-2) + v(-4));
  CHECK(w.kl().kl.p(g.identity(), g.longest()) == v(-6));
}

TEST_CASE("KL table invariants") {
  for (const auto& [t, wts] : kTypes) {
    auto& w = ws(t, wts);
    const auto& g = w.group();
    const auto& kl = w.kl().kl;
    for (std::size_t x = 0; x < g.size(); ++x) {
      CHECK(kl.p(x, x) == LaurentPoly(1));
      for (std::size_t y = 0; y < g.size(); ++y) {
        if (y == x || kl.p(y, x).is_zero()) continue;
        CHECK(g.bruhat_leq(y, x));
        CHECK(kl.p(y, x).in_strictly_negative_part());
      }
    }
  }
}

TEST_CASE("c-dagger basis") {
  for (const auto& [t, wts] : kTypes) {
    auto& w = ws(t, wts);
    const auto& H = w.hecke();
    const auto& g = w.group();
    const auto& kl = w.kl().kl;
    CHECK(c_basis_element(H, kl, g.identity(), true) == H.t(g.identity()));
    for (int s = 0; s < g.rank(); ++s) {
      const auto cs = c_basis_element(H, kl, g.generator(s), true);
      CHECK(cs == H.dagger(c_basis_element(H, kl, g.generator(s), false)));
      // dagger fixes scalars, so c_s^+ squares like c_s.
      CHECK(cs == v(H.L(s)) * H.t(g.identity()) - H.t(g.generator(s)));
      CHECK(H.t_multiply(cs, cs) == (v(H.L(s)) + v(-H.L(s))) * cs);
    }
    for (std::size_t x = 0; x < g.size(); ++x)
      CHECK(H.star(c_basis_element(H, kl, x, true)) == c_basis_element(H, kl, g.inverse(x), true));
  }
}

TEST_CASE("star is an anti-involution and dagger an involution; they commute") {
  std::mt19937_64 rng(8);
  auto& w = ws("B2");
  const auto& H = w.hecke();
  const auto& g = w.group();
  CHECK(H.star(H.t(g.from_word({0, 1}))) == H.t(g.from_word({1, 0})));
  for (int s = 0; s < g.rank(); ++s) CHECK(H.star(H.t(g.generator(s))) == H.t(g.generator(s)));
  std::uniform_int_distribution<std::size_t> pick(0, H.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    HeckeElement a(H.size()), b(H.size());
    for (int k = 0; k < 3; ++k) {
      a[pick(rng)] += testing::random_poly(rng, 2, 2);
      b[pick(rng)] += testing::random_poly(rng, 2, 2);
    }
    CHECK(H.star(H.t_multiply(a, b)) == H.t_multiply(H.star(b), H.star(a)));
    CHECK(H.star(H.star(a)) == a);
    CHECK(H.dagger(H.t_multiply(a, b)) == H.t_multiply(H.dagger(a), H.dagger(b)));
    CHECK(H.dagger(H.dagger(a)) == a);
    CHECK(H.dagger(H.star(a)) == H.star(H.dagger(a)));
    CHECK(H.bar(H.bar(a)) == a);
  }
}

TEST_CASE("structure constants") {
  for (const auto& [t, wts] : kTypes) {
    CAPTURE(t);
    CAPTURE(wts);
    auto& w = ws(t, wts);
    const auto& g = w.group();
    const auto& h = w.h();
    for (int s = 0; s < g.rank(); ++s) {
      const Elem gs = g.generator(s);
      CHECK(h.get(gs, gs, gs) == v(w.hecke().L(s)) + v(-w.hecke().L(s)));
    }
    for (std::size_t y = 0; y < g.size(); ++y)
      for (std::size_t z = 0; z < g.size(); ++z) CHECK(h.get(g.identity(), y, z) == LaurentPoly(y == z ? 1 : 0));
    const Report r = verify_hecke(w.hecke(), w.kl(), h);
    CHECK_MESSAGE(r.all_passed(), testing::failures(r));
  }
}

TEST_CASE("c-basis product is associative") {
  for (const char* t : {"A3", "B2", "G2"}) {
    auto& w = ws(t);
    const auto& h = w.h();
    const std::size_t n = w.group().size();
    auto basis = [&](std::size_t x) { return HeckeElement::basis(n, x); };
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (c_multiply(h, c_multiply(h, basis(x), basis(y)), basis(z)) !=
              c_multiply(h, basis(x), c_multiply(h, basis(y), basis(z))))
            FAIL("c-basis product not associative");
  }
  std::mt19937_64 rng(3);
  auto& w = ws("B3");
  const std::size_t n = w.group().size();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int i = 0; i < 300; ++i) {
    const auto x = HeckeElement::basis(n, pick(rng)), y = HeckeElement::basis(n, pick(rng)),
               z = HeckeElement::basis(n, pick(rng));
    CHECK(c_multiply(w.h(), c_multiply(w.h(), x, y), z) == c_multiply(w.h(), x, c_multiply(w.h(), y, z)));
  }
}

TEST_CASE("h-table from the left rule matches the T-basis route and is stable under jobs") {
  auto& w = ws("B3", "2,1,1");
  const auto kd = compute_kl(w.hecke());
  CHECK(h_constants(w.hecke(), kd, 3).rows == w.h().rows);
  CHECK(left_rule_from_h(w.hecke(), w.h()) == kd.left_c);
  const auto& g = w.group();
  for (std::size_t x = 0; x < g.size(); x += 5)
    for (std::size_t y = 0; y < g.size(); y += 7) {
      HeckeElement expect(g.size());
      for (const auto& t : w.h().row(x, y)) expect.add_scaled(c_basis_element(w.hecke(), kd.kl, t.z, false), t.h);
      CHECK(w.hecke().t_multiply(c_basis_element(w.hecke(), kd.kl, x, false),
                                 c_basis_element(w.hecke(), kd.kl, y, false)) == expect);
    }
}

TEST_CASE("c to T and back") {
  auto& w = ws("G2", "3,1");
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, w.group().size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    HeckeElement x(w.group().size());
    for (int k = 0; k < 4; ++k) x[pick(rng)] += testing::random_poly(rng, 2, 2);
    for (bool dag : {false, true})
      CHECK(t_to_c(w.hecke(), w.kl().kl, c_to_t(w.hecke(), w.kl().kl, x, dag), dag) == x);
  }
}
