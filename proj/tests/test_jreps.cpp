#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <set>

using namespace heckecell;
using testing::int_matrix;
using testing::ws;

namespace {

const std::vector<std::pair<std::string, std::string>> kTypes{
    {"A1", ""}, {"A2", ""}, {"A3", ""}, {"A4", ""}, {"B2", ""}, {"B2", "2,1"}, {"B3", ""}, {"B3", "2,1,1"},
    {"B3", "1,2,2"}, {"G2", ""}, {"G2", "3,1"}, {"D4", ""}};

std::vector<std::size_t> dims(const std::vector<JIrrep>& reps) {
  std::vector<std::size_t> d;
  for (const auto& r : reps) d.push_back(r.dim);
  std::sort(d.begin(), d.end());
  return d;
}

// Conjugacy classes by orbit enumeration.
std::size_t conjugacy_classes(const CoxeterGroup& g) {
  std::vector<bool> seen(g.size(), false);
  std::size_t count = 0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (seen[x]) continue;
    ++count;
    for (std::size_t y = 0; y < g.size(); ++y) seen[g.multiply(g.multiply(y, x), g.inverse(y))] = true;
  }
  return count;
}

}  // namespace

TEST_CASE("B2 equal parameters: five classes, invariants and the 2-dimensional rep") {
  auto& w = ws("B2");
  const auto& g = w.group();
  const auto& reps = w.reps();
  CHECK(dims(reps) == std::vector<std::size_t>{1, 1, 1, 1, 2});
  std::multiset<int> as;
  for (const auto& r : reps) as.insert(r.a);
  CHECK(as == std::multiset<int>{0, 1, 1, 1, 4});
  const auto& r = *std::find_if(reps.begin(), reps.end(), [](const JIrrep& x) { return x.dim == 2; });
  CHECK(r.f == 2);
  CHECK(r.a == 1);
  for (std::size_t x = 0; x < g.size(); ++x) {
    const std::string name = g.format(x);
    const bool one = name == "s1" || name == "s2" || name == "s1s2s1" || name == "s2s1s2";
    CHECK(r.character[x] == (one ? 1 : 0));
  }
  CHECK(r.B == int_matrix(2, 2, {1, 0, 0, 2}));
  for (const auto& x : reps) {
    if (x.dim == 1) {
      CHECK(x.f == (x.a == 1 ? 2 : 1));
      CHECK(x.B == int_matrix(1, 1, {1}));
    }
  }
}

TEST_CASE("B2: f of the displayed matrices and their Gram sum") {
  const std::vector<IntMatrix> rho{int_matrix(2, 2, {0, 0, 0, 0}), int_matrix(2, 2, {1, 0, 0, 0}),
                                   int_matrix(2, 2, {0, 0, -1, 0}), int_matrix(2, 2, {1, 0, 0, 0}),
                                   int_matrix(2, 2, {0, 0, 0, 1}), int_matrix(2, 2, {0, -2, 0, 0}),
                                   int_matrix(2, 2, {0, 0, 0, 1}), int_matrix(2, 2, {0, 0, 0, 0})};
  // Same order as the displayed list: 1, s1, s2s1, s1s2s1, s2, s1s2, s2s1s2, w0.
  auto& w = ws("B2");
  const auto& g = w.group();
  const std::vector<Word> words{{}, {0}, {1, 0}, {0, 1, 0}, {1}, {0, 1}, {1, 0, 1}, {0, 1, 0, 1}};
  std::vector<IntMatrix> by_elem(g.size());
  for (std::size_t i = 0; i < words.size(); ++i) by_elem[g.from_word(words[i])] = rho[i];
  const auto [a, f] = invariants_af(g, w.adata(), by_elem);
  CHECK(a == 1);
  CHECK(f == 2);
  const auto [b, scale] = gram_B(by_elem);
  CHECK(b == int_matrix(2, 2, {1, 0, 0, 2}));
  CHECK(scale == 3);
  for (std::size_t x = 0; x < g.size(); ++x) CHECK(b * by_elem[g.inverse(x)] == by_elem[x].transposed() * b);
}

TEST_CASE("A2: dims 1, 2, 1 and transposition symmetry") {
  auto& w = ws("A2");
  const auto& g = w.group();
  CHECK(dims(w.reps()) == std::vector<std::size_t>{1, 1, 2});
  for (const auto& r : w.reps()) {
    CHECK(r.f == 1);
    CHECK(r.B == identity_int(r.dim));
    for (std::size_t x = 0; x < g.size(); ++x) CHECK(r.rho[g.inverse(x)] == r.rho[x].transposed());
  }
  for (const auto& cell : w.cells().left_cells()) {
    if (cell.size() != 2) continue;
    const auto rho = left_cell_module(w.gamma(), cell);
    for (std::size_t x = 0; x < g.size(); ++x) {
      CHECK(rho[g.inverse(x)] == rho[x].transposed());
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t t = 0; t < 2; ++t) CHECK(rho[x](s, t) == w.gamma().gamma(x, cell[t], g.inverse(cell[s])));
    }
  }
}

TEST_CASE("left cell modules") {
  auto& w = ws("B2");
  const auto& g = w.group();
  const std::vector<Elem> cell{g.from_word({0}), g.from_word({1, 0}), g.from_word({0, 1, 0})};
  const auto rho = left_cell_module(w.gamma(), cell);
  // Character is the sum of a 1-dim and the 2-dim one.
  std::vector<Integer> trace(g.size(), 0);
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t i = 0; i < 3; ++i) trace[x] += rho[x](i, i);
  const auto& r = *std::find_if(w.reps().begin(), w.reps().end(), [](const JIrrep& x) { return x.dim == 2; });
  int hits = 0;
  for (const auto& e : w.reps()) {
    if (e.dim != 1 || e.a != 1) continue;
    std::vector<Integer> sum = e.character;
    for (std::size_t x = 0; x < g.size(); ++x) sum[x] += r.character[x];
    if (sum == trace) ++hits;
  }
  CHECK(hits == 1);
  const auto unit = left_cell_module(w.gamma(), {g.identity()});
  CHECK(unit[g.identity()] == int_matrix(1, 1, {1}));
  for (std::size_t x = 1; x < g.size(); ++x) CHECK(unit[x] == int_matrix(1, 1, {0}));
}

TEST_CASE("classes are complete, integral and satisfy the Schur relations") {
  for (const auto& [type, wts] : kTypes) {
    CAPTURE(type);
    CAPTURE(wts);
    auto& w = ws(type, wts);
    const auto& g = w.group();
    const auto& reps = w.reps();
    const auto& gt = w.gamma();
    CHECK(reps.size() == conjugacy_classes(g));
    std::size_t total = 0;
    std::set<std::vector<Integer>> characters;
    for (const auto& r : reps) {
      total += r.dim * r.dim;
      characters.insert(r.character);
      CHECK(r.f > 0);
      for (std::size_t x = 0; x < g.size(); ++x)
        if (!is_zero(r.rho[x])) CHECK(w.adata().a[x] == r.a);
      for (std::size_t x = 0; x < g.size(); ++x)
        for (std::size_t y = 0; y < g.size(); ++y) {
          IntMatrix sum(r.dim, r.dim, Integer(0));
          for (const auto& term : gt.product(x, y)) sum = sum + term.g * r.rho[term.z];
          if (r.rho[x] * r.rho[y] != sum) FAIL("not a representation");
        }
      // B^lambda.
      CHECK(r.B == r.B.transposed());
      CHECK(is_positive_definite(r.B));
      Integer gcd_all = 0;
      for (const auto& e : r.B.data()) gcd_all = gcd(gcd_all, e);
      CHECK(gcd_all == 1);
      for (std::size_t x = 0; x < g.size(); ++x) CHECK(r.B * r.rho[g.inverse(x)] == r.rho[x].transposed() * r.B);
      for (const auto& p : prime_divisors(determinant(r.B))) {
        const auto bad = bad_primes(reps);
        CHECK(std::find(bad.begin(), bad.end(), p) != bad.end());
      }
    }
    CHECK(total == g.size());
    CHECK(characters.size() == reps.size());
    // First relations.
    for (const auto& r : reps)
      for (const auto& q : reps)
        for (std::size_t s = 0; s < r.dim; ++s)
          for (std::size_t t = 0; t < r.dim; ++t)
            for (std::size_t u = 0; u < q.dim; ++u)
              for (std::size_t vv = 0; vv < q.dim; ++vv) {
                Integer sum = 0;
                for (std::size_t x = 0; x < g.size(); ++x) sum += r.rho[x](s, t) * q.rho[g.inverse(x)](u, vv);
                const bool same = r.label == q.label && s == vv && t == u;
                if (sum != (same ? r.f : Integer(0))) FAIL("first Schur relation");
              }
    // Second relations.
    for (std::size_t x = 0; x < g.size(); ++x)
      for (std::size_t y = 0; y < g.size(); ++y) {
        Rational sum = 0;
        for (const auto& r : reps)
          for (std::size_t s = 0; s < r.dim; ++s)
            for (std::size_t t = 0; t < r.dim; ++t)
              sum += Rational(r.rho[x](s, t) * r.rho[g.inverse(y)](t, s), r.f);
        if (sum != (x == y ? 1 : 0)) FAIL("second Schur relation");
      }
    const Report rep = verify_jreps(g, w.weights(), gt, w.adata(), reps);
    CHECK_MESSAGE(rep.all_passed(), testing::failures(rep));
  }
}

TEST_CASE("type A has f = 1 and dimensions counted by standard tableaux") {
  const std::map<int, std::vector<std::size_t>> expect{
      {3, {1, 1, 2, 3, 3}}, {4, {1, 1, 4, 4, 5, 5, 6}}};
  for (const auto& [n, d] : expect) {
    auto& w = ws("A" + std::to_string(n));
    CHECK(dims(w.reps()) == d);
    for (const auto& r : w.reps()) CHECK(r.f == 1);
    CHECK(bad_primes(w.reps()).empty());
  }
}

TEST_CASE("bad primes") {
  CHECK(bad_primes(ws("B2").reps()) == std::vector<Integer>{2});
  CHECK(bad_primes(ws("B3").reps()) == std::vector<Integer>{2});
  CHECK(bad_primes(ws("G2").reps()) == std::vector<Integer>{2, 3});
  CHECK(bad_primes(ws("D4").reps()) == std::vector<Integer>{2});
  CHECK(bad_primes(ws("B2", "2,1").reps()).empty());
  for (const char* t : {"A3", "B2", "B3", "G2", "D4"}) {
    auto& w = ws(t);
    const auto tab = tabulated_bad_primes(w.group().type(), w.weights());
    REQUIRE(tab.has_value());
    CHECK(*tab == bad_primes(w.reps()));
  }
}

TEST_CASE("rep construction is deterministic and seed-independent up to isomorphism") {
  auto& w = ws("B3");
  const auto& g = w.group();
  const auto a = irreducible_reps(g, w.gamma(), w.adata(), w.cells(), 1);
  const auto b = irreducible_reps(g, w.gamma(), w.adata(), w.cells(), 1);
  const auto c = irreducible_reps(g, w.gamma(), w.adata(), w.cells(), 12345);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].rho == b[i].rho);
    CHECK(a[i].B == b[i].B);
  }
  std::set<std::vector<Integer>> ca, cc;
  for (const auto& r : a) ca.insert(r.character);
  for (const auto& r : c) cc.insert(r.character);
  CHECK(ca == cc);
}
