#include "heckecell/hecke.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace heckecell {

// ---------------------------------------------------------------------------
// HeckeElement

bool HeckeElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

std::vector<Elem> HeckeElement::support() const {
  std::vector<Elem> out;
  for (std::size_t w = 0; w < c_.size(); ++w)
    if (!c_[w].is_zero()) out.push_back(static_cast<Elem>(w));
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (std::size_t w = 0; w < c_.size(); ++w) c_[w] += o.c_[w];
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (std::size_t w = 0; w < c_.size(); ++w) c_[w] -= o.c_[w];
  return *this;
}

void HeckeElement::add_scaled(const HeckeElement& o, const LaurentPoly& p) {
  if (p.is_zero()) return;
  for (std::size_t w = 0; w < c_.size(); ++w) c_[w].add_product(p, o.c_[w]);
}

HeckeElement operator*(const LaurentPoly& p, const HeckeElement& h) {
  HeckeElement out(h.size());
  out.add_scaled(h, p);
  return out;
}

LaurentPoly HTable::get(Elem x, Elem y, Elem z) const {
  const auto& r = row(x, y);
  auto it = std::lower_bound(r.begin(), r.end(), z, [](const HTerm& t, Elem v) { return t.z < v; });
  if (it != r.end() && it->z == z) return it->h;
  return {};
}

// ---------------------------------------------------------------------------
// HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(const CoxeterGroup& g, WeightFunction L) : g_(&g), L_(std::move(L)) {
  wt_.resize(g.size());
  for (std::size_t w = 0; w < g.size(); ++w) wt_[w] = heckecell::weight(g, L_, static_cast<Elem>(w));
  for (int s = 0; s < g.rank(); ++s) qdiff_.push_back(v_difference(L_[s]));
}

HeckeElement HeckeAlgebra::mul_generator_left(int s, const HeckeElement& h) const {
  HeckeElement out(size());
  for (std::size_t w = 0; w < size(); ++w) {
    const auto& c = h[static_cast<Elem>(w)];
    if (c.is_zero()) continue;
    const Elem sw = g_->left_mul(s, static_cast<Elem>(w));
    out[sw] += c;
    if (sw < static_cast<Elem>(w)) out[static_cast<Elem>(w)].add_product(qdiff_[s], c);
  }
  return out;
}

HeckeElement HeckeAlgebra::mul_generator_right(const HeckeElement& h, int s) const {
  HeckeElement out(size());
  for (std::size_t w = 0; w < size(); ++w) {
    const auto& c = h[static_cast<Elem>(w)];
    if (c.is_zero()) continue;
    const Elem ws = g_->right_mul(static_cast<Elem>(w), s);
    out[ws] += c;
    if (ws < static_cast<Elem>(w)) out[static_cast<Elem>(w)].add_product(qdiff_[s], c);
  }
  return out;
}

HeckeElement HeckeAlgebra::mul_generator_inverse_left(int s, const HeckeElement& h) const {
  HeckeElement out = mul_generator_left(s, h);
  out.add_scaled(h, -qdiff_[s]);
  return out;
}

HeckeElement HeckeAlgebra::t_multiply(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out(size());
  for (std::size_t x = 0; x < size(); ++x) {
    const auto& c = a[static_cast<Elem>(x)];
    if (c.is_zero()) continue;
    // T_x b = T_{s_1}(T_{s_2}(... T_{s_k} b))
    HeckeElement cur = b;
    const auto& w = g_->word(static_cast<Elem>(x));
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = mul_generator_left(*it, cur);
    out.add_scaled(cur, c);
  }
  return out;
}

const HeckeElement& HeckeAlgebra::t_inverse_inverse(Elem w) const {
  std::call_once(lazy_->once, [this] {
    auto& inv = lazy_->inv;
    inv.resize(size());
    inv[0] = t(0);
    // w = s w' with l(w) = l(w') + 1:  T_{w^{-1}}^{-1} = T_s^{-1} T_{w'^{-1}}^{-1}
    for (std::size_t x = 1; x < size(); ++x) {
      const int s = g_->word(static_cast<Elem>(x)).front();
      inv[x] = mul_generator_inverse_left(s, inv[g_->left_mul(s, static_cast<Elem>(x))]);
    }
  });
  return lazy_->inv[w];
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& h) const {
  HeckeElement out(size());
  for (std::size_t w = 0; w < size(); ++w) {
    const auto& c = h[static_cast<Elem>(w)];
    if (!c.is_zero()) out.add_scaled(t_inverse_inverse(static_cast<Elem>(w)), c.bar());
  }
  return out;
}

HeckeElement HeckeAlgebra::dagger(const HeckeElement& h) const {
  HeckeElement out(size());
  for (std::size_t w = 0; w < size(); ++w) {
    const auto& c = h[static_cast<Elem>(w)];
    if (c.is_zero()) continue;
    out.add_scaled(t_inverse_inverse(static_cast<Elem>(w)), g_->length(static_cast<Elem>(w)) % 2 ? -c : c);
  }
  return out;
}

HeckeElement HeckeAlgebra::star(const HeckeElement& h) const {
  HeckeElement out(size());
  for (std::size_t w = 0; w < size(); ++w) out[g_->inverse(static_cast<Elem>(w))] = h[static_cast<Elem>(w)];
  return out;
}

// ---------------------------------------------------------------------------
// Kazhdan-Lusztig basis

namespace {

/// Bar-invariant mu with coeff - mu in v^-1 Z[v^-1]; zero if coeff already is.
LaurentPoly bar_invariant_correction(const LaurentPoly& coeff) {
  LaurentPoly mu;
  for (const auto& t : coeff.terms()) {
    if (t.exp < 0) continue;
    mu += LaurentPoly::monomial(t.exp, t.coeff);
    if (t.exp > 0) mu += LaurentPoly::monomial(-t.exp, t.coeff);
  }
  return mu;
}

std::vector<HTerm> sparse_of(const HeckeElement& h) {
  std::vector<HTerm> out;
  for (std::size_t z = 0; z < h.size(); ++z)
    if (!h[static_cast<Elem>(z)].is_zero()) out.push_back({static_cast<Elem>(z), h[static_cast<Elem>(z)]});
  return out;
}

}  // namespace

KLData compute_kl(const HeckeAlgebra& H) {
  const auto& g = H.group();
  const std::size_t n = g.size();
  const int r = g.rank();
  KLData kd;
  std::vector<HeckeElement> c(n);
  std::vector<bool> known(n, false);
  c[0] = H.t(0);
  known[0] = true;
  kd.left_c.resize(static_cast<std::size_t>(r) * n);

  for (std::size_t zi = 0; zi < n; ++zi) {
    const auto z = static_cast<Elem>(zi);
    for (int s = 0; s < r; ++s) {
      const Elem sz = g.left_mul(s, z);
      auto& rule = kd.left_c[static_cast<std::size_t>(s) * n + zi];
      if (sz < z) {
        rule.push_back({z, LaurentPoly::monomial(H.L(s)) + LaurentPoly::monomial(-H.L(s))});
        continue;
      }
      // c_s c_z = T_s c_z + v^{-L(s)} c_z on the T-basis
      HeckeElement P = H.mul_generator_left(s, c[zi]);
      P.add_scaled(c[zi], LaurentPoly::monomial(-H.L(s)));
      std::vector<HTerm> terms;
      for (Elem u = sz - 1; u >= 0; --u) {
        if (P[u].in_strictly_negative_part()) continue;
        const LaurentPoly mu = bar_invariant_correction(P[u]);
        if (!known[u]) throw std::logic_error("KL recursion reached an element before its basis element was known");
        P.add_scaled(c[u], -mu);
        terms.push_back({u, mu});
      }
      if (!known[sz]) {
        c[sz] = std::move(P);
        known[sz] = true;
      } else if (!(c[sz] == P)) {
        throw std::logic_error("KL recursion is not independent of the chosen descent at " + g.format(sz));
      }
      rule.push_back({sz, 1});
      rule.insert(rule.end(), terms.begin(), terms.end());
      std::sort(rule.begin(), rule.end(), [](const HTerm& a, const HTerm& b) { return a.z < b.z; });
    }
  }
  kd.kl.c.resize(n);
  for (std::size_t w = 0; w < n; ++w) kd.kl.c[w] = c[w].coeffs();
  return kd;
}

HTable h_constants(const HeckeAlgebra& H, const KLData& kd, int jobs) {
  const auto& g = H.group();
  const std::size_t n = g.size();
  HTable table;
  table.n = n;
  table.rows.resize(n * n);

  auto work = [&](std::size_t yi) {
    // F[x] = c_x c_y on the c-basis, built along x = s x'.
    std::vector<HeckeElement> F(n);
    F[0] = HeckeElement::basis(n, static_cast<Elem>(yi));
    for (std::size_t x = 1; x < n; ++x) {
      const int s = g.word(static_cast<Elem>(x)).front();
      const Elem xp = g.left_mul(s, static_cast<Elem>(x));
      HeckeElement G(n);
      const auto& prev = F[xp];
      for (std::size_t z = 0; z < n; ++z) {
        const auto& coeff = prev[static_cast<Elem>(z)];
        if (coeff.is_zero()) continue;
        for (const auto& term : kd.left(s, static_cast<Elem>(z))) G[term.z].add_product(coeff, term.h);
      }
      for (const auto& term : kd.left(s, xp))
        if (term.z != static_cast<Elem>(x)) G.add_scaled(F[term.z], -term.h);
      F[x] = std::move(G);
    }
    for (std::size_t x = 0; x < n; ++x) table.rows[x * n + yi] = sparse_of(F[x]);
  };

  if (jobs <= 1 || n < 8) {
    for (std::size_t y = 0; y < n; ++y) work(y);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (std::size_t y = next++; y < n; y = next++) work(y);
      });
    for (auto& th : pool) th.join();
  }
  return table;
}

std::vector<std::vector<HTerm>> left_rule_from_h(const HeckeAlgebra& H, const HTable& h) {
  const auto& g = H.group();
  std::vector<std::vector<HTerm>> out(static_cast<std::size_t>(g.rank()) * g.size());
  for (int s = 0; s < g.rank(); ++s)
    for (std::size_t z = 0; z < g.size(); ++z) out[s * g.size() + z] = h.row(g.generator(s), static_cast<Elem>(z));
  return out;
}

HeckeElement c_basis_element(const HeckeAlgebra& H, const KLTable& kl, Elem w, bool daggered) {
  return c_to_t(H, kl, HeckeElement::basis(H.size(), w), daggered);
}

HeckeElement c_to_t(const HeckeAlgebra& H, const KLTable& kl, const HeckeElement& coords, bool daggered) {
  const std::size_t n = H.size();
  HeckeElement out(n);
  for (std::size_t w = 0; w < n; ++w) {
    const auto& a = coords[static_cast<Elem>(w)];
    if (a.is_zero()) continue;
    for (std::size_t y = 0; y < n; ++y) {
      const auto& p = kl.c[w][y];
      if (p.is_zero()) continue;
      if (daggered) {
        // T_y^dagger = (-1)^{l(y)} T_{y^{-1}}^{-1}
        const LaurentPoly ap = a * p;
        out.add_scaled(H.t_inverse_inverse(static_cast<Elem>(y)), H.group().length(static_cast<Elem>(y)) % 2 ? -ap : ap);
      } else
        out[static_cast<Elem>(y)].add_product(a, p);
    }
  }
  return out;
}

HeckeElement t_to_c(const HeckeAlgebra& H, const KLTable& kl, HeckeElement h, bool daggered) {
  const std::size_t n = H.size();
  HeckeElement out(n);
  for (std::size_t wi = n; wi-- > 0;) {
    const auto w = static_cast<Elem>(wi);
    if (h[w].is_zero()) continue;
    // leading coefficient of c_w (dagger) at T_w is 1 (resp. (-1)^{l(w)})
    LaurentPoly b = h[w];
    if (daggered && H.group().length(w) % 2) b = -b;
    h.add_scaled(c_basis_element(H, kl, w, daggered), -b);
    out[w] = std::move(b);
  }
  return out;
}

HeckeElement c_multiply(const HTable& h, const HeckeElement& a, const HeckeElement& b) {
  const std::size_t n = h.n;
  HeckeElement out(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& ax = a[static_cast<Elem>(x)];
    if (ax.is_zero()) continue;
    for (std::size_t y = 0; y < n; ++y) {
      const auto& by = b[static_cast<Elem>(y)];
      if (by.is_zero()) continue;
      const LaurentPoly ab = ax * by;
      for (const auto& t : h.row(static_cast<Elem>(x), static_cast<Elem>(y))) out[t.z].add_product(ab, t.h);
    }
  }
  return out;
}

HeckeElement ts_times_cdagger(const HeckeAlgebra& H, const HTable& h, int s, const HeckeElement& x) {
  // T_s = v^{L(s)} c_1^dagger - c_s^dagger
  const std::size_t n = H.size();
  const Elem gs = H.group().generator(s);
  HeckeElement out = LaurentPoly::monomial(H.L(s)) * x;
  for (std::size_t y = 0; y < n; ++y) {
    const auto& c = x[static_cast<Elem>(y)];
    if (c.is_zero()) continue;
    for (const auto& t : h.row(gs, static_cast<Elem>(y))) out[t.z].add_product(-c, t.h);
  }
  return out;
}

std::vector<HeckeElement> t_basis_in_cdagger(const HeckeAlgebra& H, const HTable& h) {
  const auto& g = H.group();
  std::vector<HeckeElement> out(g.size());
  out[0] = HeckeElement::basis(g.size(), 0);
  for (std::size_t w = 1; w < g.size(); ++w) {
    const int s = g.word(static_cast<Elem>(w)).front();
    out[w] = ts_times_cdagger(H, h, s, out[g.left_mul(s, static_cast<Elem>(w))]);
  }
  return out;
}

Report verify_hecke(const HeckeAlgebra& H, const KLData& kd, const HTable& h) {
  const auto& g = H.group();
  const std::size_t n = g.size();
  const auto& kl = kd.kl;
  Report r;
  Witness diag, degree, bruhat, bar_c, bar_h, prod;
  for (std::size_t w = 0; w < n; ++w) {
    if (kl.p(w, w) != LaurentPoly(1)) diag.fail(g.format(w));
    for (std::size_t y = 0; y < n; ++y) {
      const auto& p = kl.p(y, w);
      if (y == w || p.is_zero()) continue;
      if (!g.bruhat_leq(y, w)) bruhat.fail("y=" + g.format(y) + " w=" + g.format(w));
      if (p.max_exp() >= 0) degree.fail("y=" + g.format(y) + " w=" + g.format(w));
    }
    const auto c = c_basis_element(H, kl, w, false);
    if (H.bar(c) != c) bar_c.fail(g.format(w));
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  if (n <= 48) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) pairs.emplace_back(x, y);
  } else {
    const std::size_t step = n / 7 + 1;
    for (std::size_t x = 0; x < n; x += step)
      for (std::size_t y = 0; y < n; y += step) pairs.emplace_back(x, y);
    pairs.emplace_back(g.longest(), g.longest());
  }
  for (const auto& [x, y] : pairs) {
    HeckeElement expect(n);
    for (const auto& t : h.row(x, y)) {
      if (t.h.bar() != t.h) bar_h.fail("x=" + g.format(x) + " y=" + g.format(y) + " z=" + g.format(t.z));
      expect.add_scaled(c_basis_element(H, kl, t.z, false), t.h);
    }
    const auto got = H.t_multiply(c_basis_element(H, kl, x, false), c_basis_element(H, kl, y, false));
    if (got != expect) prod.fail("x=" + g.format(x) + " y=" + g.format(y));
  }
  diag.into(r, "p_{w,w} = 1");
  bruhat.into(r, "p_{y,w} = 0 unless y <= w");
  degree.into(r, "p_{y,w} in v^-1 Z[v^-1] for y < w");
  bar_c.into(r, "c_w is bar invariant");
  bar_h.into(r, "h_{x,y,z} is bar invariant");
  prod.into(r, "c_x c_y = sum_z h_{x,y,z} c_z on the T-basis");
  return r;
}

}  // namespace heckecell
