#include "heckecell/jring.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace heckecell {

Integer GammaTable::gamma(Elem x, Elem y, Elem z) const {
  const Elem target = inverse[z];
  const auto& p = product(x, y);
  auto it = std::lower_bound(p.begin(), p.end(), target, [](const JTerm& t, Elem v) { return t.z < v; });
  if (it != p.end() && it->z == target) return it->g;
  return 0;
}

GammaTable gamma_table(const CoxeterGroup& g, const HTable& h, const std::vector<int>& a) {
  GammaTable gt;
  gt.n = g.size();
  gt.inverse.resize(gt.n);
  for (std::size_t w = 0; w < gt.n; ++w) gt.inverse[w] = g.inverse(static_cast<Elem>(w));
  gt.prod.resize(gt.n * gt.n);
  for (std::size_t i = 0; i < h.rows.size(); ++i)
    for (const auto& t : h.rows[i]) {
      const Integer c = t.h.coeff_at(-a[t.z]);
      if (c != 0) gt.prod[i].push_back({t.z, c});
    }
  return gt;
}

JElement j_basis(std::size_t n, Elem w) {
  JElement e(n, 0);
  e[w] = 1;
  return e;
}

JElement j_multiply(const GammaTable& gt, const JElement& a, const JElement& b) {
  JElement out(gt.n, 0);
  for (std::size_t x = 0; x < gt.n; ++x) {
    if (a[x] == 0) continue;
    for (std::size_t y = 0; y < gt.n; ++y) {
      if (b[y] == 0) continue;
      const Integer ab = a[x] * b[y];
      for (const auto& t : gt.product(static_cast<Elem>(x), static_cast<Elem>(y))) out[t.z] += ab * t.g;
    }
  }
  return out;
}

JAElement ja_multiply(const GammaTable& gt, const JAElement& a, const JAElement& b) {
  JAElement out(gt.n);
  for (std::size_t x = 0; x < gt.n; ++x) {
    if (a[x].is_zero()) continue;
    for (std::size_t y = 0; y < gt.n; ++y) {
      if (b[y].is_zero()) continue;
      const LaurentPoly ab = a[x] * b[y];
      for (const auto& t : gt.product(static_cast<Elem>(x), static_cast<Elem>(y))) out[t.z].add_scaled(ab, t.g, 0);
    }
  }
  return out;
}

JElement j_identity(const AData& ad) {
  JElement e(ad.a.size(), 0);
  for (Elem d : ad.dset) e[d] = ad.nz[d];
  return e;
}

PhiMap::PhiMap(const HTable& h, const AData& ad) {
  const std::size_t n = h.n;
  images_.assign(n, JAElement(n));
  for (std::size_t w = 0; w < n; ++w)
    for (Elem d : ad.dset)
      for (const auto& t : h.row(static_cast<Elem>(w), d))
        if (ad.a[t.z] == ad.a[d]) images_[w][t.z].add_scaled(t.h, ad.nhat[t.z], 0);
}

JAElement PhiMap::apply(const HeckeElement& coords) const {
  const std::size_t n = images_.size();
  JAElement out(n);
  for (std::size_t w = 0; w < n; ++w) {
    const auto& c = coords[static_cast<Elem>(w)];
    if (c.is_zero()) continue;
    for (std::size_t z = 0; z < n; ++z)
      if (!images_[w][z].is_zero()) out[z].add_product(c, images_[w][z]);
  }
  return out;
}

FMatrix<RationalField> phi_one(const std::vector<HeckeElement>& t_in_cdagger, const PhiMap& phi) {
  const std::size_t n = phi.size();
  FMatrix<RationalField> m(n, n, Rational(0));
  for (std::size_t w = 0; w < n; ++w) {
    const JAElement img = phi.apply(t_in_cdagger[w]);
    for (std::size_t z = 0; z < n; ++z) m(z, w) = Rational(img[z].at_one());
  }
  return m;
}

namespace {

std::string triple(const CoxeterGroup& g, Elem x, Elem y, Elem z) {
  return "(" + g.format(x) + "," + g.format(y) + "," + g.format(z) + ")";
}

}  // namespace

Report verify_jring(const HeckeAlgebra& H, const HTable& h, const AData& ad, const CellPartition& cp,
                    const GammaTable& gt, const PhiMap& phi, std::uint64_t seed) {
  const auto& g = H.group();
  const std::size_t n = g.size();
  Report r;

  Witness p7, inv, p8;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& t : gt.product(static_cast<Elem>(x), static_cast<Elem>(y))) {
        const Elem X = static_cast<Elem>(x), Y = static_cast<Elem>(y), Z = g.inverse(t.z);
        if (gt.gamma(Y, Z, X) != t.g) p7.fail(triple(g, X, Y, Z));
        if (gt.gamma(g.inverse(Y), g.inverse(X), g.inverse(Z)) != t.g) inv.fail(triple(g, X, Y, Z));
        if (!cp.left_equiv(X, g.inverse(Y)) || !cp.left_equiv(Y, g.inverse(Z)) || !cp.left_equiv(Z, g.inverse(X)))
          p8.fail(triple(g, X, Y, Z));
      }
  p7.into(r, "P7: gamma_{x,y,z} = gamma_{y,z,x}");
  inv.into(r, "gamma_{x,y,z} = gamma_{y^-1,x^-1,z^-1}");
  p8.into(r, "P8: gamma vanishes off x~y^-1, y~z^-1, z~x^-1");

  const JElement one = j_identity(ad);
  Witness ident;
  for (std::size_t w = 0; w < n; ++w) {
    const JElement tw = j_basis(n, static_cast<Elem>(w));
    if (j_multiply(gt, one, tw) != tw || j_multiply(gt, tw, one) != tw) ident.fail("t_" + g.format(static_cast<Elem>(w)));
  }
  ident.into(r, "1_J is a two-sided identity");

  Witness assoc;
  auto check_triple = [&](std::size_t x, std::size_t y, std::size_t z) {
    std::map<Elem, Integer> lhs, rhs;
    for (const auto& u : gt.product(static_cast<Elem>(x), static_cast<Elem>(y)))
      for (const auto& w : gt.product(u.z, static_cast<Elem>(z))) lhs[w.z] += u.g * w.g;
    for (const auto& u : gt.product(static_cast<Elem>(y), static_cast<Elem>(z)))
      for (const auto& w : gt.product(static_cast<Elem>(x), u.z)) rhs[w.z] += u.g * w.g;
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    if (lhs != rhs) assoc.fail(triple(g, static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)));
  };
  if (n <= 48) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) check_triple(x, y, z);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 20000; ++i) check_triple(pick(rng), pick(rng), pick(rng));
  }
  assoc.into(r, "J is associative");

  // phi(c_s^dagger c_y^dagger) = phi(c_s^dagger) phi(c_y^dagger)
  Witness mult;
  for (int s = 0; s < g.rank(); ++s) {
    const Elem gs = g.generator(s);
    for (std::size_t y = 0; y < n; ++y) {
      HeckeElement prod(n);
      for (const auto& t : h.row(gs, static_cast<Elem>(y))) prod[t.z] = t.h;
      if (phi.apply(prod) != ja_multiply(gt, phi.of_cdagger(gs), phi.of_cdagger(static_cast<Elem>(y))))
        mult.fail("s=" + g.format(gs) + " y=" + g.format(static_cast<Elem>(y)));
    }
  }
  mult.into(r, "phi is multiplicative on (c_s^dagger, c_y^dagger)");

  JAElement one_a(n);
  for (std::size_t w = 0; w < n; ++w) one_a[w] = LaurentPoly(one[w]);
  r.add("phi(1) = 1_J", phi.of_cdagger(0) == one_a, "phi(c_1^dagger) differs from 1_J");

  const auto tc = t_basis_in_cdagger(H, h);
  const auto m = phi_one(tc, phi);
  // Integer entries: full rank mod a large prime already proves invertibility.
  const PrimeField fp(2305843009213693951ULL);
  FMatrix<PrimeField> mp(n, n);
  for (std::size_t i = 0; i < m.data().size(); ++i)
    mp.data()[i] = fp.from_integer(boost::multiprecision::numerator(m.data()[i]));
  const bool invertible = rank(fp, mp) == n || rank(RationalField(), m) == n;
  r.add("phi_1 is invertible", invertible, "singular matrix");
  bool unit_ok = true;
  for (std::size_t z = 0; z < n; ++z)
    if (m(z, 0) != Rational(one[z])) unit_ok = false;
  r.add("phi_1(1) = 1_J", unit_ok, "column of T_1");
  return r;
}

}  // namespace heckecell
