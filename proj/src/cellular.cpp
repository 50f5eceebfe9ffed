#include "heckecell/cellular.hpp"

#include <set>
#include <string>

namespace heckecell {

namespace {

HeckeElement as_hecke(const std::vector<Integer>& coeffs) {
  HeckeElement x(coeffs.size());
  for (std::size_t w = 0; w < coeffs.size(); ++w)
    if (coeffs[w] != 0) x[static_cast<Elem>(w)] = LaurentPoly(coeffs[w]);
  return x;
}

/// Index of the first coordinate w with a(w) < bound, or -1.
int below_stratum(const HeckeElement& x, const AData& ad, int bound) {
  for (std::size_t w = 0; w < x.size(); ++w)
    if (!x[static_cast<Elem>(w)].is_zero() && ad.a[w] < bound) return static_cast<int>(w);
  return -1;
}

std::string lst(int l, std::size_t s, std::size_t t) {
  return "lambda=" + std::to_string(l) + " s=" + std::to_string(s + 1) + " t=" + std::to_string(t + 1);
}

}  // namespace

std::vector<std::vector<Integer>> cellular_elements(const CoxeterGroup& g, const AData& ad,
                                                    const std::vector<IntMatrix>& rho, const IntMatrix& B) {
  const std::size_t n = g.size(), d = B.rows();
  std::vector<std::vector<Integer>> out(d * d, std::vector<Integer>(n, 0));
  for (std::size_t w = 0; w < n; ++w) {
    const Elem wi = g.inverse(static_cast<Elem>(w));
    if (is_zero(rho[wi])) continue;
    const IntMatrix m = B * rho[wi];
    const int sign = ad.nhat[w] * ad.nhat[wi];
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t) out[s * d + t][w] = sign * m(t, s);
  }
  return out;
}

CellDatum build_cell_datum(const CoxeterGroup& g, const AData& ad, const std::vector<JIrrep>& reps) {
  CellDatum datum;
  datum.n = g.size();
  for (const auto& rep : reps) {
    datum.lambdas.push_back({rep.label, rep.a, rep.dim});
    datum.C.push_back(cellular_elements(g, ad, rep.rho, rep.B));
  }
  return datum;
}

PolyMatrix r_coefficients(const JAElement& phi_h, const std::vector<IntMatrix>& rho) {
  const std::size_t d = rho.front().rows();
  PolyMatrix r(d, d);
  for (std::size_t x = 0; x < phi_h.size(); ++x) {
    if (phi_h[x].is_zero() || is_zero(rho[x])) continue;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (rho[x](i, j) != 0) r(i, j).add_scaled(phi_h[x], rho[x](i, j), 0);
  }
  return r;
}

JAElement phi_of_generator(const HeckeAlgebra& H, const PhiMap& phi, const AData& ad, int s) {
  const auto& g = H.group();
  JAElement out = phi.of_cdagger(g.generator(s));
  for (auto& c : out) c = -c;
  for (Elem d : ad.dset) out[d].add_scaled(LaurentPoly(1), ad.nz[d], H.L(s));
  return out;
}

std::vector<PolyMatrix> generator_actions(const HeckeAlgebra& H, const PhiMap& phi, const AData& ad,
                                          const std::vector<IntMatrix>& rho) {
  std::vector<PolyMatrix> out;
  for (int s = 0; s < H.group().rank(); ++s) out.push_back(r_coefficients(phi_of_generator(H, phi, ad, s), rho));
  return out;
}

std::vector<std::pair<Elem, Integer>> jaction_on_c(const GammaTable& gt, const AData& ad, Elem x, Elem w) {
  std::vector<std::pair<Elem, Integer>> out;
  for (const auto& t : gt.product(x, w)) out.emplace_back(t.z, t.g * ad.nhat[w] * ad.nhat[t.z]);
  return out;
}

IntMatrix transition_matrix(const CellDatum& datum) {
  IntMatrix m(datum.n, datum.n);
  std::size_t col = 0;
  for (const auto& block : datum.C)
    for (const auto& c : block) {
      if (col < datum.n)
        for (std::size_t w = 0; w < datum.n; ++w) m(w, col) = c[w];
      ++col;
    }
  return m;
}

std::optional<std::vector<int>> cdagger_signs(const CellDatum& datum) {
  std::vector<int> delta(datum.n, 0);
  for (const auto& block : datum.C)
    for (const auto& c : block) {
      int hit = -1;
      for (std::size_t w = 0; w < datum.n; ++w) {
        if (c[w] == 0) continue;
        if (hit >= 0 || (c[w] != 1 && c[w] != -1)) return std::nullopt;
        hit = static_cast<int>(w);
      }
      if (hit < 0 || delta[hit] != 0) return std::nullopt;
      delta[hit] = c[hit] == 1 ? 1 : -1;
    }
  for (int d : delta)
    if (d == 0) return std::nullopt;
  return delta;
}

Report verify_axioms(const CellularContext& ctx, const CellDatum& datum) {
  const auto& H = ctx.H;
  const auto& g = H.group();
  const auto& ad = ctx.ad;
  const std::size_t n = g.size();
  Report r;

  std::size_t count = 0;
  Witness stratum;
  for (std::size_t l = 0; l < datum.lambdas.size(); ++l) {
    const std::size_t d = datum.lambdas[l].dim;
    count += d * d;
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t) {
        const auto& c = datum.element(l, s, t);
        for (std::size_t w = 0; w < n; ++w)
          if (c[w] != 0 && ad.a[w] != datum.lambdas[l].a) stratum.fail(lst(static_cast<int>(l), s, t));
      }
  }
  stratum.into(r, "C^lambda_{s,t} supported on a(w) = a_lambda");

  Witness order;
  for (std::size_t l = 0; l < datum.lambdas.size(); ++l)
    for (std::size_t m = 0; m < datum.lambdas.size(); ++m)
      if (l != m && datum.precedes(l, m) && datum.precedes(m, l)) order.fail(std::to_string(l) + "," + std::to_string(m));
  order.into(r, "precedence is antisymmetric");

  // (C1)
  const auto bad = bad_primes(ctx.reps);
  const std::set<Integer> bad_set(bad.begin(), bad.end());
  if (count != n) {
    r.add("(C1) C is a basis", false, std::to_string(count) + " elements for |W| = " + std::to_string(n));
  } else {
    const Integer det = determinant(transition_matrix(datum));
    std::string stray;
    for (const auto& p : prime_divisors(det))
      if (!bad_set.count(p)) stray += " " + p.str();
    r.add("(C1) transition determinant is nonzero", det != 0, "det = 0");
    r.add("(C1) determinant primes are bad primes", det != 0 && stray.empty(), "det = " + det.str() + ", stray" + stray);
  }

  // (C2)
  Witness c2;
  for (std::size_t l = 0; l < datum.lambdas.size(); ++l) {
    const std::size_t d = datum.lambdas[l].dim;
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t) {
        const auto& c = datum.element(l, s, t);
        const auto& ct = datum.element(l, t, s);
        for (std::size_t w = 0; w < n; ++w)
          if (c[w] != ct[g.inverse(static_cast<Elem>(w))]) {
            c2.fail(lst(static_cast<int>(l), s, t));
            break;
          }
      }
  }
  c2.into(r, "(C2) (C^lambda_{s,t})* = C^lambda_{t,s}");
  if (n <= 48) {
    Witness star;
    for (std::size_t w = 0; w < n; ++w) {
      const Elem e = static_cast<Elem>(w);
      if (H.star(c_basis_element(H, ctx.kl, e, true)) != c_basis_element(H, ctx.kl, g.inverse(e), true))
        star.fail("w=" + g.format(e));
    }
    star.into(r, "(c_w dagger)* = c_{w^-1} dagger on the T-basis");
  }

  // (C3), r_{T_1} = 1 and multiplicativity on generator pairs
  Witness c3, unit, mult;
  std::vector<HeckeElement> ts_cd;
  for (int s = 0; s < g.rank(); ++s) {
    HeckeElement x(n);
    x[0] = LaurentPoly::monomial(H.L(s));
    x[g.generator(s)] = LaurentPoly(-1);
    ts_cd.push_back(std::move(x));
  }
  for (std::size_t l = 0; l < datum.lambdas.size(); ++l) {
    const auto& rep = ctx.reps[l];
    const std::size_t d = rep.dim;
    const int a = rep.a;
    const auto R = generator_actions(H, ctx.phi, ad, rep.rho);
    if (r_coefficients(ctx.phi.of_cdagger(0), rep.rho) != identity_poly(d)) unit.fail("lambda=" + std::to_string(l));
    for (int s = 0; s < g.rank(); ++s) {
      for (std::size_t u = 0; u < d; ++u)
        for (std::size_t t = 0; t < d; ++t) {
          HeckeElement rem = ts_times_cdagger(H, ctx.h, s, as_hecke(datum.element(l, u, t)));
          for (std::size_t u2 = 0; u2 < d; ++u2)
            if (!R[s](u2, u).is_zero()) rem.add_scaled(as_hecke(datum.element(l, u2, t)), -R[s](u2, u));
          const int bad_w = below_stratum(rem, ad, a + 1);
          if (bad_w >= 0)
            c3.fail(lst(static_cast<int>(l), u, t) + " T_s=" + g.format(g.generator(s)) +
                    " at c_" + g.format(bad_w) + " dagger");
        }
      for (int s2 = 0; s2 < g.rank(); ++s2) {
        const HeckeElement prod = ts_times_cdagger(H, ctx.h, s, ts_cd[s2]);
        if (r_coefficients(ctx.phi.apply(prod), rep.rho) != R[s] * R[s2])
          mult.fail("lambda=" + std::to_string(l) + " s=" + g.format(g.generator(s)) + " t=" + g.format(g.generator(s2)));
      }
    }
  }
  c3.into(r, "(C3) T_s C_{s,t} - sum r C_{s',t} lies in H^{>=a+1}");
  unit.into(r, "r_{T_1} is the identity");
  mult.into(r, "r_{T_s T_t} = r_{T_s} r_{T_t}");

  // Reconstruction: sum (1/f)(rho(t_y) B^-1)_{s,t} C_{s,t} = nhat_y nhat_{y^-1} c_y dagger.
  const RationalField q;
  std::vector<FMatrix<RationalField>> binv;
  for (const auto& rep : ctx.reps) {
    auto inv = inverse(q, lift_int_matrix(q, rep.B));
    binv.push_back(inv ? *inv : FMatrix<RationalField>());
  }
  Witness recon;
  for (std::size_t y = 0; y < n && recon.ok(); ++y) {
    std::vector<Rational> acc(n, Rational(0));
    for (std::size_t l = 0; l < ctx.reps.size(); ++l) {
      const auto& rep = ctx.reps[l];
      if (is_zero(rep.rho[y]) || binv[l].rows() == 0 || rep.f == 0) continue;
      const auto m = mat_mul(q, lift_int_matrix(q, rep.rho[y]), binv[l]);
      for (std::size_t s = 0; s < rep.dim; ++s)
        for (std::size_t t = 0; t < rep.dim; ++t) {
          if (m(s, t) == 0) continue;
          const Rational coef = m(s, t) / Rational(rep.f);
          const auto& c = datum.element(l, s, t);
          for (std::size_t w = 0; w < n; ++w)
            if (c[w] != 0) acc[w] += coef * c[w];
        }
    }
    const Elem ye = static_cast<Elem>(y);
    for (std::size_t w = 0; w < n; ++w) {
      const Rational expect = w == y ? Rational(ad.nhat[ye] * ad.nhat[g.inverse(ye)]) : Rational(0);
      if (acc[w] != expect) {
        recon.fail("y=" + g.format(ye));
        break;
      }
    }
  }
  recon.into(r, "reconstruction of nhat_y nhat_{y^-1} c_y dagger from C");

  // T_s c_w dagger - phi(T_s) * c_w dagger in H^{>=a(w)+1}
  Witness cong;
  for (int s = 0; s < g.rank(); ++s) {
    const JAElement ph = phi_of_generator(H, ctx.phi, ad, s);
    for (std::size_t w = 0; w < n; ++w) {
      const Elem we = static_cast<Elem>(w);
      HeckeElement rem = ts_times_cdagger(H, ctx.h, s, HeckeElement::basis(n, we));
      for (std::size_t x = 0; x < n; ++x) {
        if (ph[x].is_zero()) continue;
        for (const auto& [z, c] : jaction_on_c(ctx.gt, ad, static_cast<Elem>(x), we)) rem[z].add_scaled(ph[x], -c, 0);
      }
      const int bad_w = below_stratum(rem, ad, ad.a[w] + 1);
      if (bad_w >= 0) cong.fail("s=" + g.format(g.generator(s)) + " w=" + g.format(we));
    }
  }
  cong.into(r, "T_s c_w dagger = phi(T_s) * c_w dagger mod H^{>=a(w)+1}");

  // One-dimensional lambda: T_s acts by eta(s) v^{m(s)}.
  Witness onedim;
  for (std::size_t l = 0; l < datum.lambdas.size(); ++l) {
    const auto& rep = ctx.reps[l];
    if (rep.dim != 1) continue;
    const auto R = generator_actions(H, ctx.phi, ad, rep.rho);
    std::vector<int> eta, m;
    bool monomial = true;
    for (const auto& Rs : R) {
      const auto& p = Rs(0, 0);
      if (p.num_terms() != 1 || (p.leading_coeff() != 1 && p.leading_coeff() != -1)) {
        monomial = false;
        break;
      }
      eta.push_back(p.leading_coeff() == 1 ? 1 : -1);
      m.push_back(p.min_exp());
    }
    if (!monomial) {
      onedim.fail("lambda=" + std::to_string(l) + " T_s not monomial");
      continue;
    }
    std::vector<Integer> expect(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
      int e = 1, mw = 0;
      for (int s : g.word(static_cast<Elem>(w))) {
        e *= eta[s];
        mw += m[s];
      }
      if (rep.a + mw == 0) expect[w] = (g.length(static_cast<Elem>(w)) % 2 ? -1 : 1) * e;
    }
    if (expect != datum.element(l, 0, 0)) onedim.fail("lambda=" + std::to_string(l));
  }
  onedim.into(r, "one-dimensional C^lambda_{1,1} = sum (-1)^{l(w)} eta(w) c_w dagger");
  return r;
}

}  // namespace heckecell
