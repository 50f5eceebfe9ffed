#include "heckecell/cellmod.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace heckecell {

namespace {

HeckeElement as_hecke(const std::vector<Integer>& coeffs) {
  HeckeElement x(coeffs.size());
  for (std::size_t w = 0; w < coeffs.size(); ++w)
    if (coeffs[w] != 0) x[static_cast<Elem>(w)] = LaurentPoly(coeffs[w]);
  return x;
}

std::string lam(int l) { return "lambda=" + std::to_string(l); }

// ---------------------------------------------------------------------------
// Module arithmetic over a field.

template <class F>
using Vec = std::vector<typename F::Elem>;
template <class F>
using Gens = std::vector<FMatrix<F>>;

template <class F>
Gens<F> transpose_all(const Gens<F>& gens) {
  Gens<F> out;
  for (const auto& g : gens) out.push_back(g.transposed());
  return out;
}

/// Basis change Q = [sub | completion]; returns (sub action, quotient action).
template <class F>
std::pair<Gens<F>, Gens<F>> sub_and_quotient(const F& f, const Gens<F>& gens, std::size_t m,
                                             const std::vector<Vec<F>>& sub) {
  Echelon<F> ech(f);
  for (const auto& v : sub) ech.add(v);
  const std::size_t k = ech.dim();
  for (std::size_t i = 0; i < m && ech.dim() < m; ++i) {
    Vec<F> e(m, f.zero());
    e[i] = f.one();
    ech.add(e);
  }
  const auto& basis = ech.originals();
  auto q = zero_matrix(f, m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) q(i, j) = basis[j][i];
  const auto qinv = *inverse(f, q);
  Gens<F> s, quo;
  for (const auto& g : gens) {
    const auto c = mat_mul(f, qinv, mat_mul(f, g, q));
    auto a = zero_matrix(f, k, k);
    auto b = zero_matrix(f, m - k, m - k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (i < k && j < k) a(i, j) = c(i, j);
        if (i >= k && j >= k) b(i - k, j - k) = c(i, j);
      }
    s.push_back(std::move(a));
    quo.push_back(std::move(b));
  }
  return {s, quo};
}

enum class Verdict { Irreducible, Reducible, Undecided };

/// Random-element submodule search with Norton's irreducibility test.
template <class F>
Verdict meataxe(const F& f, const Gens<F>& gens, std::size_t m, std::mt19937_64& rng, std::vector<Vec<F>>& sub) {
  if (m <= 1) return Verdict::Irreducible;
  auto coeff = [&] { return f.from_integer(Integer(static_cast<long>(rng() % 11) - 5)); };
  std::vector<FMatrix<F>> words = gens;
  for (const auto& a : gens)
    for (const auto& b : gens) words.push_back(mat_mul(f, a, b));
  const auto tgens = transpose_all<F>(gens);
  for (int attempt = 0; attempt < 40; ++attempt) {
    auto x = zero_matrix(f, m, m);
    for (const auto& w : words) {
      const auto c = coeff();
      if (!f.is_zero(c)) x = mat_add(f, x, mat_scale(f, c, w));
    }
    for (const auto& c : f.roots(charpoly(f, x))) {
      auto shifted = x;
      for (std::size_t i = 0; i < m; ++i) shifted(i, i) = f.sub(shifted(i, i), c);
      const auto ker = nullspace(f, shifted);
      if (ker.empty()) continue;
      for (const auto& v : ker) {
        auto s = spin(f, gens, {v});
        if (s.size() < m) {
          sub = std::move(s);
          return Verdict::Reducible;
        }
      }
      if (ker.size() != 1) continue;
      const auto tker = nullspace(f, shifted.transposed());
      auto t = spin(f, tgens, {tker.front()});
      if (t.size() == m) return Verdict::Irreducible;
      auto rows = zero_matrix(f, t.size(), m);
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) rows(i, j) = t[i][j];
      sub = nullspace(f, rows);
      return Verdict::Reducible;
    }
  }
  return Verdict::Undecided;
}

/// Irreducible composition factors; false when some step was undecided.
template <class F>
bool composition_factors(const F& f, const Gens<F>& gens, std::size_t m, std::mt19937_64& rng,
                         std::vector<Gens<F>>& out) {
  if (m == 0) return true;
  std::vector<Vec<F>> sub;
  switch (meataxe(f, gens, m, rng, sub)) {
    case Verdict::Irreducible:
      out.push_back(gens);
      return true;
    case Verdict::Undecided:
      return false;
    case Verdict::Reducible:
      break;
  }
  Echelon<F> ech(f);
  for (const auto& v : sub) ech.add(v);
  const std::size_t k = ech.dim();
  auto [s, q] = sub_and_quotient(f, gens, m, sub);
  const bool a = composition_factors(f, s, k, rng, out);
  const bool b = composition_factors(f, q, m - k, rng, out);
  return a && b;
}

/// True when Hom(A, B) != 0; for simple modules of equal dimension this is isomorphism.
template <class F>
bool nonzero_hom(const F& f, const Gens<F>& a, const Gens<F>& b) {
  const std::size_t m = a.front().rows();
  if (b.front().rows() != m) return false;
  auto eq = zero_matrix(f, a.size() * m * m, m * m);
  std::size_t row = 0;
  for (std::size_t g = 0; g < a.size(); ++g)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j, ++row)
        for (std::size_t l = 0; l < m; ++l) {
          // (X A)_{ij} - (B X)_{ij}
          eq(row, i * m + l) = f.add(eq(row, i * m + l), a[g](l, j));
          eq(row, l * m + j) = f.sub(eq(row, l * m + j), b[g](i, l));
        }
  return !nullspace(f, eq).empty();
}

/// Burnside: the algebra generated by `gens` is all of End(k^m).
template <class F>
bool absolutely_irreducible(const F& f, const Gens<F>& gens, std::size_t m) {
  Echelon<F> ech(f);
  std::vector<FMatrix<F>> queue{identity_matrix(f, m)};
  ech.add(queue.front().data());
  for (std::size_t i = 0; i < queue.size() && ech.dim() < m * m; ++i)
    for (const auto& g : gens) {
      auto x = mat_mul(f, g, queue[i]);
      if (ech.add(x.data())) queue.push_back(std::move(x));
    }
  return ech.dim() == m * m;
}

template <class F>
SpecializationResult run_specialization(const F& f, const typename F::Elem& q, const HeckeAlgebra& H,
                                        const CellDatum& datum, const std::vector<CellModule>& modules,
                                        const std::vector<PolyMatrix>& grams, std::uint64_t seed) {
  SpecializationResult res;
  Report& r = res.report;
  std::mt19937_64 rng(seed);

  std::vector<std::size_t> order(modules.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::make_pair(modules[x].a, modules[x].label) < std::make_pair(modules[y].a, modules[y].label);
  });

  // theta is a ring homomorphism on sampled polynomials.
  Witness hom;
  for (std::size_t i = 0; i + 1 < grams.size(); ++i) {
    const auto& p1 = grams[i](0, 0);
    const auto& p2 = grams[i + 1](0, 0);
    if (!f.eq(specialize_poly(f, p1 * p2, q), f.mul(specialize_poly(f, p1, q), specialize_poly(f, p2, q))) ||
        !f.eq(specialize_poly(f, p1 + p2, q), f.add(specialize_poly(f, p1, q), specialize_poly(f, p2, q))))
      hom.fail(lam(modules[i].label));
  }
  hom.into(r, "theta is a ring homomorphism on sampled entries");

  std::size_t covered = 0;
  for (const auto& l : datum.lambdas) covered += l.dim * l.dim;
  if (covered == datum.n) {
    const Integer det = determinant(transition_matrix(datum));
    r.add("(C1) transition determinant is a unit in k", !f.is_zero(f.from_integer(det)), "det = " + det.str());
  }

  std::vector<Gens<F>> spec(modules.size()), simple(modules.size());
  std::vector<std::size_t> ranks(modules.size());
  Witness radsub, simple_ok;
  for (std::size_t l = 0; l < modules.size(); ++l) {
    const auto& mod = modules[l];
    for (const auto& g : mod.gens) spec[l].push_back(specialize_matrix(f, g, q));
    const auto gk = specialize_matrix(f, grams[l], q);
    ranks[l] = rank(f, gk);
    const auto rad = nullspace(f, gk);
    Echelon<F> ech(f);
    for (const auto& v : rad) ech.add(v);
    for (const auto& g : spec[l])
      for (const auto& v : rad)
        if (!ech.contains(mat_vec(f, g, v))) radsub.fail(lam(mod.label));
    if (ranks[l] == 0) continue;
    simple[l] = sub_and_quotient(f, spec[l], mod.dim, rad).second;
    if (!absolutely_irreducible(f, simple[l], ranks[l])) simple_ok.fail(lam(mod.label));
  }
  radsub.into(r, "rad g_k is a submodule");
  simple_ok.into(r, "each nonzero L^lambda is absolutely irreducible");

  for (std::size_t l : order) {
    res.lambdas.push_back({modules[l].label, modules[l].a, modules[l].dim, ranks[l]});
    if (ranks[l] > 0) res.lambda_circ.push_back(modules[l].label);
  }
  r.add("Lambda-circ is nonempty", !res.lambda_circ.empty());

  std::vector<std::size_t> circ_index;  // module index of each column
  for (std::size_t l : order)
    if (ranks[l] > 0) circ_index.push_back(l);

  // Traces of T_w on W(lambda) and on each L^mu, for w in increasing order
  // until the L^mu traces are linearly independent.
  const auto& g = H.group();
  std::vector<std::vector<FMatrix<F>>> tw(modules.size()), tl(modules.size());
  std::vector<std::vector<typename F::Elem>> trw(modules.size()), trl(modules.size());
  auto trace = [&](const FMatrix<F>& m) {
    auto t = f.zero();
    for (std::size_t i = 0; i < m.rows(); ++i) t = f.add(t, m(i, i));
    return t;
  };
  auto extend = [&](std::vector<FMatrix<F>>& mats, const Gens<F>& gens, std::size_t dim, Elem w) {
    if (w == g.identity()) {
      mats.push_back(identity_matrix(f, dim));
    } else {
      const int s = g.word(w).front();
      mats.push_back(mat_mul(f, gens[s], mats[g.left_mul(s, w)]));
    }
  };
  Echelon<F> independent(f);
  std::vector<Elem> used;
  for (Elem w = 0; w < static_cast<Elem>(g.size()) && independent.dim() < circ_index.size(); ++w) {
    Vec<F> col;
    for (std::size_t c : circ_index) {
      extend(tl[c], simple[c], ranks[c], w);
      col.push_back(trace(tl[c].back()));
    }
    if (!independent.add(col)) continue;
    used.push_back(w);
  }
  r.add("L^mu characters are linearly independent", independent.dim() == circ_index.size());
  // Rows w of the trace table of the L^mu on the selected elements.
  auto table = zero_matrix(f, used.size(), circ_index.size());
  for (std::size_t i = 0; i < used.size(); ++i)
    for (std::size_t c = 0; c < circ_index.size(); ++c) table(i, c) = trace(tl[circ_index[c]][used[i]]);
  const std::optional<FMatrix<F>> table_inv =
      independent.dim() == circ_index.size() ? inverse(f, table) : std::nullopt;

  // Multiplicities as small integers; nullopt if the value is not one.
  auto as_count = [&](const typename F::Elem& x, std::size_t bound) -> std::optional<int> {
    for (std::size_t k = 0; k <= bound; ++k)
      if (f.eq(x, f.from_integer(Integer(k)))) return static_cast<int>(k);
    return std::nullopt;
  };

  const bool char0 = f.characteristic() == 0;
  Witness ident, dims, chars;
  for (std::size_t l : order) {
    const std::size_t dim = modules[l].dim;
    std::vector<int> row(circ_index.size(), 0);
    std::vector<typename F::Elem> wtr;
    {
      std::vector<FMatrix<F>> mats;
      for (Elem w = 0; w <= (used.empty() ? 0 : used.back()); ++w) extend(mats, spec[l], dim, w);
      for (Elem w : used) wtr.push_back(trace(mats[w]));
    }
    std::vector<typename F::Elem> by_trace(circ_index.size(), f.zero());
    if (table_inv)
      for (std::size_t c = 0; c < circ_index.size(); ++c)
        for (std::size_t i = 0; i < used.size(); ++i)
          by_trace[c] = f.add(by_trace[c], f.mul((*table_inv)(c, i), wtr[i]));

    if (char0) {
      // Characters of absolutely irreducible modules determine multiplicities.
      std::size_t total = 0;
      for (std::size_t c = 0; c < circ_index.size(); ++c) {
        const auto k = table_inv ? as_count(by_trace[c], dim) : std::nullopt;
        if (!k) {
          ident.fail(lam(modules[l].label));
          row[c] = -1;
          continue;
        }
        row[c] = *k;
        total += *k * ranks[circ_index[c]];
      }
      if (total != dim) dims.fail(lam(modules[l].label));
      res.decomposition.push_back(row);
      continue;
    }

    std::vector<Gens<F>> factors;
    if (!composition_factors(f, spec[l], dim, rng, factors)) {
      res.complete = false;
      std::fill(row.begin(), row.end(), -1);
      res.decomposition.push_back(row);
      continue;
    }
    std::size_t total = 0;
    for (const auto& fac : factors) {
      const std::size_t m = fac.front().rows();
      total += m;
      bool found = false;
      for (std::size_t c = 0; c < circ_index.size() && !found; ++c)
        if (ranks[circ_index[c]] == m && nonzero_hom(f, fac, simple[circ_index[c]])) {
          ++row[c];
          found = true;
        }
      if (!found) ident.fail(lam(modules[l].label) + " factor of dim " + std::to_string(m));
    }
    if (total != dim) dims.fail(lam(modules[l].label));
    // In characteristic p the characters only see multiplicities mod p.
    if (table_inv)
      for (std::size_t c = 0; c < circ_index.size(); ++c)
        if (!f.eq(by_trace[c], f.from_integer(Integer(row[c])))) chars.fail(lam(modules[l].label));
    res.decomposition.push_back(row);
  }
  ident.into(r, "every composition factor is some L^mu");
  dims.into(r, "composition factor dimensions add up");
  if (!char0) chars.into(r, "multiplicities agree with characters mod p");

  // (Delta) and the unitriangular shape.
  Witness diag, tri;
  for (std::size_t c = 0; c < circ_index.size(); ++c) {
    const std::size_t mu = circ_index[c];
    for (std::size_t ri = 0; ri < order.size(); ++ri) {
      const std::size_t l = order[ri];
      const int entry = res.decomposition[ri][c];
      if (entry < 0) continue;
      if (l == mu && entry != 1) diag.fail(lam(modules[mu].label));
      if (l != mu && entry != 0 && !datum.precedes(l, mu))
        tri.fail(lam(modules[l].label) + " mu=" + std::to_string(modules[mu].label));
    }
  }
  diag.into(r, "(Delta) [W_k(mu):L^mu] = 1");
  tri.into(r, "(Delta) [W_k(lambda):L^mu] = 0 unless lambda precedes mu");
  return res;
}

std::vector<Integer> bad_prime_list(const std::vector<JIrrep>& reps) {
  std::set<Integer> ps;
  for (const auto& p : bad_primes(reps)) ps.insert(p);
  for (const auto& rep : reps)
    for (const auto& p : prime_divisors(determinant(rep.B))) ps.insert(p);
  return {ps.begin(), ps.end()};
}

}  // namespace

std::vector<CellModule> cell_modules(const HeckeAlgebra& H, const PhiMap& phi, const AData& ad,
                                     const std::vector<JIrrep>& reps) {
  std::vector<CellModule> out;
  for (const auto& rep : reps) out.push_back({rep.label, rep.a, rep.dim, generator_actions(H, phi, ad, rep.rho)});
  return out;
}

std::vector<PolyMatrix> cellular_actions(const PhiMap& phi, const CellDatum& datum, const JIrrep& rep, std::size_t l) {
  const std::size_t d = rep.dim;
  std::vector<PolyMatrix> out;
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t)
      out.push_back(r_coefficients(phi.apply(as_hecke(datum.element(l, s, t))), rep.rho));
  return out;
}

PolyMatrix gram_g(const std::vector<PolyMatrix>& actions, std::size_t d) {
  PolyMatrix g(d, d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = 0; t < d; ++t) g(s, t) = actions[s * d + t](s, s);
  return g;
}

Report verify_cellmod(const HeckeAlgebra& H, const std::vector<JIrrep>& reps, const std::vector<CellModule>& modules,
                      const std::vector<std::vector<PolyMatrix>>& actions, const std::vector<PolyMatrix>& grams) {
  const auto& g = H.group();
  Report r;
  Witness quad, braid, sym, inv, rank1, lead, det;
  const RationalField Q;
  for (std::size_t l = 0; l < modules.size(); ++l) {
    const auto& mod = modules[l];
    const std::size_t d = mod.dim;
    const PolyMatrix id = identity_poly(d);
    for (int s = 0; s < g.rank(); ++s) {
      const auto& R = mod.gens[s];
      if (R * R != id + H.qdiff(s) * R) quad.fail(lam(mod.label) + " s=" + std::to_string(s + 1));
      for (int t = s + 1; t < g.rank(); ++t) {
        const int m = g.coxeter_m(s, t);
        PolyMatrix x = id, y = id;
        for (int i = 0; i < m; ++i) {
          x = x * mod.gens[i % 2 ? t : s];
          y = y * mod.gens[i % 2 ? s : t];
        }
        if (x != y) braid.fail(lam(mod.label) + " s=" + std::to_string(s + 1) + " t=" + std::to_string(t + 1));
      }
      if (R.transposed() * grams[l] != grams[l] * R) inv.fail(lam(mod.label) + " s=" + std::to_string(s + 1));
    }
    const auto& G = grams[l];
    if (G != G.transposed()) sym.fail(lam(mod.label));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const auto& act = actions[l][a * d + b];
        for (std::size_t s2 = 0; s2 < d; ++s2)
          for (std::size_t u = 0; u < d; ++u) {
            const LaurentPoly expect = s2 == a ? G(b, u) : LaurentPoly();
            if (act(s2, u) != expect) rank1.fail(lam(mod.label) + " a=" + std::to_string(a + 1) + " b=" + std::to_string(b + 1));
          }
      }
    const auto& rep = reps[l];
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t) {
        const auto& p = G(s, t);
        const Integer expect = rep.f * rep.B(s, t);
        const bool ok = (p.is_zero() || p.min_exp() >= -rep.a) && p.coeff_at(-rep.a) == expect;
        if (!ok) lead.fail(lam(mod.label) + " s=" + std::to_string(s + 1) + " t=" + std::to_string(t + 1));
      }
    bool nonzero = false;
    for (int pt : {2, 3, 5, 7, 11}) {
      FMatrix<RationalField> m(d, d, Rational(0));
      for (std::size_t i = 0; i < d * d; ++i) m.data()[i] = G.data()[i].evaluate(Rational(pt));
      if (determinant(Q, m) != 0) {
        nonzero = true;
        break;
      }
    }
    if (!nonzero) det.fail(lam(mod.label));
  }
  quad.into(r, "T_s^2 = 1 + (v^L - v^-L) T_s on W(lambda)");
  braid.into(r, "braid relations on W(lambda)");
  sym.into(r, "g^lambda is symmetric");
  inv.into(r, "g(T_s x, y) = g(x, T_s y)");
  rank1.into(r, "C_{a,b} acts on W(lambda) as C_a g(C_b, -)");
  lead.into(r, "v^a g^lambda = f_lambda B^lambda mod v Z[v]");
  det.into(r, "det g^lambda != 0");
  return r;
}

SpecTarget parse_target(const std::string& at, const std::string& field) {
  SpecTarget t;
  t.field_text = field;
  t.at_text = at;
  if (field == "Q") {
    t.kind = SpecTarget::Kind::Rational;
  } else if (field.rfind("Fp:", 0) == 0) {
    t.kind = SpecTarget::Kind::Prime;
    try {
      t.p = std::stoull(field.substr(3));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad field: " + field);
    }
    if (!is_prime(t.p) || t.p >= (1ULL << 62)) throw std::invalid_argument("Fp:p needs a prime p < 2^62, got " + field);
  } else if (field.rfind("Cyc:", 0) == 0) {
    t.kind = SpecTarget::Kind::Cyclotomic;
    try {
      t.e = std::stoi(field.substr(4));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad field: " + field);
    }
    if (t.e < 1 || t.e > 60) throw std::invalid_argument("Cyc:e needs 1 <= e <= 60, got " + field);
  } else {
    throw std::invalid_argument("unknown field '" + field + "' (expected Q, Fp:p or Cyc:e)");
  }

  if (at.rfind("v=", 0) != 0) throw std::invalid_argument("--at must look like v=VALUE, got " + at);
  const std::string val = at.substr(2);
  if (!val.empty() && val[0] == 'z') {
    if (t.kind != SpecTarget::Kind::Cyclotomic) throw std::invalid_argument("v=z needs --field Cyc:e");
    t.v_is_zeta = true;
    if (val.size() > 1) {
      if (val[1] != '^') throw std::invalid_argument("bad value " + val);
      try {
        t.zeta_exp = std::stol(val.substr(2));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad value " + val);
      }
    }
    return t;
  }
  try {
    t.q = Rational(val);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad value for v: " + val);
  }
  if (t.q == 0) throw std::invalid_argument("v must be sent to a unit, got v=0");
  if (t.kind == SpecTarget::Kind::Prime && boost::multiprecision::denominator(t.q) % t.p == 0)
    throw std::invalid_argument("v=" + val + " is not defined in F_" + std::to_string(t.p));
  return t;
}

SpecializationResult specialize(const HeckeAlgebra& H, const std::vector<JIrrep>& reps, const CellDatum& datum,
                                const std::vector<CellModule>& modules, const std::vector<PolyMatrix>& grams,
                                const SpecTarget& target, std::uint64_t seed) {
  SpecializationResult res;
  switch (target.kind) {
    case SpecTarget::Kind::Rational: {
      const RationalField f;
      res = run_specialization(f, target.q, H, datum, modules, grams, seed);
      break;
    }
    case SpecTarget::Kind::Prime: {
      for (const auto& p : bad_prime_list(reps))
        if (p == target.p)
          throw BadPrimeTarget(std::to_string(target.p) + " is a bad prime for this weight function; F_" +
                               std::to_string(target.p) + " is not an admissible target");
      const PrimeField f(target.p);
      const auto q = f.mul(f.from_integer(boost::multiprecision::numerator(target.q)),
                           f.inv(f.from_integer(boost::multiprecision::denominator(target.q))));
      if (f.is_zero(q)) throw std::invalid_argument("v must be sent to a unit of F_" + std::to_string(target.p));
      res = run_specialization(f, q, H, datum, modules, grams, seed);
      break;
    }
    case SpecTarget::Kind::Cyclotomic: {
      const CyclotomicField f(target.e);
      typename CyclotomicField::Elem q;
      if (target.v_is_zeta) {
        q = f.zeta_power(target.zeta_exp);
      } else {
        q = f.mul(f.from_integer(boost::multiprecision::numerator(target.q)),
                  f.inv(f.from_integer(boost::multiprecision::denominator(target.q))));
      }
      res = run_specialization(f, q, H, datum, modules, grams, seed);
      break;
    }
  }
  res.field = target.field_text;
  res.at = target.at_text;
  return res;
}

}  // namespace heckecell
