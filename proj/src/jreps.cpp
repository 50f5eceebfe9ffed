#include "heckecell/jreps.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace heckecell {

namespace {

using QVec = std::vector<Rational>;
using QMat = FMatrix<RationalField>;
const RationalField kQ;

QMat to_q(const IntMatrix& m) { return lift_int_matrix(kQ, m); }

/// Subspace of Q^k kept in reduced row echelon form.
struct Subspace {
  std::vector<QVec> rows;
  std::vector<std::size_t> pivots;
  std::size_t dim() const { return rows.size(); }
};

Subspace make_subspace(const std::vector<QVec>& vecs, std::size_t k) {
  Subspace s;
  if (vecs.empty()) return s;
  QMat m(vecs.size(), k, Rational(0));
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = vecs[i][j];
  s.pivots = rref(kQ, m);
  for (std::size_t i = 0; i < s.pivots.size(); ++i) {
    QVec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = m(i, j);
    s.rows.push_back(std::move(row));
  }
  return s;
}

QVec lift(const Subspace& u, const QVec& coords) {
  QVec v(u.rows.front().size(), Rational(0));
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += coords[i] * u.rows[i][j];
  return v;
}

const PrimeField kP(2305843009213693951ULL);

/// Left multiplications (the J-action) and right multiplications by
/// t_y, y in the cell and its inverse (which commute with it), on a left cell.
struct CellAction {
  std::vector<QMat> gens;
  std::vector<FMatrix<PrimeField>> gens_p;
  std::vector<QMat> endo;
};

std::optional<std::uint64_t> reduce_mod_p(const Rational& x) {
  const Integer den = boost::multiprecision::denominator(x);
  if (den % kP.p == 0) return std::nullopt;
  return kP.mul(kP.from_integer(boost::multiprecision::numerator(x)), kP.inv(kP.from_integer(den)));
}

/// Action on u: column j holds the coordinates of M u_j.
template <class F>
std::vector<FMatrix<F>> restrict(const F& f, const std::vector<FMatrix<F>>& gens,
                                 const std::vector<std::vector<typename F::Elem>>& rows,
                                 const std::vector<std::size_t>& pivots) {
  std::vector<FMatrix<F>> out;
  const std::size_t m = rows.size();
  for (const auto& g : gens) {
    auto a = zero_matrix(f, m, m);
    for (std::size_t j = 0; j < m; ++j) {
      const auto img = mat_vec(f, g, rows[j]);
      for (std::size_t i = 0; i < m; ++i) a(i, j) = img[pivots[i]];
    }
    out.push_back(std::move(a));
  }
  return out;
}

/// Basis of {X : X A = A X for all A}, narrowed one generator at a time.
template <class F>
std::vector<FMatrix<F>> commutant(const F& f, const std::vector<FMatrix<F>>& acts, std::size_t m) {
  std::vector<FMatrix<F>> basis;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto e = zero_matrix(f, m, m);
      e(i, j) = f.one();
      basis.push_back(std::move(e));
    }
  for (const auto& a : acts) {
    if (basis.size() <= 1) break;
    auto eq = zero_matrix(f, m * m, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto c = mat_mul(f, basis[k], a);
      const auto d = mat_mul(f, a, basis[k]);
      for (std::size_t i = 0; i < m * m; ++i) eq(i, k) = f.sub(c.data()[i], d.data()[i]);
    }
    std::vector<FMatrix<F>> next;
    for (const auto& v : nullspace(f, eq)) {
      auto x = zero_matrix(f, m, m);
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (!f.is_zero(v[k]))
          for (std::size_t i = 0; i < m * m; ++i)
            x.data()[i] = f.add(x.data()[i], f.mul(v[k], basis[k].data()[i]));
      next.push_back(std::move(x));
    }
    basis = std::move(next);
  }
  return basis;
}

/// True when the commutant is one-dimensional modulo a large prime, which
/// forces the same over Q.
bool irreducible_mod_p(const CellAction& ca, const Subspace& u) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& r : u.rows) {
    std::vector<std::uint64_t> row;
    for (const auto& x : r) {
      auto y = reduce_mod_p(x);
      if (!y) return false;
      row.push_back(*y);
    }
    rows.push_back(std::move(row));
  }
  return commutant(kP, restrict(kP, ca.gens_p, rows, u.pivots), u.dim()).size() == 1;
}

/// The endomorphisms of u obtained by compressing those of the whole cell
/// with the orthogonal projection onto u.
std::vector<QMat> compressed_endo(const CellAction& ca, const Subspace& u) {
  const std::size_t m = u.dim(), k = u.rows.front().size();
  QMat gram(m, m, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l) gram(i, j) += u.rows[i][l] * u.rows[j][l];
  const QMat ginv = *inverse(kQ, gram);
  std::vector<QMat> out;
  for (const auto& x : ca.endo) {
    QMat dots(m, m, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
      const QVec img = mat_vec(kQ, x, u.rows[j]);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l) dots(i, j) += u.rows[i][l] * img[l];
    }
    out.push_back(mat_mul(kQ, ginv, dots));
  }
  return out;
}

/// A proper nonzero subspace of Q^m that is the kernel of some element of
/// the span of comm (hence invariant), if one is found.
std::optional<std::vector<QVec>> eigen_kernel(const std::vector<QMat>& comm, std::size_t m, std::mt19937_64& rng) {
  auto try_kernel = [&](const QMat& x) -> std::optional<std::vector<QVec>> {
    auto ker = nullspace(kQ, x);
    if (!ker.empty() && ker.size() < m) return ker;
    return std::nullopt;
  };
  for (int attempt = 0; attempt < 20; ++attempt) {
    QMat x(m, m, Rational(0));
    for (const auto& n : comm) {
      const Rational r(static_cast<long>(rng() % 7) - 3);
      if (r != 0)
        for (std::size_t i = 0; i < m * m; ++i) x.data()[i] += r * n.data()[i];
    }
    for (const auto& c : kQ.roots(charpoly(kQ, x))) {
      QMat shifted = x;
      for (std::size_t i = 0; i < m; ++i) shifted(i, i) -= c;
      if (auto k = try_kernel(shifted)) return k;
    }
  }
  for (const auto& n : comm)
    if (auto k = try_kernel(n)) return k;
  return std::nullopt;
}

/// Splits u (a submodule of a left-cell module, whose standard inner product
/// is invariant) into irreducible submodules.
void split(const CellAction& ca, const Subspace& u, std::mt19937_64& rng, std::vector<Subspace>& out) {
  const std::size_t m = u.dim();
  if (m == 1 || irreducible_mod_p(ca, u)) {
    out.push_back(u);
    return;
  }
  auto sub = eigen_kernel(compressed_endo(ca, u), m, rng);
  if (!sub) {
    const auto acts = restrict(kQ, ca.gens, u.rows, u.pivots);
    for (std::size_t i = 0; i < m && !sub; ++i) {
      QVec e(m, Rational(0));
      e[i] = 1;
      auto s = spin(kQ, acts, {e});
      if (s.size() < m) sub = std::move(s);
    }
    if (!sub) {
      const auto comm = commutant(kQ, acts, m);
      if (comm.size() <= 1) {
        out.push_back(u);
        return;
      }
      sub = eigen_kernel(comm, m, rng);
    }
    if (!sub) throw std::runtime_error("could not split a reducible left-cell module");
  }
  std::vector<QVec> kvecs;
  for (const auto& c : *sub) kvecs.push_back(lift(u, c));
  const std::size_t k = u.rows.front().size();
  const Subspace K = make_subspace(kvecs, k);
  // Orthogonal complement of K inside u.
  QMat eq(K.dim(), m, Rational(0));
  for (std::size_t i = 0; i < K.dim(); ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Rational dot = 0;
      for (std::size_t l = 0; l < k; ++l) dot += K.rows[i][l] * u.rows[j][l];
      eq(i, j) = dot;
    }
  std::vector<QVec> cvecs;
  for (const auto& c : nullspace(kQ, eq)) cvecs.push_back(lift(u, c));
  split(ca, K, rng, out);
  split(ca, make_subspace(cvecs, k), rng, out);
}

std::vector<Integer> clear_denominators(const QVec& v) {
  Integer l = 1;
  for (const auto& x : v) {
    const Integer d = boost::multiprecision::denominator(x);
    l = l / gcd(l, d) * d;
  }
  std::vector<Integer> out;
  for (const auto& x : v) out.push_back(to_integer(x * l));
  return make_primitive(out);
}

std::vector<Integer> int_mat_vec(const IntMatrix& m, const std::vector<Integer>& v) {
  std::vector<Integer> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[i] += m(i, j) * v[j];
  return out;
}

/// Coordinates of v on an HNF basis (exact; throws if v is not in the lattice).
std::vector<Integer> hnf_coords(const std::vector<std::vector<Integer>>& basis, std::vector<Integer> v) {
  std::vector<Integer> c(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t p = 0;
    while (basis[i][p] == 0) ++p;
    if (v[p] % basis[i][p] != 0) throw std::logic_error("vector outside the invariant lattice");
    c[i] = v[p] / basis[i][p];
    if (c[i] != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c[i] * basis[i][j];
  }
  for (const auto& x : v)
    if (x != 0) throw std::logic_error("vector outside the invariant lattice");
  return c;
}

std::vector<Integer> character_of(const CoxeterGroup& g, const std::vector<IntMatrix>& rho) {
  std::vector<Integer> ch(g.size());
  for (std::size_t w = 0; w < g.size(); ++w) ch[w] = trace(rho[w]);
  return ch;
}

}  // namespace

std::vector<IntMatrix> left_cell_module(const GammaTable& gt, const std::vector<Elem>& cell) {
  const std::size_t k = cell.size();
  std::map<Elem, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) pos[cell[i]] = i;
  std::vector<IntMatrix> out(gt.n, IntMatrix(k, k));
  for (std::size_t w = 0; w < gt.n; ++w)
    for (std::size_t t = 0; t < k; ++t)
      for (const auto& term : gt.product(static_cast<Elem>(w), cell[t])) {
        auto it = pos.find(term.z);
        if (it != pos.end()) out[w](it->second, t) = term.g;
      }
  return out;
}

std::vector<IntMatrix> right_endomorphisms(const GammaTable& gt, const std::vector<Elem>& cell) {
  const std::size_t k = cell.size();
  std::map<Elem, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i) pos[cell[i]] = i;
  std::vector<IntMatrix> out;
  for (Elem y : cell) {
    if (!pos.count(gt.inverse[y])) continue;
    IntMatrix r(k, k);
    for (std::size_t t = 0; t < k; ++t)
      for (const auto& term : gt.product(cell[t], y)) {
        auto it = pos.find(term.z);
        if (it != pos.end()) r(it->second, t) = term.g;
      }
    out.push_back(std::move(r));
  }
  return out;
}

std::pair<int, Integer> invariants_af(const CoxeterGroup& g, const AData& ad, const std::vector<IntMatrix>& rho) {
  int a = -2;
  for (std::size_t w = 0; w < g.size(); ++w) {
    if (is_zero(rho[w])) continue;
    if (a == -2) a = ad.a[w];
    else if (a != ad.a[w]) a = -1;
  }
  if (a == -2) a = -1;
  Integer sum = 0;
  for (std::size_t w = 0; w < g.size(); ++w) sum += trace(rho[w]) * trace(rho[g.inverse(static_cast<Elem>(w))]);
  const Integer d = rho.empty() ? Integer(1) : Integer(rho.front().rows());
  Integer f = 0;
  if (sum > 0 && sum % d == 0) f = sum / d;
  return {a, f};
}

std::pair<IntMatrix, Integer> gram_B(const std::vector<IntMatrix>& rho) {
  const std::size_t d = rho.front().rows();
  IntMatrix b1(d, d);
  for (const auto& m : rho)
    if (!is_zero(m)) b1 = b1 + m.transposed() * m;
  return gcd_normalize(b1);
}

std::vector<JIrrep> irreducible_reps(const CoxeterGroup& g, const GammaTable& gt, const AData& ad,
                                     const CellPartition& cp, std::uint64_t seed) {
  const std::size_t n = g.size();
  std::mt19937_64 rng(seed);
  std::vector<JIrrep> reps;
  std::set<std::vector<Integer>> seen;
  std::size_t total = 0;
  const auto cells = cp.left_cells();
  for (std::size_t ci = 0; ci < cells.size() && total < n; ++ci) {
    const auto& cell = cells[ci];
    const std::size_t k = cell.size();
    const auto mods = left_cell_module(gt, cell);
    CellAction ca;
    std::vector<Elem> active;
    for (std::size_t w = 0; w < n; ++w)
      if (!is_zero(mods[w])) {
        ca.gens.push_back(to_q(mods[w]));
        ca.gens_p.push_back(lift_int_matrix(kP, mods[w]));
        active.push_back(static_cast<Elem>(w));
      }
    for (const auto& y : right_endomorphisms(gt, cell)) ca.endo.push_back(to_q(y));
    std::vector<QVec> unit;
    for (std::size_t i = 0; i < k; ++i) {
      QVec e(k, Rational(0));
      e[i] = 1;
      unit.push_back(e);
    }
    std::vector<Subspace> pieces;
    split(ca, make_subspace(unit, k), rng, pieces);

    for (const auto& piece : pieces) {
      std::vector<IntMatrix> rho(n);
      const std::size_t m = piece.dim();
      if (m == k) {
        rho = mods;
      } else {
        const auto u = clear_denominators(piece.rows.front());
        std::vector<std::vector<Integer>> spanning{u};
        for (Elem w : active) spanning.push_back(int_mat_vec(mods[w], u));
        const auto basis = hermite_normal_form(spanning);
        if (basis.size() != m) throw std::runtime_error("lattice rank differs from the irreducible dimension");
        for (std::size_t w = 0; w < n; ++w) {
          rho[w] = IntMatrix(m, m);
          if (is_zero(mods[w])) continue;
          for (std::size_t j = 0; j < m; ++j) {
            const auto c = hnf_coords(basis, int_mat_vec(mods[w], basis[j]));
            for (std::size_t i = 0; i < m; ++i) rho[w](i, j) = c[i];
          }
        }
      }
      auto ch = character_of(g, rho);
      if (!seen.insert(ch).second) continue;
      JIrrep rep;
      rep.label = static_cast<int>(reps.size());
      rep.dim = m;
      rep.rho = std::move(rho);
      for (std::size_t w = 0; w < n; ++w)
        if (!is_zero(rep.rho[w])) rep.support.push_back(static_cast<Elem>(w));
      std::tie(rep.a, rep.f) = invariants_af(g, ad, rep.rho);
      std::tie(rep.B, rep.B_scale) = gram_B(rep.rho);
      rep.source_cell = static_cast<int>(ci);
      rep.character = std::move(ch);
      total += m * m;
      reps.push_back(std::move(rep));
    }
  }
  if (total != n)
    throw std::runtime_error("irreducible J-representations incomplete: sum of d^2 = " + std::to_string(total) +
                             " but |W| = " + std::to_string(n));
  return reps;
}

std::vector<Integer> bad_primes(const std::vector<JIrrep>& reps) {
  std::set<Integer> ps;
  for (const auto& r : reps)
    for (const auto& p : prime_divisors(r.f)) ps.insert(p);
  return {ps.begin(), ps.end()};
}

std::optional<std::vector<Integer>> tabulated_bad_primes(const CartanType& t, const WeightFunction& L) {
  if (!L.is_equal_parameter()) {
    if (t.family == Family::B && t.rank == 2) return std::vector<Integer>{};
    return std::nullopt;
  }
  switch (t.family) {
    case Family::A: return std::vector<Integer>{};
    case Family::B:
    case Family::D: return std::vector<Integer>{2};
    case Family::G:
    case Family::F: return std::vector<Integer>{2, 3};
  }
  return std::nullopt;
}

Report verify_jreps(const CoxeterGroup& g, const WeightFunction& L, const GammaTable& gt, const AData& ad,
                    const std::vector<JIrrep>& reps) {
  Report r;
  const std::size_t n = g.size();

  std::size_t total = 0;
  for (const auto& rep : reps) total += rep.dim * rep.dim;
  r.add("sum of d^2 = |W|", total == n, std::to_string(total) + " vs " + std::to_string(n));

  std::set<std::vector<Integer>> chars;
  for (const auto& rep : reps) chars.insert(rep.character);
  r.add("characters are distinct", chars.size() == reps.size());

  Witness repprop;
  for (const auto& rep : reps) {
    const std::size_t d = rep.dim;
    const bool full = n <= 200;
    for (std::size_t x = 0; x < n && repprop.ok(); ++x) {
      if (!full && is_zero(rep.rho[x])) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (!full && is_zero(rep.rho[y])) continue;
        IntMatrix rhs(d, d);
        for (const auto& t : gt.product(static_cast<Elem>(x), static_cast<Elem>(y)))
          rhs = rhs + t.g * rep.rho[t.z];
        if (rep.rho[x] * rep.rho[y] != rhs) {
          repprop.fail("lambda=" + std::to_string(rep.label) + " x=" + g.format(static_cast<Elem>(x)) +
                       " y=" + g.format(static_cast<Elem>(y)));
          break;
        }
      }
    }
  }
  repprop.into(r, "representation property");

  Witness supp, fpos;
  for (const auto& rep : reps) {
    if (rep.a < 0 || invariants_af(g, ad, rep.rho).first != rep.a) supp.fail("lambda=" + std::to_string(rep.label));
    if (rep.f <= 0) fpos.fail("lambda=" + std::to_string(rep.label));
  }
  supp.into(r, "rho(t_w) = 0 unless a(w) = a_lambda");
  fpos.into(r, "f_lambda is a positive integer");

  // First Schur relations.
  Witness schur1;
  for (const auto& lam : reps)
    for (const auto& mu : reps) {
      const std::size_t dl = lam.dim, dm = mu.dim;
      std::vector<Integer> sums(dl * dl * dm * dm, 0);
      for (Elem w : lam.support) {
        const auto& B = mu.rho[g.inverse(w)];
        if (is_zero(B)) continue;
        const auto& A = lam.rho[w];
        for (std::size_t s = 0; s < dl; ++s)
          for (std::size_t t = 0; t < dl; ++t) {
            if (A(s, t) == 0) continue;
            for (std::size_t u = 0; u < dm; ++u)
              for (std::size_t v = 0; v < dm; ++v) sums[((s * dl + t) * dm + u) * dm + v] += A(s, t) * B(u, v);
          }
      }
      for (std::size_t s = 0; s < dl; ++s)
        for (std::size_t t = 0; t < dl; ++t)
          for (std::size_t u = 0; u < dm; ++u)
            for (std::size_t v = 0; v < dm; ++v) {
              const bool diag = lam.label == mu.label && s == v && t == u;
              const Integer expect = diag ? lam.f : Integer(0);
              if (sums[((s * dl + t) * dm + u) * dm + v] != expect)
                schur1.fail("(" + std::to_string(lam.label) + "," + std::to_string(s + 1) + "," + std::to_string(t + 1) +
                            ") vs (" + std::to_string(mu.label) + "," + std::to_string(u + 1) + "," +
                            std::to_string(v + 1) + ")");
            }
    }
  schur1.into(r, "Schur relations (first family)");

  // Second Schur relations: sum_lambda tr(rho(t_x) rho(t_{y^-1})) / f_lambda = delta_{xy}.
  Witness schur2;
  for (std::size_t x = 0; x < n && schur2.ok(); ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Rational acc = 0;
      for (const auto& rep : reps) {
        const auto& A = rep.rho[x];
        const auto& B = rep.rho[g.inverse(static_cast<Elem>(y))];
        if (is_zero(A) || is_zero(B) || rep.f == 0) continue;
        acc += Rational(trace(A * B)) / Rational(rep.f);
      }
      if (acc != (x == y ? 1 : 0)) {
        schur2.fail("x=" + g.format(static_cast<Elem>(x)) + " y=" + g.format(static_cast<Elem>(y)));
        break;
      }
    }
  schur2.into(r, "Schur relations (second family)");

  const auto bad = bad_primes(reps);
  const std::set<Integer> bad_set(bad.begin(), bad.end());
  Witness bsym, bpd, bint, bgcd, bdet;
  std::set<Integer> found = bad_set;
  for (const auto& rep : reps) {
    const std::string lab = "lambda=" + std::to_string(rep.label);
    if (!is_symmetric(rep.B)) bsym.fail(lab);
    if (!is_positive_definite(rep.B)) bpd.fail(lab);
    for (std::size_t w = 0; w < n; ++w)
      if (rep.B * rep.rho[g.inverse(static_cast<Elem>(w))] != rep.rho[w].transposed() * rep.B) {
        bint.fail(lab + " w=" + g.format(static_cast<Elem>(w)));
        break;
      }
    if (gcd_normalize(rep.B).second != 1) bgcd.fail(lab);
    for (const auto& p : prime_divisors(determinant(rep.B))) {
      if (!bad_set.count(p)) bdet.fail(lab + " p=" + p.str());
      found.insert(p);
    }
  }
  bsym.into(r, "B symmetric");
  bpd.into(r, "B positive definite");
  bint.into(r, "B rho(t_{w^-1}) = rho(t_w)^T B");
  bgcd.into(r, "B has entry gcd 1");
  bdet.into(r, "primes dividing det B are bad");

  if (auto table = tabulated_bad_primes(g.type(), L)) {
    const std::set<Integer> expect(table->begin(), table->end());
    std::string got;
    for (const auto& p : found) got += (got.empty() ? "" : ",") + p.str();
    r.add("bad primes match the table", found == expect, "found {" + got + "}");
    if (expect.empty()) {
      bool all_one = std::all_of(reps.begin(), reps.end(), [](const JIrrep& rep) { return rep.f == 1; });
      r.add("f_lambda = 1 for all lambda", all_one);
    }
  }
  return r;
}

}  // namespace heckecell
