#include "heckecell/cells.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace heckecell {

namespace {

/// Reflexive-transitive closure of an adjacency relation (Warshall on bitsets).
std::vector<Bitset> closure(std::vector<Bitset> reach) {
  const std::size_t n = reach.size();
  for (std::size_t i = 0; i < n; ++i) set_bit(reach[i], i);
  for (std::size_t k = 0; k < n; ++k) {
    const Bitset& rk = reach[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (!test_bit(reach[i], k)) continue;
      auto& ri = reach[i];
      for (std::size_t b = 0; b < ri.size(); ++b) ri[b] |= rk[b];
    }
  }
  return reach;
}

/// Cells of a preorder numbered by their minimal element.
std::vector<int> classes(const std::vector<Bitset>& below, int& count) {
  const std::size_t n = below.size();
  std::vector<int> id(n, -1);
  count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (id[x] >= 0) continue;
    for (std::size_t y = x; y < n; ++y)
      if (id[y] < 0 && test_bit(below[x], y) && test_bit(below[y], x)) id[y] = count;
    ++count;
  }
  return id;
}

std::vector<std::vector<Elem>> group_by(const std::vector<int>& id, int count) {
  std::vector<std::vector<Elem>> out(static_cast<std::size_t>(count));
  for (std::size_t w = 0; w < id.size(); ++w) out[id[w]].push_back(static_cast<Elem>(w));
  return out;
}

std::string set_string(const CoxeterGroup& g, const std::vector<Elem>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + g.format(xs[i]);
  return s + "}";
}

}  // namespace

std::vector<std::vector<Elem>> CellPartition::left_cells() const { return group_by(left, num_left); }
std::vector<std::vector<Elem>> CellPartition::two_sided_cells() const { return group_by(two_sided, num_two_sided); }

std::vector<int> a_function(const HTable& h) {
  std::vector<int> a(h.n, 0);
  for (const auto& row : h.rows)
    for (const auto& t : row) a[t.z] = std::max(a[t.z], -t.h.min_exp());
  return a;
}

void delta_n(const KLTable& kl, AData& ad) {
  const std::size_t n = kl.size();
  ad.delta.assign(n, 0);
  ad.nz.assign(n, 0);
  for (std::size_t z = 0; z < n; ++z) {
    const auto& p = kl.p(0, static_cast<Elem>(z));
    if (p.is_zero()) throw DegenerateInput("degenerate weight function: p_{1,z} = 0");
    ad.delta[z] = -p.max_exp();
    ad.nz[z] = p.leading_coeff();
  }
}

CellPartition cell_partition(const CoxeterGroup& g, const HTable& h) {
  const std::size_t n = g.size();
  const std::size_t blocks = (n + 63) / 64;
  std::vector<Bitset> left_adj(n, Bitset(blocks, 0));
  std::vector<Bitset> lr_adj(n, Bitset(blocks, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& t : h.row(static_cast<Elem>(x), static_cast<Elem>(y))) {
        set_bit(left_adj[y], static_cast<std::size_t>(t.z));  // z <=_L y
        set_bit(lr_adj[y], static_cast<std::size_t>(t.z));
        set_bit(lr_adj[x], static_cast<std::size_t>(t.z));    // z <=_R x
      }
  CellPartition cp;
  cp.left_below = closure(std::move(left_adj));
  cp.lr_below = closure(std::move(lr_adj));
  cp.left = classes(cp.left_below, cp.num_left);
  cp.two_sided = classes(cp.lr_below, cp.num_two_sided);
  // Right cells are the inverses of left cells.
  cp.right.assign(n, -1);
  cp.num_right = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (cp.right[x] >= 0) continue;
    const int lx = cp.left[g.inverse(static_cast<Elem>(x))];
    for (std::size_t y = x; y < n; ++y)
      if (cp.right[y] < 0 && cp.left[g.inverse(static_cast<Elem>(y))] == lx) cp.right[y] = cp.num_right;
    ++cp.num_right;
  }
  return cp;
}

int nhat(const CoxeterGroup& g, const CellPartition& cp, const AData& ad, Elem z) {
  const int cell = cp.left[g.inverse(z)];
  int found = 0;
  int value = 0;
  for (Elem d : ad.dset)
    if (cp.left[d] == cell) {
      ++found;
      value = static_cast<int>(ad.nz[d]);
    }
  return found == 1 ? value : 0;
}

AData compute_adata(const CoxeterGroup& g, const KLTable& kl, const HTable& h, const CellPartition& cp) {
  AData ad;
  ad.a = a_function(h);
  delta_n(kl, ad);
  const std::size_t n = g.size();
  ad.in_d.assign(n, false);
  for (std::size_t z = 0; z < n; ++z)
    if (ad.a[z] == ad.delta[z]) {
      ad.dset.push_back(static_cast<Elem>(z));
      ad.in_d[z] = true;
    }
  ad.nhat.resize(n);
  for (std::size_t z = 0; z < n; ++z) {
    // n_d = +-1 is itself checked (P5); keep a sign only when it is one.
    const int v = nhat(g, cp, ad, static_cast<Elem>(z));
    ad.nhat[z] = (v == 1 || v == -1) ? v : 0;
  }
  return ad;
}

Report verify_cells(const CoxeterGroup& g, const WeightFunction& L, const HTable& h, const AData& ad,
                    const CellPartition& cp) {
  Report r;
  const std::size_t n = g.size();

  Witness p1;
  for (std::size_t z = 0; z < n; ++z)
    if (ad.a[z] > ad.delta[z])
      p1.fail("z=" + g.format(static_cast<Elem>(z)) + " a=" + std::to_string(ad.a[z]) +
              " Delta=" + std::to_string(ad.delta[z]));
  p1.into(r, "P1: a(z) <= Delta(z)");

  Witness p4const;
  std::vector<int> cell_a(static_cast<std::size_t>(cp.num_two_sided), -1);
  for (std::size_t z = 0; z < n; ++z) {
    int& ca = cell_a[cp.two_sided[z]];
    if (ca < 0) ca = ad.a[z];
    else if (ca != ad.a[z]) p4const.fail("two-sided cell " + std::to_string(cp.two_sided[z]) + " at " + g.format(static_cast<Elem>(z)));
  }
  p4const.into(r, "P4: a constant on two-sided cells");

  Witness p4order;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      if (cp.two_sided[z] != cp.two_sided[y] && test_bit(cp.lr_below[y], z) && !(ad.a[z] > ad.a[y]))
        p4order.fail(g.format(static_cast<Elem>(z)) + " <=_LR " + g.format(static_cast<Elem>(y)) + " but a does not increase");
  p4order.into(r, "P4: a strictly increases down the two-sided order");

  Witness p5, p6;
  for (Elem d : ad.dset) {
    if (ad.nz[d] != 1 && ad.nz[d] != -1) p5.fail("d=" + g.format(d) + " n_d=" + ad.nz[d].str());
    if (g.inverse(d) != d) p6.fail("d=" + g.format(d) + " is not an involution");
  }
  p5.into(r, "P5: n_d = +-1 for d in D");
  p6.into(r, "P6: elements of D are involutions");

  Witness p13;
  std::vector<int> count(static_cast<std::size_t>(cp.num_left), 0);
  for (Elem d : ad.dset) ++count[cp.left[d]];
  const auto cells = cp.left_cells();
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (count[c] != 1)
      p13.fail("left cell " + set_string(g, cells[c]) + " contains " + std::to_string(count[c]) + " elements of D");
  p13.into(r, "P13: one element of D per left cell");

  const int a_w0 = ad.a[g.longest()];
  const int L_w0 = weight(g, L, g.longest());
  r.add("a(w0) = L(w0)", a_w0 == L_w0, "a(w0)=" + std::to_string(a_w0) + " L(w0)=" + std::to_string(L_w0));
  r.add("a(1) = 0", ad.a[0] == 0, "a(1)=" + std::to_string(ad.a[0]));

  Witness inv;
  for (std::size_t z = 0; z < n; ++z)
    if (ad.a[z] != ad.a[g.inverse(static_cast<Elem>(z))]) inv.fail("z=" + g.format(static_cast<Elem>(z)));
  inv.into(r, "a(z) = a(z^-1)");

  Witness nh;
  for (std::size_t z = 0; z < n; ++z) {
    if (ad.nhat[z] == 0) nh.fail("n-hat undefined at " + g.format(static_cast<Elem>(z)));
    for (std::size_t y = z + 1; y < n; ++y)
      if (cp.right[y] == cp.right[z] && ad.nhat[y] != ad.nhat[z])
        nh.fail("n-hat differs on right cell at " + g.format(static_cast<Elem>(z)) + "," + g.format(static_cast<Elem>(y)));
  }
  nh.into(r, "n-hat constant on right cells");

  // Right preorder computed directly from the table, compared with inverses.
  const std::size_t blocks = (n + 63) / 64;
  std::vector<Bitset> right_adj(n, Bitset(blocks, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& t : h.row(static_cast<Elem>(x), static_cast<Elem>(y))) set_bit(right_adj[x], static_cast<std::size_t>(t.z));
  for (std::size_t i = 0; i < n; ++i) set_bit(right_adj[i], i);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (test_bit(right_adj[i], k))
        for (std::size_t b = 0; b < blocks; ++b) right_adj[i][b] |= right_adj[k][b];
  Witness mirror;
  for (std::size_t x = 0; x < n && mirror.ok(); ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const bool direct = test_bit(right_adj[x], y) && test_bit(right_adj[y], x);
      if (direct != (cp.right[x] == cp.right[y])) {
        mirror.fail(g.format(static_cast<Elem>(x)) + "," + g.format(static_cast<Elem>(y)));
        break;
      }
    }
  mirror.into(r, "right cells are inverses of left cells");

  Witness deg;
  for (std::size_t i = 0; i < h.rows.size(); ++i)
    for (const auto& t : h.rows[i])
      if (t.h.min_exp() + ad.a[t.z] < 0) deg.fail("h row " + std::to_string(i));
  deg.into(r, "v^a(z) h_{x,y,z} in Z[v]");
  return r;
}

}  // namespace heckecell
