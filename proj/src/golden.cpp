#include "heckecell/golden.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace heckecell {

namespace {

struct Relation {
  const char* x;
  const char* y;
  std::vector<std::pair<int, const char*>> rhs;
};

const std::vector<Relation> kRelations = {
    {"1", "1", {{1, "1"}}},
    {"s1s2s1s2", "s1s2s1s2", {{1, "s1s2s1s2"}}},
    {"s1", "s1", {{1, "s1"}}},
    {"s1", "s1s2", {{1, "s1s2"}}},
    {"s1", "s1s2s1", {{1, "s1s2s1"}}},
    {"s2", "s2", {{1, "s2"}}},
    {"s2", "s2s1", {{1, "s2s1"}}},
    {"s2", "s2s1s2", {{1, "s2s1s2"}}},
    {"s1s2", "s2s1", {{1, "s1"}, {1, "s1s2s1"}}},
    {"s1s2", "s2s1s2", {{1, "s1s2"}}},
    {"s2s1", "s1s2", {{1, "s2"}, {1, "s2s1s2"}}},
    {"s2s1", "s1s2s1", {{1, "s2s1"}}},
    {"s1s2s1", "s1s2s1", {{1, "s1"}}},
    {"s2s1s2", "s2s1s2", {{1, "s2"}}},
};

const std::vector<std::vector<const char*>> kLeftCells = {
    {"1"}, {"s1", "s2s1", "s1s2s1"}, {"s2", "s1s2", "s2s1s2"}, {"s1s2s1s2"}};

const std::vector<int> kAInvariants = {0, 1, 1, 1, 4};

/// The two-dimensional representation r, row-major.
const std::vector<std::pair<const char*, std::array<int, 4>>> kRMatrices = {
    {"1", {0, 0, 0, 0}},       {"s1", {1, 0, 0, 0}},     {"s2s1", {0, 0, -1, 0}}, {"s1s2s1", {1, 0, 0, 0}},
    {"s2", {0, 0, 0, 1}},      {"s1s2", {0, -2, 0, 0}},  {"s2s1s2", {0, 0, 0, 1}}, {"s1s2s1s2", {0, 0, 0, 0}},
};

using Combination = std::vector<std::pair<int, const char*>>;

const std::vector<std::pair<const char*, Combination>> kOneDim = {
    {"C^1_{1,1}", {{1, "1"}}},
    {"C^eps_{1,1}", {{1, "s1s2s1s2"}}},
    {"C^eps1_{1,1}", {{1, "s2"}, {-1, "s2s1s2"}}},
    {"C^eps2_{1,1}", {{1, "s1"}, {-1, "s1s2s1"}}},
};

const std::vector<std::pair<const char*, Combination>> kRElements = {
    {"C^r_{1,1}", {{1, "s1"}, {1, "s1s2s1"}}},
    {"C^r_{1,2}", {{-2, "s1s2"}}},
    {"C^r_{2,1}", {{-2, "s2s1"}}},
    {"C^r_{2,2}", {{2, "s2"}, {2, "s2s1s2"}}},
};

/// Lattice generators given for the C^r block.
const std::vector<Combination> kRLattice = {
    {{1, "s1"}, {1, "s1s2s1"}}, {{-2, "s1s2"}}, {{-2, "s2s1"}}, {{2, "s2"}, {2, "s2s1s2"}}};

std::vector<Integer> to_vector(const CoxeterGroup& g, const Combination& c) {
  std::vector<Integer> v(g.size(), 0);
  for (const auto& [k, w] : c) v[parse_element(g, w)] += k;
  return v;
}

std::string format_combination(const CoxeterGroup& g, const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (v[w] == 0) continue;
    const Integer c = v[w];
    if (out.empty()) {
      if (c == -1) out += "-";
      else if (c != 1) out += c.str() + "*";
    } else {
      out += c < 0 ? " - " : " + ";
      const Integer m = abs(c);
      if (m != 1) out += m.str() + "*";
    }
    out += "c_" + g.format(static_cast<Elem>(w));
  }
  return out.empty() ? "0" : out;
}

std::string format_cells(const CoxeterGroup& g, std::vector<std::vector<Elem>> cells) {
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end());
  std::string out;
  for (const auto& c : cells) {
    out += "{";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + g.format(c[i]);
    out += "}";
  }
  return out;
}

std::string format_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string format_matrix(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + m(i, j).str();
  }
  return out + "]";
}

}  // namespace

Elem parse_element(const CoxeterGroup& g, const std::string& word) {
  if (word == "1" || word.empty()) return 0;
  Word w;
  std::size_t i = 0;
  while (i < word.size()) {
    if (word[i] != 's') throw std::invalid_argument("bad element word: " + word);
    std::size_t j = i + 1;
    while (j < word.size() && std::isdigit(static_cast<unsigned char>(word[j]))) ++j;
    if (j == i + 1) throw std::invalid_argument("bad element word: " + word);
    const int s = std::stoi(word.substr(i + 1, j - i - 1)) - 1;
    if (s < 0 || s >= g.rank()) throw std::invalid_argument("generator out of range in " + word);
    w.push_back(s);
    i = j;
  }
  return g.from_word(w);
}

GoldenComparison compare_golden_b2(const CoxeterGroup& g, const WeightFunction& L, const CellPartition& cp,
                                   const AData& ad, const GammaTable& gt, const std::vector<JIrrep>& reps,
                                   const CellDatum& datum) {
  if (g.type().family != Family::B || g.type().rank != 2 || !L.is_equal_parameter() || L[0] != 1)
    throw std::invalid_argument("golden b2 requires --type B2 --weights 1,1");
  GoldenComparison out;
  auto row = [&](std::string item, std::string expected, std::string computed, bool match) {
    out.report.add(item, match, "expected " + expected + ", computed " + computed);
    out.rows.push_back({std::move(item), std::move(expected), std::move(computed), match});
  };
  const std::size_t n = g.size();

  // Left cells.
  std::vector<std::vector<Elem>> expected_cells;
  for (const auto& c : kLeftCells) {
    std::vector<Elem> cell;
    for (const char* w : c) cell.push_back(parse_element(g, w));
    expected_cells.push_back(cell);
  }
  const std::string ec = format_cells(g, expected_cells), cc = format_cells(g, cp.left_cells());
  row("left cells", ec, cc, ec == cc);

  // J relations.
  for (const auto& rel : kRelations) {
    std::map<Elem, Integer> expect, got;
    for (const auto& [k, z] : rel.rhs) expect[parse_element(g, z)] += k;
    for (const auto& t : gt.product(parse_element(g, rel.x), parse_element(g, rel.y))) got[t.z] += t.g;
    std::vector<Integer> ev(n, 0), gv(n, 0);
    for (const auto& [z, k] : expect) ev[z] = k;
    for (const auto& [z, k] : got) gv[z] = k;
    row(std::string("t_") + rel.x + " t_" + rel.y, format_combination(g, ev), format_combination(g, gv), ev == gv);
  }
  const Elem w0 = g.longest();
  bool vanish = true;
  for (std::size_t x = 1; x < n; ++x)
    if (!gt.product(0, static_cast<Elem>(x)).empty() || !gt.product(static_cast<Elem>(x), 0).empty()) vanish = false;
  for (std::size_t x = 0; x < n; ++x)
    if (static_cast<Elem>(x) != w0 &&
        (!gt.product(w0, static_cast<Elem>(x)).empty() || !gt.product(static_cast<Elem>(x), w0).empty()))
      vanish = false;
  row("t_1 t_x = 0 (x != 1), t_w0 t_x = 0 (x != w0)", "true", vanish ? "true" : "false", vanish);

  // a-invariants.
  std::vector<int> as;
  for (const auto& rep : reps) as.push_back(rep.a);
  std::sort(as.begin(), as.end());
  row("a-invariants", format_ints(kAInvariants), format_ints(as), as == kAInvariants);

  // The representation r.
  std::vector<IntMatrix> table_r(n, IntMatrix(2, 2));
  for (const auto& [w, m] : kRMatrices) {
    IntMatrix& dst = table_r[parse_element(g, w)];
    for (int i = 0; i < 4; ++i) dst(i / 2, i % 2) = m[i];
  }
  bool is_rep = true;
  for (std::size_t x = 0; x < n && is_rep; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      IntMatrix rhs(2, 2);
      for (const auto& t : gt.product(static_cast<Elem>(x), static_cast<Elem>(y))) rhs = rhs + t.g * table_r[t.z];
      if (table_r[x] * table_r[y] != rhs) {
        is_rep = false;
        break;
      }
    }
  row("displayed r is a representation of J", "true", is_rep ? "true" : "false", is_rep);

  const JIrrep* r = nullptr;
  for (const auto& rep : reps)
    if (rep.dim == 2) r = &rep;
  std::string ech, cch;
  for (std::size_t w = 0; w < n; ++w) {
    ech += (w ? "," : "") + trace(table_r[w]).str();
    cch += (w ? "," : "") + (r ? r->character[w].str() : std::string("?"));
  }
  row("character of r", ech, cch, r && ech == cch);

  const IntMatrix diag12 = [] {
    IntMatrix m(2, 2);
    m(0, 0) = 1;
    m(1, 1) = 2;
    return m;
  }();
  row("B^r", format_matrix(diag12), r ? format_matrix(r->B) : "?", r && r->B == diag12);
  const IntMatrix table_B = gram_B(table_r).first;
  row("B from the displayed r", format_matrix(diag12), format_matrix(table_B), table_B == diag12);

  // One-dimensional cellular elements.
  std::vector<std::vector<Integer>> computed_1d;
  for (std::size_t l = 0; l < datum.lambdas.size(); ++l)
    if (datum.lambdas[l].dim == 1) computed_1d.push_back(datum.element(l, 0, 0));
  for (const auto& [name, comb] : kOneDim) {
    const auto v = to_vector(g, comb);
    const bool found = std::find(computed_1d.begin(), computed_1d.end(), v) != computed_1d.end();
    row(name, format_combination(g, v), found ? format_combination(g, v) : "no matching lambda", found);
  }
  row("number of one-dimensional lambda", std::to_string(kOneDim.size()), std::to_string(computed_1d.size()),
      computed_1d.size() == kOneDim.size());

  // C^r from the displayed r and B = diag(1,2), entrywise.
  const auto from_table = cellular_elements(g, ad, table_r, diag12);
  for (std::size_t i = 0; i < kRElements.size(); ++i) {
    const auto v = to_vector(g, kRElements[i].second);
    row(std::string(kRElements[i].first) + " (displayed r)", format_combination(g, v),
        format_combination(g, from_table[i]), v == from_table[i]);
  }

  // Lattice spanned by the computed C^r.
  std::vector<std::vector<Integer>> expected_rows, computed_rows;
  for (const auto& c : kRLattice) expected_rows.push_back(to_vector(g, c));
  std::string cl;
  for (std::size_t l = 0; l < datum.lambdas.size(); ++l)
    if (datum.lambdas[l].dim == 2)
      for (const auto& c : datum.C[l]) {
        computed_rows.push_back(c);
        cl += (cl.empty() ? "" : ", ") + format_combination(g, c);
      }
  std::string el;
  for (const auto& v : expected_rows) el += (el.empty() ? "" : ", ") + format_combination(g, v);
  const bool same = !computed_rows.empty() && hermite_normal_form(expected_rows) == hermite_normal_form(computed_rows);
  row("Z-span of C^r", el, cl, same);
  return out;
}

}  // namespace heckecell
