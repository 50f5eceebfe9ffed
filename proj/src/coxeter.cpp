#include "heckecell/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace heckecell {

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("invalid Cartan type '" + s + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  const std::string digits = s.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) ||
      digits.size() > 3)
    throw std::invalid_argument("invalid Cartan type '" + s + "'");
  CartanType t;
  t.rank = std::stoi(digits);
  switch (f) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'D': t.family = Family::D; break;
    case 'G': t.family = Family::G; break;
    case 'F': t.family = Family::F; break;
    case 'C':
    case 'E':
    case 'H':
    case 'I':
      throw UnsupportedType("unsupported Cartan type '" + s + "'");
    default:
      throw std::invalid_argument("invalid Cartan type '" + s + "'");
  }
  const bool ok = (t.family == Family::A && t.rank >= 1) || (t.family == Family::B && t.rank >= 2) ||
                  (t.family == Family::D && t.rank >= 4) || (t.family == Family::G && t.rank == 2) ||
                  (t.family == Family::F && t.rank == 4);
  if (!ok) throw UnsupportedType("unsupported Cartan type '" + s + "'");
  return t;
}

std::string CartanType::name() const {
  static const char* letters = "ABDGF";
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

std::uint64_t CartanType::classical_order() const {
  auto fact = [](int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) {
      r *= static_cast<std::uint64_t>(i);
      if (r > (1ULL << 40)) return r;
    }
    return r;
  };
  const int n = std::min(rank, 20);
  switch (family) {
    case Family::A: return fact(n + 1);
    case Family::B: return (1ULL << n) * fact(n);
    case Family::D: return (1ULL << (n - 1)) * fact(n);
    case Family::G: return 12;
    case Family::F: return 1152;
  }
  return 0;
}

std::uint64_t CartanType::num_positive_roots() const {
  const auto n = static_cast<std::uint64_t>(rank);
  switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::D: return n * (n - 1);
    case Family::G: return 6;
    case Family::F: return 24;
  }
  return 0;
}

std::vector<std::vector<int>> CartanType::cartan_matrix() const {
  const int n = rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[0][1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::G:
      bond(0, 1);
      a[0][1] = -3;
      break;
    case Family::F:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[1][2] = -2;
      break;
  }
  return a;
}

namespace {

using Perm = std::vector<std::uint16_t>;

Perm compose(const Perm& x, const Perm& y) {
  Perm r(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) r[i] = x[y[i]];
  return r;
}

}  // namespace

CoxeterGroup CoxeterGroup::build(const CartanType& t, std::size_t order_cap) {
  if (t.classical_order() > order_cap)
    throw UnsupportedType("type " + t.name() + " has order " + std::to_string(t.classical_order()) +
                          ", above the cap " + std::to_string(order_cap));
  const int n = t.rank;
  const auto cartan = t.cartan_matrix();

  // Roots in simple-root coordinates, closed under the simple reflections.
  std::vector<std::vector<int>> roots;
  std::map<std::vector<int>, int> root_index;
  auto reflect = [&](int i, const std::vector<int>& beta) {
    int pairing = 0;
    for (int j = 0; j < n; ++j) pairing += cartan[i][j] * beta[j];
    auto r = beta;
    r[i] -= pairing;
    return r;
  };
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    queue.push_back(e);
    std::vector<int> m(n, 0);
    m[i] = -1;
    queue.push_back(m);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    if (root_index.count(beta)) continue;
    root_index[beta] = static_cast<int>(roots.size());
    roots.push_back(beta);
    for (int i = 0; i < n; ++i) queue.push_back(reflect(i, beta));
  }
  const std::size_t nroots = roots.size();
  std::vector<bool> positive(nroots);
  for (std::size_t r = 0; r < nroots; ++r)
    positive[r] = std::any_of(roots[r].begin(), roots[r].end(), [](int c) { return c > 0; });

  std::vector<Perm> simple(n, Perm(nroots));
  for (int i = 0; i < n; ++i)
    for (std::size_t r = 0; r < nroots; ++r)
      simple[i][r] = static_cast<std::uint16_t>(root_index.at(reflect(i, roots[r])));
  std::vector<int> simple_root(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    simple_root[i] = root_index.at(e);
  }

  // Breadth-first enumeration.
  Perm id(nroots);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> perms{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t k = 0; k < perms.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      Perm p = compose(simple[i], perms[k]);
      if (index.emplace(p, static_cast<int>(perms.size())).second) perms.push_back(std::move(p));
    }
    if (perms.size() > order_cap) throw UnsupportedType("order cap exceeded for " + t.name());
  }
  const std::size_t N = perms.size();

  std::vector<int> len(N, 0);
  for (std::size_t w = 0; w < N; ++w)
    for (std::size_t r = 0; r < nroots; ++r)
      if (positive[r] && !positive[perms[w][r]]) ++len[w];

  // Left descent s of w iff w^{-1}(alpha_s) < 0.
  std::vector<Perm> inv_perm(N, Perm(nroots));
  for (std::size_t w = 0; w < N; ++w)
    for (std::size_t r = 0; r < nroots; ++r) inv_perm[w][perms[w][r]] = static_cast<std::uint16_t>(r);

  std::vector<std::size_t> by_len(N);
  std::iota(by_len.begin(), by_len.end(), 0);
  std::stable_sort(by_len.begin(), by_len.end(), [&](std::size_t a, std::size_t b) { return len[a] < len[b]; });
  std::vector<Word> words(N);
  for (std::size_t w : by_len) {
    if (len[w] == 0) continue;
    int s = 0;
    while (positive[inv_perm[w][simple_root[s]]]) ++s;
    const int sw = index.at(compose(simple[s], perms[w]));
    words[w] = {s};
    words[w].insert(words[w].end(), words[sw].begin(), words[sw].end());
  }

  std::vector<std::size_t> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (len[a] != len[b]) return len[a] < len[b];
    return words[a] < words[b];
  });
  std::vector<int> new_index(N);
  for (std::size_t k = 0; k < N; ++k) new_index[order[k]] = static_cast<int>(k);

  CoxeterGroup g;
  g.type_ = t;
  g.rank_ = n;
  g.num_pos_roots_ = nroots / 2;
  g.length_.resize(N);
  g.word_.resize(N);
  for (std::size_t k = 0; k < N; ++k) {
    g.length_[k] = len[order[k]];
    g.word_[k] = words[order[k]];
  }
  g.left_.assign(n * N, 0);
  g.right_.assign(n * N, 0);
  g.inverse_.assign(N, 0);
  for (std::size_t k = 0; k < N; ++k) {
    const Perm& p = perms[order[k]];
    for (int i = 0; i < n; ++i) {
      g.left_[i * N + k] = new_index[index.at(compose(simple[i], p))];
      g.right_[i * N + k] = new_index[index.at(compose(p, simple[i]))];
    }
    g.inverse_[k] = new_index[index.at(inv_perm[order[k]])];
  }
  g.gen_.resize(n);
  for (int i = 0; i < n; ++i) g.gen_[i] = g.left_[i * N + 0];

  g.m_.assign(n, std::vector<int>(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int prod = cartan[i][j] * cartan[j][i];
      g.m_[i][j] = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
    }

  // Bruhat intervals: if ws < w then [1,w] = [1,ws] union [1,ws]*s.
  const std::size_t blocks = (N + 63) / 64;
  g.bruhat_.assign(N, std::vector<std::uint64_t>(blocks, 0));
  g.bruhat_[0][0] = 1;
  for (std::size_t w = 1; w < N; ++w) {
    int s = 0;
    while (!g.is_right_descent(static_cast<Elem>(w), s)) ++s;
    const auto& below = g.bruhat_[g.right_mul(static_cast<Elem>(w), s)];
    auto& cur = g.bruhat_[w];
    cur = below;
    for (std::size_t x = 0; x < N; ++x)
      if ((below[x / 64] >> (x % 64)) & 1ULL) {
        const auto xs = static_cast<std::size_t>(g.right_mul(static_cast<Elem>(x), s));
        cur[xs / 64] |= 1ULL << (xs % 64);
      }
  }
  return g;
}

Elem CoxeterGroup::multiply(Elem x, Elem y) const {
  for (int s : word_[y]) x = right_mul(x, s);
  return x;
}

Elem CoxeterGroup::from_word(const Word& w) const {
  Elem x = 0;
  for (int s : w) {
    if (s < 0 || s >= rank_) throw std::out_of_range("generator index out of range");
    x = right_mul(x, s);
  }
  return x;
}

std::string CoxeterGroup::format(Elem w) const {
  if (word_[w].empty()) return "1";
  std::string out;
  for (int s : word_[w]) out += "s" + std::to_string(s + 1);
  return out;
}

WeightFunction::WeightFunction(const CoxeterGroup& g, std::vector<int> values) : values_(std::move(values)) {
  const int n = g.rank();
  if (static_cast<int>(values_.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " weights, got " + std::to_string(values_.size()));
  for (int v : values_)
    if (v <= 0) throw std::invalid_argument("weights must be strictly positive");
  // Generators joined by an odd-m edge are conjugate.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.coxeter_m(i, j) % 2 == 1) parent[find(i)] = find(j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (find(i) == find(j) && values_[i] != values_[j])
        throw std::invalid_argument("weights of conjugate generators s" + std::to_string(i + 1) + " and s" +
                                    std::to_string(j + 1) + " differ");
}

std::vector<int> WeightFunction::parse(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid weight '" + item + "'");
    }
    if (pos != item.size()) throw std::invalid_argument("invalid weight '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty weight list");
  return out;
}

bool WeightFunction::is_equal_parameter() const {
  return std::all_of(values_.begin(), values_.end(), [&](int v) { return v == values_.front(); });
}

std::string WeightFunction::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? "," : "") + std::to_string(values_[i]);
  return out;
}

int weight(const CoxeterGroup& g, const WeightFunction& L, Elem w) {
  int total = 0;
  for (int s : g.word(w)) total += L[s];
  return total;
}

}  // namespace heckecell
