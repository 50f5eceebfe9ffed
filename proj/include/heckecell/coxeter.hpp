#pragma once

// Finite Weyl groups enumerated through their action on the root system.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace heckecell {

/// Raised for Cartan types outside the supported list or above the order cap.
class UnsupportedType : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { A, B, D, G, F };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Parses "A3", "B2", "G2", "F4", "D4" (case-insensitive family letter).
  static CartanType parse(const std::string& s);
  std::string name() const;
  /// Classical group order, without enumerating.
  std::uint64_t classical_order() const;
  std::uint64_t num_positive_roots() const;
  /// Cartan matrix with s_i(alpha_j) = alpha_j - A[i][j] alpha_i.
  std::vector<std::vector<int>> cartan_matrix() const;
};

using Elem = int;
using Word = std::vector<int>;

class CoxeterGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 1200;

  static CoxeterGroup build(const CartanType& t, std::size_t order_cap = kDefaultOrderCap);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  std::size_t size() const { return length_.size(); }
  int length(Elem w) const { return length_[w]; }
  /// Shortlex-minimal reduced word, generators numbered from 0.
  const Word& word(Elem w) const { return word_[w]; }
  Elem identity() const { return 0; }
  Elem generator(int s) const { return gen_[s]; }
  Elem longest() const { return static_cast<Elem>(size()) - 1; }
  /// s * w
  Elem left_mul(int s, Elem w) const { return left_[s * size() + w]; }
  /// w * s
  Elem right_mul(Elem w, int s) const { return right_[s * size() + w]; }
  Elem inverse(Elem w) const { return inverse_[w]; }
  Elem multiply(Elem x, Elem y) const;
  Elem from_word(const Word& w) const;
  bool is_left_descent(int s, Elem w) const { return left_mul(s, w) < w; }
  bool is_right_descent(Elem w, int s) const { return right_mul(w, s) < w; }
  int coxeter_m(int s, int t) const { return m_[s][t]; }
  bool bruhat_leq(Elem x, Elem y) const {
    return (bruhat_[y][x / 64] >> (x % 64)) & 1ULL;
  }
  /// "1" or e.g. "s1s2s1" (1-based generator labels).
  std::string format(Elem w) const;
  std::size_t num_positive_roots() const { return num_pos_roots_; }

 private:
  CartanType type_;
  int rank_ = 0;
  std::size_t num_pos_roots_ = 0;
  std::vector<int> length_;
  std::vector<Word> word_;
  std::vector<Elem> gen_;
  std::vector<Elem> left_;
  std::vector<Elem> right_;
  std::vector<Elem> inverse_;
  std::vector<std::vector<int>> m_;
  std::vector<std::vector<std::uint64_t>> bruhat_;
};

/// Positive integer weights per generator, constant on conjugacy classes of
/// generators.
class WeightFunction {
 public:
  WeightFunction() = default;
  /// Validates length, positivity and conjugacy; throws std::invalid_argument.
  WeightFunction(const CoxeterGroup& g, std::vector<int> values);
  static WeightFunction equal(const CoxeterGroup& g) {
    return WeightFunction(g, std::vector<int>(static_cast<std::size_t>(g.rank()), 1));
  }
  /// Parses "2,1".
  static std::vector<int> parse(const std::string& csv);

  int operator[](int s) const { return values_[s]; }
  const std::vector<int>& values() const { return values_; }
  bool is_equal_parameter() const;
  std::string to_string() const;

 private:
  std::vector<int> values_;
};

/// L(w) = sum of L over a reduced word of w.
int weight(const CoxeterGroup& g, const WeightFunction& L, Elem w);

}  // namespace heckecell
