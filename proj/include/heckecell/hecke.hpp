#pragma once

// Generic Iwahori-Hecke algebra over A = Z[v, v^-1]: T-basis arithmetic, the
// bar, dagger and star maps, the Kazhdan-Lusztig basis and the structure
// constants h_{x,y,z}.

#include "heckecell/coxeter.hpp"
#include "heckecell/exactalg.hpp"
#include "heckecell/report.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace heckecell {

/// Coefficient vector of an element of H on some basis indexed by W (the
/// T-basis, the c-basis or the c-dagger basis; the caller keeps track).
/// Dense: entry w is the coefficient of the w-th basis element.
class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(std::size_t n) : c_(n) {}
  static HeckeElement basis(std::size_t n, Elem w, const LaurentPoly& coeff = 1) {
    HeckeElement h(n);
    h.c_[w] = coeff;
    return h;
  }

  std::size_t size() const { return c_.size(); }
  LaurentPoly& operator[](Elem w) { return c_[w]; }
  const LaurentPoly& operator[](Elem w) const { return c_[w]; }
  const std::vector<LaurentPoly>& coeffs() const { return c_; }
  bool is_zero() const;
  /// Elements with nonzero coefficient, increasing.
  std::vector<Elem> support() const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  /// this += p * o
  void add_scaled(const HeckeElement& o, const LaurentPoly& p);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& p, const HeckeElement& h);
  bool operator==(const HeckeElement&) const = default;

 private:
  std::vector<LaurentPoly> c_;
};

struct HTerm {
  Elem z;
  LaurentPoly h;
  bool operator==(const HTerm&) const = default;
};

/// p_{y,w}: coefficients of c_w on the T-basis (p_{w,w} = 1).
struct KLTable {
  std::vector<std::vector<LaurentPoly>> c;  // c[w][y] = p_{y,w}
  const LaurentPoly& p(Elem y, Elem w) const { return c[w][y]; }
  std::size_t size() const { return c.size(); }
};

/// h_{x,y,z} stored as sparse rows indexed by (x, y).
struct HTable {
  std::size_t n = 0;
  std::vector<std::vector<HTerm>> rows;  // rows[x * n + y], sorted by z
  const std::vector<HTerm>& row(Elem x, Elem y) const { return rows[static_cast<std::size_t>(x) * n + y]; }
  LaurentPoly get(Elem x, Elem y, Elem z) const;
};

class HeckeAlgebra {
 public:
  HeckeAlgebra(const CoxeterGroup& g, WeightFunction L);

  const CoxeterGroup& group() const { return *g_; }
  const WeightFunction& weights() const { return L_; }
  std::size_t size() const { return g_->size(); }
  int L(int s) const { return L_[s]; }
  /// L(w)
  int weight(Elem w) const { return wt_[w]; }
  /// v^{L(s)} - v^{-L(s)}
  const LaurentPoly& qdiff(int s) const { return qdiff_[s]; }

  HeckeElement zero() const { return HeckeElement(size()); }
  HeckeElement t(Elem w) const { return HeckeElement::basis(size(), w); }

  HeckeElement mul_generator_left(int s, const HeckeElement& h) const;
  HeckeElement mul_generator_right(const HeckeElement& h, int s) const;
  /// T_s^{-1} * h
  HeckeElement mul_generator_inverse_left(int s, const HeckeElement& h) const;
  /// Exact product on the T-basis.
  HeckeElement t_multiply(const HeckeElement& a, const HeckeElement& b) const;

  /// T_{w^{-1}}^{-1} on the T-basis.
  const HeckeElement& t_inverse_inverse(Elem w) const;
  /// Ring involution T_w -> T_{w^{-1}}^{-1}, v -> v^{-1}.
  HeckeElement bar(const HeckeElement& h) const;
  /// Algebra involution T_s -> -T_s^{-1}; A-linear.
  HeckeElement dagger(const HeckeElement& h) const;
  /// Anti-involution T_w -> T_{w^{-1}}. The same permutation of coordinates
  /// realises * on the c- and c-dagger bases.
  HeckeElement star(const HeckeElement& h) const;

 private:
  const CoxeterGroup* g_;
  WeightFunction L_;
  std::vector<int> wt_;
  std::vector<LaurentPoly> qdiff_;
  struct Lazy {
    std::once_flag once;
    std::vector<HeckeElement> inv;
  };
  std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

/// The Kazhdan-Lusztig table together with the left multiplication rule
/// c_s c_z = sum_u m_{s,z,u} c_u used to build the h-table.
struct KLData {
  KLTable kl;
  std::vector<std::vector<HTerm>> left_c;  // left_c[s * n + z]
  const std::vector<HTerm>& left(int s, Elem z) const { return left_c[static_cast<std::size_t>(s) * kl.size() + z]; }
};

/// Runs the weighted KL recursion; throws std::logic_error if two
/// descents give different results (non-uniqueness would be a bug).
KLData compute_kl(const HeckeAlgebra& H);

/// Structure constants of the c-basis. `jobs` worker threads.
HTable h_constants(const HeckeAlgebra& H, const KLData& kd, int jobs = 1);

/// Recovers the left multiplication rule from a full h-table.
std::vector<std::vector<HTerm>> left_rule_from_h(const HeckeAlgebra& H, const HTable& h);

/// c_w (or c_w dagger) on the T-basis.
HeckeElement c_basis_element(const HeckeAlgebra& H, const KLTable& kl, Elem w, bool daggered);
/// Converts coordinates on the c- (or c-dagger) basis to the T-basis.
HeckeElement c_to_t(const HeckeAlgebra& H, const KLTable& kl, const HeckeElement& coords, bool daggered);
/// Inverse of c_to_t by unitriangular back-substitution.
HeckeElement t_to_c(const HeckeAlgebra& H, const KLTable& kl, HeckeElement h, bool daggered);

/// Product of two elements given on the c-basis (equally the c-dagger basis).
HeckeElement c_multiply(const HTable& h, const HeckeElement& a, const HeckeElement& b);
/// T_s * x where x is given on the c-dagger basis; result on the same basis.
HeckeElement ts_times_cdagger(const HeckeAlgebra& H, const HTable& h, int s, const HeckeElement& x);
/// T_w on the c-dagger basis, for every w.
std::vector<HeckeElement> t_basis_in_cdagger(const HeckeAlgebra& H, const HTable& h);

/// Degree and support conditions on p_{y,w}, bar invariance of c_w, bar
/// invariance of h_{x,y,z} and c_x c_y recomputed on the T-basis (all pairs
/// up to |W| = 48, a fixed sample above).
Report verify_hecke(const HeckeAlgebra& H, const KLData& kd, const HTable& h);

}  // namespace heckecell
