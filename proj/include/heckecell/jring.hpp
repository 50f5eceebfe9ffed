#pragma once

// Lusztig's asymptotic ring J and the homomorphism phi: H -> J_A.

#include "heckecell/cells.hpp"
#include "heckecell/hecke.hpp"
#include "heckecell/linalg.hpp"
#include "heckecell/report.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace heckecell {

/// Element of J on the basis {t_w}: dense integer coefficients.
using JElement = std::vector<Integer>;
/// Element of J_A = A (x) J: dense Laurent coefficients.
using JAElement = std::vector<LaurentPoly>;

struct JTerm {
  Elem z;
  Integer g;
};

struct GammaTable {
  std::size_t n = 0;
  std::vector<Elem> inverse;
  /// prod[x * n + y]: t_x t_y = sum_z g t_z, i.e. g = gamma_{x,y,z^{-1}}; sorted by z.
  std::vector<std::vector<JTerm>> prod;

  const std::vector<JTerm>& product(Elem x, Elem y) const { return prod[static_cast<std::size_t>(x) * n + y]; }
  /// gamma_{x,y,z}.
  Integer gamma(Elem x, Elem y, Elem z) const;
};

GammaTable gamma_table(const CoxeterGroup& g, const HTable& h, const std::vector<int>& a);

JElement j_multiply(const GammaTable& gt, const JElement& a, const JElement& b);
JAElement ja_multiply(const GammaTable& gt, const JAElement& a, const JAElement& b);
JElement j_basis(std::size_t n, Elem w);
/// 1_J = sum over D of n_d t_d.
JElement j_identity(const AData& ad);

/// phi(c_w dagger) for every w, precomputed.
class PhiMap {
 public:
  PhiMap() = default;
  PhiMap(const HTable& h, const AData& ad);
  const JAElement& of_cdagger(Elem w) const { return images_[w]; }
  /// phi of an element given on the c-dagger basis.
  JAElement apply(const HeckeElement& coords) const;
  std::size_t size() const { return images_.size(); }

 private:
  std::vector<JAElement> images_;
};

/// Matrix of phi_1 = phi at v = 1 on the bases {T_w} and {t_w}
/// (column w is phi(T_w) at v = 1).
FMatrix<RationalField> phi_one(const std::vector<HeckeElement>& t_in_cdagger, const PhiMap& phi);

/// P7, the inverse symmetry, P8, the identity, associativity, multiplicativity of
/// phi and invertibility of phi_1.
Report verify_jring(const HeckeAlgebra& H, const HTable& h, const AData& ad, const CellPartition& cp,
                    const GammaTable& gt, const PhiMap& phi, std::uint64_t seed);

}  // namespace heckecell
