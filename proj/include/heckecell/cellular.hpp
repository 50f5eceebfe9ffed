#pragma once

// The cell datum (Lambda, M, C, *) built from the J-representations, the
// action matrices r_h, and the axiom checks (C1)-(C3).

#include "heckecell/jreps.hpp"

#include <optional>
#include <vector>

namespace heckecell {

struct CellLambda {
  int label = 0;
  int a = 0;
  std::size_t dim = 0;
};

struct CellDatum {
  std::size_t n = 0;
  std::vector<CellLambda> lambdas;
  /// C[l][s * d + t]: coefficients of C^l_{s,t} on the c-dagger basis.
  std::vector<std::vector<std::vector<Integer>>> C;

  const std::vector<Integer>& element(std::size_t l, std::size_t s, std::size_t t) const {
    return C[l][s * lambdas[l].dim + t];
  }
  /// l precedes m iff l == m or a_l > a_m.
  bool precedes(std::size_t l, std::size_t m) const { return l == m || lambdas[l].a > lambdas[m].a; }
};

/// The d x d block of cellular elements for one representation and Gram form:
/// coefficient of c_w dagger in C_{s,t} is nhat_w nhat_{w^-1} (B rho(t_{w^-1}))_{t,s}.
std::vector<std::vector<Integer>> cellular_elements(const CoxeterGroup& g, const AData& ad,
                                                    const std::vector<IntMatrix>& rho, const IntMatrix& B);

CellDatum build_cell_datum(const CoxeterGroup& g, const AData& ad, const std::vector<JIrrep>& reps);

/// r_h = sum_x phi(h)_x rho(t_x) for phi(h) given in J_A.
PolyMatrix r_coefficients(const JAElement& phi_h, const std::vector<IntMatrix>& rho);

/// phi(T_s) = v^{L(s)} 1_J - phi(c_s dagger).
JAElement phi_of_generator(const HeckeAlgebra& H, const PhiMap& phi, const AData& ad, int s);

/// r_{T_s} for every generator s.
std::vector<PolyMatrix> generator_actions(const HeckeAlgebra& H, const PhiMap& phi, const AData& ad,
                                          const std::vector<IntMatrix>& rho);

/// t_x * c_w dagger = sum_z gamma_{x,w,z^-1} nhat_w nhat_z c_z dagger, on the c-dagger basis.
std::vector<std::pair<Elem, Integer>> jaction_on_c(const GammaTable& gt, const AData& ad, Elem x, Elem w);

/// Columns are the C^l_{s,t} in datum order, rows the c-dagger basis.
IntMatrix transition_matrix(const CellDatum& datum);

/// delta_w when every C is +-c_w dagger for distinct w covering W.
std::optional<std::vector<int>> cdagger_signs(const CellDatum& datum);

/// Everything the axiom checks read.
struct CellularContext {
  const HeckeAlgebra& H;
  const KLTable& kl;
  const HTable& h;
  const AData& ad;
  const GammaTable& gt;
  const PhiMap& phi;
  const std::vector<JIrrep>& reps;
};

/// (C1), (C2), (C3), stratum support, reconstruction, J-action congruence,
/// r_{T_1} = 1, multiplicativity of r on generator pairs and the formula for
/// one-dimensional lambda.
Report verify_axioms(const CellularContext& ctx, const CellDatum& datum);

}  // namespace heckecell
