#pragma once

// Cell modules W(lambda), their bilinear forms g^lambda, specialisations
// theta: A -> k, radicals, Lambda-circ and decomposition matrices.

#include "heckecell/cellular.hpp"
#include "heckecell/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace heckecell {

/// theta sends a bad prime to zero.
class BadPrimeTarget : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CellModule {
  int label = 0;
  int a = 0;
  std::size_t dim = 0;
  std::vector<PolyMatrix> gens;  // action of T_s on the basis C_s
};

std::vector<CellModule> cell_modules(const HeckeAlgebra& H, const PhiMap& phi, const AData& ad,
                                     const std::vector<JIrrep>& reps);

/// r_h for h = C^l_{s,t}, indexed [s * d + t].
std::vector<PolyMatrix> cellular_actions(const PhiMap& phi, const CellDatum& datum, const JIrrep& rep, std::size_t l);

/// g(C_s, C_t) = r_h(s, s) with h = C^l_{s,t}.
PolyMatrix gram_g(const std::vector<PolyMatrix>& actions, std::size_t d);

/// Hecke relations, symmetry and invariance of g, the rank-one action of
/// each C_{a,b}, the leading-term identity and det g != 0.
Report verify_cellmod(const HeckeAlgebra& H, const std::vector<JIrrep>& reps, const std::vector<CellModule>& modules,
                      const std::vector<std::vector<PolyMatrix>>& actions, const std::vector<PolyMatrix>& grams);

struct SpecTarget {
  enum class Kind { Rational, Prime, Cyclotomic };
  Kind kind = Kind::Rational;
  std::uint64_t p = 0;  // Prime
  int e = 0;            // Cyclotomic
  Rational q = 1;       // image of v unless v_is_zeta
  bool v_is_zeta = false;
  long zeta_exp = 1;    // v -> zeta^zeta_exp
  std::string field_text;
  std::string at_text;
};

/// Parses --at (v=1, v=-1, v=2/3, v=z, v=z^k) and --field (Q, Fp:p, Cyc:e).
/// Throws std::invalid_argument on malformed or inconsistent input.
SpecTarget parse_target(const std::string& at, const std::string& field);

struct SpecLambda {
  int label = 0;
  int a = 0;
  std::size_t dim = 0;
  std::size_t gram_rank = 0;
};

struct SpecializationResult {
  std::string field;
  std::string at;
  std::vector<SpecLambda> lambdas;           // rows, by increasing a then label
  std::vector<int> lambda_circ;              // labels of Lambda-circ, same order
  std::vector<std::vector<int>> decomposition;  // [row][column], -1 where undecided
  bool complete = true;
  Report report;
};

/// Throws BadPrimeTarget when char k divides some f_lambda and
/// std::invalid_argument when v is not sent to a unit.
SpecializationResult specialize(const HeckeAlgebra& H, const std::vector<JIrrep>& reps, const CellDatum& datum,
                                const std::vector<CellModule>& modules, const std::vector<PolyMatrix>& grams,
                                const SpecTarget& target, std::uint64_t seed);

}  // namespace heckecell
