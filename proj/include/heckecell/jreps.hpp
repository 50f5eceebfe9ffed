#pragma once

// Integral irreducible representations of J and their invariants.

#include "heckecell/cells.hpp"
#include "heckecell/jring.hpp"
#include "heckecell/report.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace heckecell {

struct JIrrep {
  int label = 0;                // position in the list
  std::size_t dim = 0;
  std::vector<IntMatrix> rho;   // rho[w], zero off the support
  std::vector<Elem> support;    // w with rho(t_w) != 0
  int a = 0;
  Integer f = 0;
  IntMatrix B;                  // gcd-normalised Gram sum
  Integer B_scale = 0;          // the gcd divided out
  int source_cell = -1;         // left cell the rep was cut out of
  std::vector<Integer> character;
};

/// rho(t_w)_{s,t} = gamma_{w, x_t, x_s^{-1}} on the basis {t_x : x in cell}.
std::vector<IntMatrix> left_cell_module(const GammaTable& gt, const std::vector<Elem>& cell);

/// Right multiplication by t_y for y in the cell and its inverse, on the same
/// basis; these commute with the left action.
std::vector<IntMatrix> right_endomorphisms(const GammaTable& gt, const std::vector<Elem>& cell);

/// One representative per isomorphism class, cut out of the left-cell modules.
/// Throws std::runtime_error when the classes cannot be completed.
std::vector<JIrrep> irreducible_reps(const CoxeterGroup& g, const GammaTable& gt, const AData& ad,
                                     const CellPartition& cp, std::uint64_t seed);

/// (a_lambda, f_lambda); a is -1 when not constant on the support and f is 0
/// when the Schur sum is not a positive multiple of the dimension.
std::pair<int, Integer> invariants_af(const CoxeterGroup& g, const AData& ad, const std::vector<IntMatrix>& rho);

/// B_1 = sum rho(t_y)^T rho(t_y), gcd-normalised.
std::pair<IntMatrix, Integer> gram_B(const std::vector<IntMatrix>& rho);

/// Primes dividing some f_lambda.
std::vector<Integer> bad_primes(const std::vector<JIrrep>& reps);

/// Bad primes from the classical table for equal parameters; nullopt when the
/// table does not cover the weight function.
std::optional<std::vector<Integer>> tabulated_bad_primes(const CartanType& t, const WeightFunction& L);

Report verify_jreps(const CoxeterGroup& g, const WeightFunction& L, const GammaTable& gt, const AData& ad,
                    const std::vector<JIrrep>& reps);

}  // namespace heckecell
