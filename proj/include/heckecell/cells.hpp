#pragma once

// Lusztig's a-function, Delta, n_z, the distinguished involutions and the
// left, right and two-sided cells.

#include "heckecell/coxeter.hpp"
#include "heckecell/exactalg.hpp"
#include "heckecell/hecke.hpp"
#include "heckecell/report.hpp"

#include <cstdint>
#include <vector>

namespace heckecell {

struct AData {
  std::vector<int> a;
  std::vector<int> delta;
  std::vector<Integer> nz;
  std::vector<Elem> dset;   // increasing
  std::vector<bool> in_d;
  std::vector<int> nhat;    // +-1; 0 where no distinguished element was found
};

using Bitset = std::vector<std::uint64_t>;

inline bool test_bit(const Bitset& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1ULL; }
inline void set_bit(Bitset& b, std::size_t i) { b[i / 64] |= 1ULL << (i % 64); }

struct CellPartition {
  std::vector<int> left;       // cell id per element, numbered by minimal element
  std::vector<int> right;
  std::vector<int> two_sided;
  int num_left = 0;
  int num_right = 0;
  int num_two_sided = 0;
  std::vector<Bitset> left_below;  // left_below[y] = {z : z <=_L y}
  std::vector<Bitset> lr_below;    // lr_below[y] = {z : z <=_LR y}

  /// Elements of each left cell, increasing.
  std::vector<std::vector<Elem>> left_cells() const;
  std::vector<std::vector<Elem>> two_sided_cells() const;
  bool left_equiv(Elem x, Elem y) const { return left[x] == left[y]; }
};

/// a(z) = max over x, y of minus the lowest exponent of h_{x,y,z}, at least 0.
std::vector<int> a_function(const HTable& h);

/// Delta(z) and n_z from the leading term of p_{1,z}. Throws DegenerateInput
/// ("degenerate weight function") when p_{1,z} = 0.
void delta_n(const KLTable& kl, AData& ad);

CellPartition cell_partition(const CoxeterGroup& g, const HTable& h);

/// a, Delta, n, the set D and n-hat together.
AData compute_adata(const CoxeterGroup& g, const KLTable& kl, const HTable& h, const CellPartition& cp);

/// n-hat_z = n_d for the d in D with d ~_L z^{-1}.
int nhat(const CoxeterGroup& g, const CellPartition& cp, const AData& ad, Elem z);

/// P1, P4, P5, P6, P13 and the remaining cell invariants.
Report verify_cells(const CoxeterGroup& g, const WeightFunction& L, const HTable& h, const AData& ad,
                    const CellPartition& cp);

}  // namespace heckecell
