#pragma once

// Embedded reference data for type B2 with equal parameters and the
// comparison against the computed cells, J, representations and datum.

#include "heckecell/cellular.hpp"

#include <string>
#include <vector>

namespace heckecell {

struct GoldenRow {
  std::string item;
  std::string expected;
  std::string computed;
  bool match = false;
};

struct GoldenComparison {
  Report report;
  std::vector<GoldenRow> rows;
};

/// Parses "1" or a word such as "s1s2s1" (generators numbered from 1).
Elem parse_element(const CoxeterGroup& g, const std::string& word);

/// Throws std::invalid_argument unless g is B2 and L is equal-parameter.
GoldenComparison compare_golden_b2(const CoxeterGroup& g, const WeightFunction& L, const CellPartition& cp,
                                   const AData& ad, const GammaTable& gt, const std::vector<JIrrep>& reps,
                                   const CellDatum& datum);

}  // namespace heckecell
