#pragma once

#include "heckecell/workspace.hpp"

#include <map>
#include <memory>
#include <random>
#include <string>

namespace testing {

using namespace heckecell;

/// One shared workspace per (type, weights) for the whole test binary.
inline Workspace& ws(const std::string& type, const std::string& weights = "") {
  static std::map<std::string, std::unique_ptr<Workspace>> cache;
  auto& slot = cache[type + "|" + weights];
  if (!slot) slot = std::make_unique<Workspace>(type, weights);
  return *slot;
}

inline LaurentPoly v(int k) { return LaurentPoly::monomial(k); }

inline LaurentPoly random_poly(std::mt19937_64& rng, int span = 3, int terms = 3) {
  std::uniform_int_distribution<int> e(-span, span), c(-4, 4);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p = p + LaurentPoly::monomial(e(rng), c(rng));
  return p;
}

inline IntMatrix int_matrix(std::size_t r, std::size_t c, std::initializer_list<long> vals) {
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (long x : vals) m.data()[i++] = x;
  return m;
}

/// Report helper: every named check passed.
inline std::string failures(const Report& r) {
  std::string s;
  for (const auto& c : r.checks())
    if (!c.passed) s += c.name + " [" + c.witness + "]; ";
  return s;
}

}  // namespace testing
