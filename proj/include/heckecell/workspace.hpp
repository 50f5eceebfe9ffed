#pragma once

// Lazily built pipeline for one (type, weights) pair, with an optional disk
// cache for the KL and h tables.

#include "heckecell/cellmod.hpp"
#include "heckecell/json_io.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace heckecell {

inline constexpr int kCacheFormat = 1;

/// Cache file name for (type, weights): FNV-1a of "type|weights|format".
std::string cache_key(const std::string& type, const WeightFunction& L);

Json tables_to_json(const CoxeterGroup& g, const WeightFunction& L, const KLTable& kl, const HTable& h);
/// Throws std::invalid_argument if the header does not match (g, L).
std::pair<KLTable, HTable> tables_from_json(const Json& j, const CoxeterGroup& g, const WeightFunction& L);

class Workspace {
 public:
  /// `weights` empty means all 1. `cache_dir` empty disables the cache.
  Workspace(const std::string& type, const std::string& weights, std::string cache_dir = {}, int jobs = 1,
            std::uint64_t seed = 1);

  const CoxeterGroup& group() const { return *g_; }
  const WeightFunction& weights() const { return L_; }
  const HeckeAlgebra& hecke() const { return *H_; }
  const std::string& type_name() const { return type_; }
  std::uint64_t seed() const { return seed_; }

  const KLData& kl();
  const HTable& h();
  const CellPartition& cells();
  const AData& adata();
  const GammaTable& gamma();
  const PhiMap& phi();
  const std::vector<JIrrep>& reps();
  const CellDatum& datum();
  const std::vector<CellModule>& modules();
  const std::vector<std::vector<PolyMatrix>>& actions();
  const std::vector<PolyMatrix>& grams();

  /// True when the tables came from the disk cache.
  bool cache_hit() const { return cache_hit_; }

 private:
  void build_tables();

  std::string type_;
  std::string cache_dir_;
  int jobs_;
  std::uint64_t seed_;
  std::unique_ptr<CoxeterGroup> g_;
  WeightFunction L_;
  std::unique_ptr<HeckeAlgebra> H_;
  bool cache_hit_ = false;
  std::optional<KLData> kd_;
  std::optional<HTable> h_;
  std::optional<CellPartition> cp_;
  std::optional<AData> ad_;
  std::optional<GammaTable> gt_;
  std::optional<PhiMap> phi_;
  std::optional<std::vector<JIrrep>> reps_;
  std::optional<CellDatum> datum_;
  std::optional<std::vector<CellModule>> modules_;
  std::optional<std::vector<std::vector<PolyMatrix>>> actions_;
  std::optional<std::vector<PolyMatrix>> grams_;
};

}  // namespace heckecell
