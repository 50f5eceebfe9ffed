#include "heckecell/workspace.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace heckecell {

namespace fs = std::filesystem;

std::string cache_key(const std::string& type, const WeightFunction& L) {
  const std::string text = type + "|" + L.to_string() + "|" + std::to_string(kCacheFormat);
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string("tables-") + buf + ".json";
}

Json tables_to_json(const CoxeterGroup& g, const WeightFunction& L, const KLTable& kl, const HTable& h) {
  Json j;
  j["format"] = kCacheFormat;
  j["type"] = g.type().name();
  j["weights"] = L.values();
  j["order"] = g.size();
  // kl[w] lists [y, p_{y,w}] for the nonzero entries.
  Json klj = Json::array();
  for (std::size_t w = 0; w < kl.size(); ++w) {
    Json col = Json::array();
    for (std::size_t y = 0; y < kl.size(); ++y)
      if (!kl.p(y, w).is_zero()) col.push_back(Json::array({y, to_json(kl.p(y, w))}));
    klj.push_back(col);
  }
  j["kl"] = klj;
  // h[x * n + y] lists [z, h_{x,y,z}].
  Json hj = Json::array();
  for (const auto& row : h.rows) {
    Json r = Json::array();
    for (const auto& t : row) r.push_back(Json::array({t.z, to_json(t.h)}));
    hj.push_back(r);
  }
  j["h"] = hj;
  return j;
}

std::pair<KLTable, HTable> tables_from_json(const Json& j, const CoxeterGroup& g, const WeightFunction& L) {
  if (j.at("format").get<int>() != kCacheFormat || j.at("type").get<std::string>() != g.type().name() ||
      j.at("weights").get<std::vector<int>>() != L.values() || j.at("order").get<std::size_t>() != g.size())
    throw std::invalid_argument("cache header does not match");
  const std::size_t n = g.size();
  KLTable kl;
  kl.c.assign(n, std::vector<LaurentPoly>(n));
  const auto& klj = j.at("kl");
  if (klj.size() != n) throw std::invalid_argument("cache: bad KL table size");
  for (std::size_t w = 0; w < n; ++w)
    for (const auto& e : klj[w]) kl.c[w].at(e.at(0).get<std::size_t>()) = poly_from_json(e.at(1));
  HTable h;
  h.n = n;
  const auto& hj = j.at("h");
  if (hj.size() != n * n) throw std::invalid_argument("cache: bad h table size");
  h.rows.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i)
    for (const auto& e : hj[i]) h.rows[i].push_back({e.at(0).get<Elem>(), poly_from_json(e.at(1))});
  return {std::move(kl), std::move(h)};
}

Workspace::Workspace(const std::string& type, const std::string& weights, std::string cache_dir, int jobs,
                     std::uint64_t seed)
    : cache_dir_(std::move(cache_dir)), jobs_(jobs), seed_(seed) {
  g_ = std::make_unique<CoxeterGroup>(CoxeterGroup::build(CartanType::parse(type)));
  type_ = g_->type().name();
  L_ = weights.empty() ? WeightFunction::equal(*g_) : WeightFunction(*g_, WeightFunction::parse(weights));
  H_ = std::make_unique<HeckeAlgebra>(*g_, L_);
}

void Workspace::build_tables() {
  if (h_) return;
  fs::path file;
  if (!cache_dir_.empty()) {
    file = fs::path(cache_dir_) / cache_key(type_, L_);
    std::ifstream in(file);
    if (in) {
      try {
        auto [kl, h] = tables_from_json(Json::parse(in), *g_, L_);
        KLData kd;
        kd.kl = std::move(kl);
        kd.left_c = left_rule_from_h(*H_, h);
        kd_ = std::move(kd);
        h_ = std::move(h);
        cache_hit_ = true;
        return;
      } catch (const std::exception&) {
        // Unreadable or stale: rebuild and overwrite.
      }
    }
  }
  kd_ = compute_kl(*H_);
  h_ = h_constants(*H_, *kd_, jobs_);
  if (!file.empty()) {
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    const fs::path tmp = file.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << tables_to_json(*g_, L_, kd_->kl, *h_).dump();
    }
    fs::rename(tmp, file, ec);
  }
}

const KLData& Workspace::kl() {
  build_tables();
  return *kd_;
}

const HTable& Workspace::h() {
  build_tables();
  return *h_;
}

const CellPartition& Workspace::cells() {
  if (!cp_) cp_ = cell_partition(*g_, h());
  return *cp_;
}

const AData& Workspace::adata() {
  if (!ad_) ad_ = compute_adata(*g_, kl().kl, h(), cells());
  return *ad_;
}

const GammaTable& Workspace::gamma() {
  if (!gt_) gt_ = gamma_table(*g_, h(), adata().a);
  return *gt_;
}

const PhiMap& Workspace::phi() {
  if (!phi_) phi_ = PhiMap(h(), adata());
  return *phi_;
}

const std::vector<JIrrep>& Workspace::reps() {
  if (!reps_) reps_ = irreducible_reps(*g_, gamma(), adata(), cells(), seed_);
  return *reps_;
}

const CellDatum& Workspace::datum() {
  if (!datum_) datum_ = build_cell_datum(*g_, adata(), reps());
  return *datum_;
}

const std::vector<CellModule>& Workspace::modules() {
  if (!modules_) modules_ = cell_modules(*H_, phi(), adata(), reps());
  return *modules_;
}

const std::vector<std::vector<PolyMatrix>>& Workspace::actions() {
  if (!actions_) {
    std::vector<std::vector<PolyMatrix>> out;
    for (std::size_t l = 0; l < reps().size(); ++l) out.push_back(cellular_actions(phi(), datum(), reps()[l], l));
    actions_ = std::move(out);
  }
  return *actions_;
}

const std::vector<PolyMatrix>& Workspace::grams() {
  if (!grams_) {
    std::vector<PolyMatrix> out;
    for (std::size_t l = 0; l < reps().size(); ++l) out.push_back(gram_g(actions()[l], reps()[l].dim));
    grams_ = std::move(out);
  }
  return *grams_;
}

}  // namespace heckecell
