#include "heckecell/cli.hpp"

#include "heckecell/golden.hpp"
#include "heckecell/workspace.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace heckecell {

namespace {

struct RunConfig {
  std::string type;
  std::string weights;
  std::string out = "text";
  std::string cache;
  int jobs = 1;
  std::uint64_t seed = 1;
  std::string golden;
  std::string at = "v=1";
  std::string field = "Q";
  bool all = false;
};

std::string cache_dir(const RunConfig& cfg) {
  if (!cfg.cache.empty()) return cfg.cache;
  if (const char* env = std::getenv("HECKECELL_CACHE")) return env;
  return {};
}

void print_report(std::ostream& out, const Report& r) {
  std::size_t failed = 0;
  for (const auto& c : r.checks()) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.passed) {
      ++failed;
      if (!c.witness.empty()) out << "  [" << c.witness << "]";
    }
    out << "\n";
  }
  out << r.checks().size() - failed << "/" << r.checks().size() << " checks passed\n";
}

std::string cell_text(const CoxeterGroup& g, const std::vector<Elem>& cell) {
  std::string s = "{";
  for (std::size_t i = 0; i < cell.size(); ++i) s += (i ? ", " : "") + g.format(cell[i]);
  return s + "}";
}

std::string matrix_text(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).str();
  }
  return s + "]";
}

Json header(Workspace& ws) {
  return Json{{"type", ws.type_name()}, {"weights", ws.weights().values()}};
}

int cmd_group(Workspace& ws, const RunConfig& cfg, std::ostream& out) {
  const auto& g = ws.group();
  const auto& L = ws.weights();
  if (cfg.out == "json") {
    Json j = header(ws);
    j["rank"] = g.rank();
    j["order"] = g.size();
    Json m = Json::array();
    for (int s = 0; s < g.rank(); ++s) {
      Json row = Json::array();
      for (int t = 0; t < g.rank(); ++t) row.push_back(g.coxeter_m(s, t));
      m.push_back(row);
    }
    j["coxeter_matrix"] = m;
    Json els = Json::array();
    for (std::size_t w = 0; w < g.size(); ++w)
      els.push_back({{"id", w}, {"word", g.format(w)}, {"length", g.length(w)}, {"L", weight(g, L, w)}});
    j["elements"] = els;
    out << j.dump() << "\n";
    return 0;
  }
  out << "type " << ws.type_name() << ", weights " << L.to_string() << "\n";
  out << "rank " << g.rank() << ", order " << g.size() << ", " << g.num_positive_roots() << " positive roots\n";
  out << "longest element " << g.format(g.longest()) << " (length " << g.length(g.longest()) << ", L = "
      << weight(g, L, g.longest()) << ")\n";
  out << "Coxeter matrix:\n";
  for (int s = 0; s < g.rank(); ++s) {
    out << " ";
    for (int t = 0; t < g.rank(); ++t) out << " " << g.coxeter_m(s, t);
    out << "\n";
  }
  return 0;
}

int cmd_kl(Workspace& ws, const RunConfig& cfg, std::ostream& out) {
  const auto& g = ws.group();
  const auto& kl = ws.kl().kl;
  if (cfg.out == "json") {
    Json j = header(ws);
    Json p = Json::array();
    for (std::size_t w = 0; w < g.size(); ++w)
      for (std::size_t y = 0; y < g.size(); ++y)
        if (!kl.p(y, w).is_zero()) p.push_back({{"y", y}, {"w", w}, {"p", to_json(kl.p(y, w))}});
    j["p"] = p;
    out << j.dump() << "\n";
    return 0;
  }
  out << "p_{y,w} for y < w (nonzero entries), type " << ws.type_name() << ", weights " << ws.weights().to_string()
      << "\n";
  for (std::size_t w = 0; w < g.size(); ++w)
    for (std::size_t y = 0; y < w; ++y)
      if (!kl.p(y, w).is_zero())
        out << "  p(" << g.format(y) << ", " << g.format(w) << ") = " << kl.p(y, w).to_string() << "\n";
  return 0;
}

int cmd_cells(Workspace& ws, const RunConfig& cfg, std::ostream& out) {
  const auto& g = ws.group();
  const auto& cp = ws.cells();
  const auto& ad = ws.adata();
  if (cfg.out == "json") {
    Json j = header(ws);
    j["left"] = cp.left;
    j["right"] = cp.right;
    j["two_sided"] = cp.two_sided;
    j["a"] = ad.a;
    j["delta"] = ad.delta;
    j["D"] = ad.dset;
    j["nhat"] = ad.nhat;
    out << j.dump() << "\n";
    return 0;
  }
  out << "type " << ws.type_name() << ", weights " << ws.weights().to_string() << "\n";
  out << cp.num_left << " left cells:\n";
  for (const auto& c : cp.left_cells()) out << "  a=" << ad.a[c.front()] << "  " << cell_text(g, c) << "\n";
  out << cp.num_two_sided << " two-sided cells:\n";
  for (const auto& c : cp.two_sided_cells()) out << "  a=" << ad.a[c.front()] << "  " << cell_text(g, c) << "\n";
  out << "distinguished involutions:";
  for (Elem d : ad.dset) out << " " << g.format(d) << "(n=" << ad.nz[d] << ")";
  out << "\n";
  return 0;
}

int cmd_jring(Workspace& ws, const RunConfig& cfg, std::ostream& out) {
  const auto& g = ws.group();
  const auto& gt = ws.gamma();
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y) {
      // product() is keyed by z^{-1}; emit gamma_{x,y,z} sorted by z.
      std::vector<std::pair<Elem, Integer>> terms;
      for (const auto& t : gt.product(x, y)) terms.emplace_back(g.inverse(t.z), t.g);
      std::sort(terms.begin(), terms.end());
      for (const auto& [z, c] : terms) {
        if (cfg.out == "json")
          out << Json{{"x", x}, {"y", y}, {"z", z}, {"g", to_json(c)}}.dump() << "\n";
        else
          out << "gamma(" << g.format(x) << ", " << g.format(y) << ", " << g.format(z) << ") = " << c << "\n";
      }
    }
  return 0;
}

int cmd_reps(Workspace& ws, const RunConfig& cfg, std::ostream& out) {
  const auto& g = ws.group();
  const auto& reps = ws.reps();
  const auto& cp = ws.cells();
  if (cfg.out == "json") {
    Json j = header(ws);
    j["seed"] = ws.seed();
    Json list = Json::array();
    for (const auto& r : reps) {
      Json mats = Json::array();
      for (Elem w : r.support) mats.push_back({{"w", w}, {"rho", to_json(r.rho[w])}});
      list.push_back({{"label", r.label},
                      {"dim", r.dim},
                      {"a", r.a},
                      {"f", to_json(r.f)},
                      {"two_sided_cell", cp.two_sided[r.support.front()]},
                      {"source_left_cell", r.source_cell},
                      {"support", r.support},
                      {"matrices", mats},
                      {"B", to_json(r.B)}});
    }
    j["reps"] = list;
    out << j.dump() << "\n";
    return 0;
  }
  out << reps.size() << " irreducible J-representations, type " << ws.type_name() << ", weights "
      << ws.weights().to_string() << "\n";
  for (const auto& r : reps) {
    out << "lambda=" << r.label << "  dim " << r.dim << "  a " << r.a << "  f " << r.f << "  B " << matrix_text(r.B)
        << "\n";
    for (Elem w : r.support) out << "    t_" << g.format(w) << " -> " << matrix_text(r.rho[w]) << "\n";
  }
  return 0;
}

Json datum_json(Workspace& ws) {
  const auto& g = ws.group();
  const auto& datum = ws.datum();
  const auto& reps = ws.reps();
  Json lambdas = Json::array();
  for (std::size_t l = 0; l < datum.lambdas.size(); ++l) {
    const std::size_t d = datum.lambdas[l].dim;
    Json els = Json::array();
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t) {
        Json c = Json::array();
        const auto& coeffs = datum.element(l, s, t);
        for (std::size_t w = 0; w < g.size(); ++w)
          if (coeffs[w] != 0) c.push_back({{"w", w}, {"word", g.format(w)}, {"coeff", to_json(coeffs[w])}});
        els.push_back({{"s", s + 1}, {"t", t + 1}, {"cdagger", c}});
      }
    lambdas.push_back({{"label", datum.lambdas[l].label},
                       {"a", datum.lambdas[l].a},
                       {"dim", d},
                       {"B", to_json(reps[l].B)},
                       {"elements", els}});
  }
  Json j = header(ws);
  j["seed"] = ws.seed();
  j["lambdas"] = lambdas;
  j["transition_det"] = to_json(determinant(transition_matrix(datum)));
  if (const auto signs = cdagger_signs(datum))
    j["signs"] = *signs;
  else
    j["signs"] = nullptr;
  return j;
}

void print_datum(Workspace& ws, std::ostream& out) {
  const auto& g = ws.group();
  const auto& datum = ws.datum();
  out << "cellular basis on the c_w^+ = c_w dagger basis, type " << ws.type_name() << ", weights " << ws.weights().to_string()
      << "\n";
  for (std::size_t l = 0; l < datum.lambdas.size(); ++l) {
    const std::size_t d = datum.lambdas[l].dim;
    out << "lambda=" << datum.lambdas[l].label << "  a " << datum.lambdas[l].a << "  dim " << d << "  B "
        << matrix_text(ws.reps()[l].B) << "\n";
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t) {
        out << "  C(" << s + 1 << "," << t + 1 << ") =";
        const auto& coeffs = datum.element(l, s, t);
        bool first = true;
        for (std::size_t w = 0; w < g.size(); ++w) {
          if (coeffs[w] == 0) continue;
          const Integer& c = coeffs[w];
          out << (first ? " " : (c < 0 ? " - " : " + "));
          if (first && c < 0) out << "-";
          const Integer m = abs(c);
          if (m != 1) out << m << "*";
          out << "c_" << g.format(w) << "^+";
          first = false;
        }
        out << "\n";
      }
  }
  out << "transition determinant " << determinant(transition_matrix(datum)) << "\n";
}

Report cellular_report(Workspace& ws) {
  CellularContext ctx{ws.hecke(), ws.kl().kl, ws.h(), ws.adata(), ws.gamma(), ws.phi(), ws.reps()};
  return verify_axioms(ctx, ws.datum());
}

int cmd_cellular(Workspace& ws, const RunConfig& cfg, std::ostream& out) {
  std::optional<GoldenComparison> gold;
  if (!cfg.golden.empty()) {
    if (cfg.golden != "b2") throw std::invalid_argument("unknown golden data set '" + cfg.golden + "' (known: b2)");
    gold = compare_golden_b2(ws.group(), ws.weights(), ws.cells(), ws.adata(), ws.gamma(), ws.reps(), ws.datum());
  }
  const Report r = cellular_report(ws);
  const bool ok = r.all_passed() && (!gold || gold->report.all_passed());
  if (cfg.out == "json") {
    Json j = datum_json(ws);
    j["report"] = to_json(r);
    if (gold) {
      Json rows = Json::array();
      for (const auto& row : gold->rows)
        rows.push_back({{"item", row.item}, {"expected", row.expected}, {"computed", row.computed}, {"match", row.match}});
      j["golden"] = {{"name", cfg.golden}, {"rows", rows}, {"report", to_json(gold->report)}};
    }
    out << j.dump() << "\n";
    return ok ? 0 : 1;
  }
  print_datum(ws, out);
  out << "\n";
  print_report(out, r);
  if (gold) {
    std::size_t w1 = 4, w2 = 8, w3 = 8;
    for (const auto& row : gold->rows) {
      w1 = std::max(w1, row.item.size());
      w2 = std::max(w2, row.expected.size());
      w3 = std::max(w3, row.computed.size());
    }
    out << "\ngolden comparison (" << cfg.golden << ")\n";
    out << std::left << std::setw(static_cast<int>(w1)) << "item" << " | " << std::setw(static_cast<int>(w2))
        << "expected" << " | " << std::setw(static_cast<int>(w3)) << "computed" << " | match\n";
    out << std::string(w1 + w2 + w3 + 14, '-') << "\n";
    for (const auto& row : gold->rows)
      out << std::setw(static_cast<int>(w1)) << row.item << " | " << std::setw(static_cast<int>(w2)) << row.expected
          << " | " << std::setw(static_cast<int>(w3)) << row.computed << " | " << (row.match ? "yes" : "NO") << "\n";
    out << std::right;
    print_report(out, gold->report);
  }
  return ok ? 0 : 1;
}

SpecializationResult run_specialize(Workspace& ws, const SpecTarget& target) {
  return specialize(ws.hecke(), ws.reps(), ws.datum(), ws.modules(), ws.grams(), target, ws.seed());
}

Json spec_json(const SpecializationResult& res) {
  Json lambdas = Json::array();
  for (const auto& l : res.lambdas)
    lambdas.push_back({{"label", l.label}, {"a", l.a}, {"dim", l.dim}, {"gram_rank", l.gram_rank}});
  return Json{{"field", res.field},
              {"at", res.at},
              {"lambdas", lambdas},
              {"lambda_circ", res.lambda_circ},
              {"decomposition", res.decomposition},
              {"complete", res.complete},
              {"report", to_json(res.report)}};
}

void print_spec(std::ostream& out, const SpecializationResult& res) {
  out << "specialization " << res.at << " over " << res.field << "\n";
  out << "Lambda-circ:";
  for (int l : res.lambda_circ) out << " " << l;
  out << "\n";
  out << "lambda   a  dim  rank |";
  for (int l : res.lambda_circ) out << std::setw(4) << l;
  out << "\n" << std::string(23 + 4 * res.lambda_circ.size(), '-') << "\n";
  for (std::size_t i = 0; i < res.lambdas.size(); ++i) {
    const auto& l = res.lambdas[i];
    out << std::setw(6) << l.label << std::setw(4) << l.a << std::setw(5) << l.dim << std::setw(6) << l.gram_rank
        << " |";
    for (int x : res.decomposition[i]) {
      if (x < 0)
        out << std::setw(4) << "?";
      else
        out << std::setw(4) << x;
    }
    out << "\n";
  }
  if (!res.complete) out << "some multiplicities are undecided (?)\n";
  print_report(out, res.report);
}

int cmd_specialize(Workspace& ws, const RunConfig& cfg, std::ostream& out) {
  const auto target = parse_target(cfg.at, cfg.field);
  const auto res = run_specialize(ws, target);
  if (cfg.out == "json") {
    Json j = header(ws);
    j.update(spec_json(res));
    out << j.dump() << "\n";
  } else {
    print_spec(out, res);
  }
  return res.report.all_passed() ? 0 : 1;
}

int cmd_verify(Workspace& ws, const RunConfig& cfg, std::ostream& out) {
  Report r;
  r.append(verify_hecke(ws.hecke(), ws.kl(), ws.h()), "hecke: ");
  r.append(verify_cells(ws.group(), ws.weights(), ws.h(), ws.adata(), ws.cells()), "cells: ");
  r.append(verify_jring(ws.hecke(), ws.h(), ws.adata(), ws.cells(), ws.gamma(), ws.phi(), ws.seed()), "jring: ");
  r.append(verify_jreps(ws.group(), ws.weights(), ws.gamma(), ws.adata(), ws.reps()), "jreps: ");
  r.append(cellular_report(ws), "cellular: ");
  r.append(verify_cellmod(ws.hecke(), ws.reps(), ws.modules(), ws.actions(), ws.grams()), "cellmod: ");
  if (cfg.all) {
    const auto res = run_specialize(ws, parse_target("v=1", "Q"));
    r.append(res.report, "specialize Q v=1: ");
    bool identity = res.complete && res.lambda_circ.size() == res.lambdas.size();
    for (std::size_t i = 0; identity && i < res.decomposition.size(); ++i)
      for (std::size_t j = 0; j < res.decomposition[i].size(); ++j)
        if (res.decomposition[i][j] != (i == j ? 1 : 0)) identity = false;
    r.add("specialize Q v=1: decomposition matrix is the identity", identity);
  }
  if (cfg.out == "json") {
    Json j = header(ws);
    j.update(to_json(r));
    out << j.dump() << "\n";
  } else {
    out << "verification, type " << ws.type_name() << ", weights " << ws.weights().to_string() << "\n";
    print_report(out, r);
  }
  return r.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kazhdan-Lusztig cells, the asymptotic ring J and cellular bases of Hecke algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Cartan type: A1..A5, B2..B4, D4, G2, F4")->required();
    sub->add_option("--weights", cfg.weights, "weights per generator, comma separated (default all 1)");
    sub->add_option("--out", cfg.out, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cache", cfg.cache, "cache directory (default $HECKECELL_CACHE, none if unset)");
    sub->add_option("--jobs", cfg.jobs, "worker threads for the h-table")->check(CLI::Range(1, 256));
    sub->add_option("--seed", cfg.seed, "seed for the representation search");
  };
  std::vector<CLI::App*> subs;
  for (const char* name : {"group", "kl", "cells", "jring", "reps", "cellular", "specialize", "verify"}) {
    static const std::map<std::string, std::string> help{
        {"group", "Weyl group summary"},
        {"kl", "Kazhdan-Lusztig polynomials"},
        {"cells", "left, right and two-sided cells with the a-function"},
        {"jring", "nonzero structure constants of J"},
        {"reps", "integral irreducible J-representations"},
        {"cellular", "cellular basis and axiom report"},
        {"specialize", "cell modules over a specialization v -> q"},
        {"verify", "full verification suite"}};
    auto* sub = app.add_subcommand(name, help.at(name));
    add_common(sub);
    subs.push_back(sub);
  }
  app.get_subcommand("cellular")->add_option("--golden", cfg.golden, "compare with embedded data (b2)");
  app.get_subcommand("specialize")->add_option("--at", cfg.at, "image of v: v=1, v=-1, v=p/q, v=z, v=z^k");
  app.get_subcommand("specialize")->add_option("--field", cfg.field, "target field: Q, Fp:p, Cyc:e");
  app.get_subcommand("verify")->add_flag("--all", cfg.all, "also check the v=1 specialization over Q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Workspace ws(cfg.type, cfg.weights, cache_dir(cfg), cfg.jobs, cfg.seed);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "group") return cmd_group(ws, cfg, out);
    if (cmd == "kl") return cmd_kl(ws, cfg, out);
    if (cmd == "cells") return cmd_cells(ws, cfg, out);
    if (cmd == "jring") return cmd_jring(ws, cfg, out);
    if (cmd == "reps") return cmd_reps(ws, cfg, out);
    if (cmd == "cellular") return cmd_cellular(ws, cfg, out);
    if (cmd == "specialize") return cmd_specialize(ws, cfg, out);
    return cmd_verify(ws, cfg, out);
  } catch (const UnsupportedType& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace heckecell
