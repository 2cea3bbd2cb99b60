#include "morsecat/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "morsecat/catalog.hpp"
#include "morsecat/document.hpp"
#include "morsecat/dot.hpp"
#include "morsecat/errors.hpp"

namespace morsecat::cli {

std::string short_digest(const std::string& key) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str().substr(0, 12);
}

namespace {

std::vector<CatalogEntry> catalog_for(int double_curves) {
  return double_curves == 1 ? build_single_curve_catalog() : build_two_curve_catalog();
}

std::vector<CatalogEntry> all_entries() {
  auto out = build_single_curve_catalog();
  for (auto& e : build_two_curve_catalog()) out.push_back(std::move(e));
  return out;
}

std::vector<CatalogEntry> enumerated_catalog(int double_curves, int budget, int threads) {
  std::vector<CatalogEntry> out;
  for (const auto& ct : all_stratifications())
    if (static_cast<int>(ct.blocks.size()) == double_curves)
      for (auto& e : enumerate_structures(ct, budget, EnumerationOptions{threads})) out.push_back(std::move(e));
  return out;
}

}  // namespace

int cmd_classify(const ClassifyOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<CatalogEntry> entries;
  bool verified = opt.budget == 4;
  if (verified) {
    auto report = cross_validate(4, EnumerationOptions{opt.threads});
    if (!report.ok()) {
      err << report.text();
      return 1;
    }
    entries = catalog_for(opt.double_curves);
  } else {
    entries = enumerated_catalog(opt.double_curves, opt.budget, opt.threads);
  }

  if (opt.format == "json") {
    out << serialize_document(make_document(opt.double_curves, opt.budget, verified, entries));
    return 0;
  }
  out << "double curves: " << opt.double_curves << ", critical points: " << opt.budget
      << (verified ? "" : " (unverified: no constructive catalog for this budget)") << '\n';
  std::map<std::string, int> per_stratum;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    std::string label = stratification_label(e.structure.stratification);
    ++per_stratum[label];
    out << std::setw(3) << i + 1 << "  " << short_digest(e.key) << "  " << e.case_label << '\n';
    out << "     " << e.key << '\n';
  }
  for (const auto& rec : stratification_records(opt.double_curves, opt.budget))
    out << rec.label << ": " << per_stratum[rec.label] << " (at least " << rec.min_critical_points
        << " critical points needed)\n";
  out << "total: " << entries.size() << '\n';
  return 0;
}

// --- render ---------------------------------------------------------------------------

namespace {

std::optional<std::string> render_tree(const std::string& id) {
  for (const auto& ct : all_stratifications())
    if (id == colored_tree_canonical(ct) || id == stratification_label(ct)) return colored_tree_dot(ct);
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_trees(n))
      if (id == tree_canonical(t)) return tree_dot(t);
  return std::nullopt;
}

std::optional<std::string> render_reeb(const std::string& id) {
  for (int g = 0; g <= 3; ++g) {
    auto graphs = enumerate_optimal_reeb(g);
    for (std::size_t k = 0; k < graphs.size(); ++k)
      if (id == reeb_canonical(graphs[k]) || id == "optimal-g" + std::to_string(g) + "-" + std::to_string(k + 1))
        return reeb_dot(graphs[k]);
  }
  for (const auto& e : all_entries())
    for (const auto& dg : e.structure.pieces) {
      if (id == dg_canonical(dg)) return distinguishing_dot(dg);
      if (id == reeb_canonical(dg.reeb) || id == reeb_key_with_ranks(dg.reeb)) return reeb_dot(dg.reeb);
    }
  return std::nullopt;
}

std::optional<std::string> render_structure(const std::string& id) {
  for (const auto& e : all_entries())
    if (id == e.key || id == e.case_label || id == short_digest(e.key))
      return structure_dot(e.structure, e.case_label + " " + short_digest(e.key));
  return std::nullopt;
}

std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative())
    if (const char* dir = std::getenv("MORSECAT_OUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  return p;
}

}  // namespace

int cmd_render(const RenderOptions& opt, std::ostream& out, std::ostream& err) {
  std::optional<std::string> dot;
  if (opt.target == "tree") dot = render_tree(opt.id);
  if (opt.target == "reeb") dot = render_reeb(opt.id);
  if (opt.target == "structure") dot = render_structure(opt.id);
  if (!dot) {
    err << "unknown " << opt.target << " id: " << opt.id << '\n';
    return 1;
  }
  if (opt.out.empty()) {
    out << *dot;
    return 0;
  }
  auto path = output_path(opt.out);
  std::ofstream file(path, std::ios::binary);
  file << *dot;
  if (!file) {
    err << "cannot write " << path.string() << '\n';
    return 1;
  }
  return 0;
}

// --- check ------------------------------------------------------------------------------

namespace {

using Failures = std::vector<std::string>;

void expect(Failures& f, bool ok, const std::string& what) {
  if (!ok) f.push_back(what);
}

Failures strata_suite() {
  Failures f;
  const int trees[] = {1, 1, 2, 3};
  for (int n = 1; n <= 4; ++n)
    expect(f, static_cast<int>(enumerate_trees(n).size()) == trees[n - 1],
           "tree classes with " + std::to_string(n) + " edges");
  for (const auto& t : enumerate_trees(4)) {
    int maxdeg = 0;
    for (int v = 0; v < t.vertex_count; ++v) maxdeg = std::max(maxdeg, t.degree(v));
    expect(f, static_cast<int>(enumerate_pairings(t).size()) == 5 - maxdeg,
           "pairing classes on " + tree_canonical(t));
  }
  const std::map<std::string, int> bounds{{"S", 4},    {"T1", 6},   {"T2-A", 6}, {"T2-B", 4},
                                          {"T3-A", 8}, {"T3-B", 4}, {"T3-C", 6}};
  for (const auto& ct : all_stratifications()) {
    auto label = stratification_label(ct);
    expect(f, bounds.count(label) && bounds.at(label) == min_critical_points(ct), "lower bound on " + label);
  }
  expect(f, feasible_stratifications(4).size() == 3, "three stratifications admit 4 critical points");
  return f;
}

Failures reeb_suite() {
  Failures f;
  const int optimal[] = {1, 1, 3, 31};
  for (int g = 0; g <= 3; ++g) {
    auto graphs = enumerate_optimal_reeb(g);
    expect(f, static_cast<int>(graphs.size()) == optimal[g], "optimal Reeb graphs of genus " + std::to_string(g));
    for (const auto& r : graphs) {
      expect(f, betti(r) == g, "Betti number of " + reeb_canonical(r));
      for (const auto& e : r.edges) expect(f, r.rank[e.source] < r.rank[e.target], "edge order in " + reeb_canonical(r));
    }
  }
  return f;
}

Failures distinguish_suite(const std::vector<CatalogEntry>& entries) {
  Failures f;
  std::vector<DistinguishingGraph> pieces;
  for (const auto& e : entries)
    for (const auto& dg : e.structure.pieces) {
      expect(f, validate_distinguishing(dg).empty(), "piece of " + e.case_label + " validates");
      for (int c = 0; c < static_cast<int>(dg.decoration.circles.size()); ++c) {
        if (dg.decoration.circles[c].paths.size() != 4) continue;
        auto cyc = stratum_cycle(dg, c);
        expect(f, cyc == std::vector<int>{0, 2, 1, 3}, "cyclic order p0 p2 p1 p3 in " + e.case_label);
      }
      pieces.push_back(dg);
    }
  std::vector<std::string> keys;
  for (const auto& dg : pieces) keys.push_back(dg_canonical(dg));
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i; j < pieces.size(); ++j)
      expect(f, (keys[i] == keys[j]) == dg_equivalent(pieces[i], pieces[j]), "canonical key agrees with equivalence");
  return f;
}

Failures catalog_suite(const std::vector<CatalogEntry>& one, const std::vector<CatalogEntry>& two) {
  Failures f;
  expect(f, one.size() == 13, "13 structures with one double curve");
  expect(f, two.size() == 11, "11 structures with two double curves");
  std::set<std::string> keys;
  for (const auto* cat : {&one, &two})
    for (const auto& e : *cat) {
      expect(f, validate_structure(e.structure).empty(), e.case_label + " validates");
      expect(f, structure_canonical(e.structure) == e.key, e.case_label + " key is current");
      expect(f, keys.insert(e.key).second, e.case_label + " key is distinct");
      for (int v = 0; v < static_cast<int>(e.structure.pieces.size()); ++v)
        expect(f, betti(e.structure.pieces[v].reeb) == closure_surface(e.structure.stratification, v).genus,
               e.case_label + " Betti number equals genus");
    }
  return f;
}

Failures fixture_suite(const std::string& path) {
  Failures f;
  std::ifstream file(path, std::ios::binary);
  if (!file) return {"cannot read " + path};
  std::stringstream text;
  text << file.rdbuf();
  CatalogDocument doc;
  try {
    doc = parse_document(text.str());
  } catch (const std::exception& e) {
    return {e.what()};
  }
  if (doc.budget != 4 || (doc.double_curves != 1 && doc.double_curves != 2))
    return {"fixture must hold a verified catalog with 4 critical points"};
  std::set<std::string> stored, expected;
  for (const auto& e : doc.entries) {
    auto bad = validate_structure(e.structure);
    if (!bad.empty()) {
      f.push_back(e.case_label + ": " + bad.front());
      continue;
    }
    expect(f, structure_canonical(e.structure) == e.key, e.case_label + ": stored key differs from its structure");
    stored.insert(e.key);
  }
  for (const auto& e : catalog_for(doc.double_curves)) expected.insert(e.key);
  for (const auto& k : expected)
    if (!stored.count(k)) f.push_back("missing key " + k);
  for (const auto& k : stored)
    if (!expected.count(k)) f.push_back("unexpected key " + k);
  expect(f, doc.stratifications == stratification_records(doc.double_curves, 4), "stratification records are current");
  return f;
}

}  // namespace

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream&) {
  auto one = build_single_curve_catalog();
  auto two = build_two_curve_catalog();
  std::vector<CatalogEntry> both = one;
  both.insert(both.end(), two.begin(), two.end());

  std::vector<std::pair<std::string, std::function<Failures()>>> suites{
      {"strata", strata_suite},
      {"reeb", reeb_suite},
      {"distinguish", [&] { return distinguish_suite(both); }},
      {"catalog", [&] { return catalog_suite(one, two); }},
  };
  if (!opt.catalog.empty()) suites.emplace_back("catalog fixture", [&] { return fixture_suite(opt.catalog); });

  bool ok = true;
  for (const auto& [name, run] : suites) {
    Failures f;
    try {
      f = run();
    } catch (const std::exception& e) {
      f.push_back(std::string("exception: ") + e.what());
    }
    out << (f.empty() ? "pass" : "FAIL") << "  " << name << '\n';
    for (const auto& msg : f) out << "      " << msg << '\n';
    ok &= f.empty();
  }

  auto report = cross_validate(4, EnumerationOptions{opt.threads});
  out << (report.ok() ? "pass" : "FAIL") << "  cross-validation\n" << report.text();
  ok &= report.ok();
  out << "agreement: " << report.single_curve_constructed << '/' << report.single_curve_enumerated << ", "
      << report.two_curve_constructed << '/' << report.two_curve_enumerated << '\n';
  out << (ok ? "all checks passed" : "checks failed") << '\n';
  return ok ? 0 : 1;
}

// --- argument parsing -------------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple Morse functions with four critical points on immersed spheres"};
  app.name("morsecat");
  app.require_subcommand(1);

  ClassifyOptions copt;
  auto* classify = app.add_subcommand("classify", "List the structures for one or two double curves");
  classify->add_option("--double-curves", copt.double_curves, "Number of double curves")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  classify->add_option("--budget", copt.budget, "Number of critical points")->check(CLI::Range(2, 5));
  classify->add_option("--format", copt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  classify->add_option("--threads", copt.threads, "Worker threads for the enumeration")->check(CLI::Range(1, 64));

  RenderOptions ropt;
  auto* render = app.add_subcommand("render", "Write a DOT diagram");
  render->add_option("--target", ropt.target, "Object kind")->check(CLI::IsMember({"tree", "reeb", "structure"}));
  render->add_option("--id", ropt.id, "Canonical key, label or short id")->required();
  render->add_option("--out", ropt.out, "Output file (relative to MORSECAT_OUT_DIR when set)");

  CheckOptions kopt;
  auto* check = app.add_subcommand("check", "Run every invariant suite and the cross-validation");
  check->add_option("--catalog", kopt.catalog, "JSON catalog to verify against the built-in catalogs");
  check->add_option("--threads", kopt.threads, "Worker threads for the enumeration")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (*classify) return cmd_classify(copt, out, err);
    if (*render) return cmd_render(ropt, out, err);
    return cmd_check(kopt, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace morsecat::cli
