#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "morsecat/catalog.hpp"
#include "morsecat/cli.hpp"
#include "morsecat/errors.hpp"

using namespace morsecat;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> details;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      details.push_back(what);
    }
  }
};

ColoredTree by_label(const std::string& label) {
  for (const auto& ct : all_stratifications())
    if (stratification_label(ct) == label) return ct;
  throw LookupError("no stratification " + label);
}

int max_degree(const Tree& t) {
  int d = 0;
  for (int v = 0; v < t.vertex_count; ++v) d = std::max(d, t.degree(v));
  return d;
}

std::vector<int> relative(std::vector<int> cycle) {
  auto sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  for (int& x : cycle) x = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
  return cycle;
}

std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<CatalogEntry> both_catalogs() {
  auto out = build_single_curve_catalog();
  for (auto& e : build_two_curve_catalog()) out.push_back(e);
  return out;
}

Check tree_census() {
  Check c;
  const std::size_t expected[] = {1, 1, 2, 3};
  for (int n = 1; n <= 4; ++n) {
    auto got = enumerate_trees(n).size();
    c.expect(got == expected[n - 1], std::to_string(n) + " edges: " + std::to_string(got));
  }
  return c;
}

Check coloring_census() {
  Check c;
  std::map<int, std::size_t> by_degree;
  for (const auto& t : enumerate_trees(4)) by_degree[max_degree(t)] = enumerate_pairings(t).size();
  c.expect(by_degree[4] == 1, "T1: " + std::to_string(by_degree[4]));
  c.expect(by_degree[3] == 2, "T2: " + std::to_string(by_degree[3]));
  c.expect(by_degree[2] == 3, "T3: " + std::to_string(by_degree[2]));
  return c;
}

Check closure_surfaces() {
  Check c;
  using M = std::multiset<std::pair<int, int>>;
  const std::map<std::string, M> expected{
      {"T1", {{2, 0}}},
      {"T2-A", {{1, 0}, {1, 1}}},
      {"T3-A", {{1, 0}, {1, 0}, {0, 2}}},
      {"T3-B", {{0, 2}, {0, 2}, {0, 2}}},
      {"T3-C", {{1, 0}, {0, 2}, {0, 2}}},
  };
  for (const auto& [label, want] : expected) {
    auto ct = by_label(label);
    M got;
    for (int v = 0; v < ct.tree.vertex_count; ++v) {
      auto p = closure_surface(ct, v);
      if (!(p.genus == 0 && p.boundaries == 1)) got.insert({p.genus, p.boundaries});
    }
    c.expect(got == want, label);
  }
  auto t1 = by_label("T1");
  for (int v = 0; v < t1.tree.vertex_count; ++v)
    if (t1.tree.degree(v) == 4) c.expect(closure_surface(t1, v).genus == 2, "T1 center");
  return c;
}

Check lower_bounds() {
  Check c;
  const std::map<std::string, int> expected{{"S", 4},    {"T1", 6},   {"T2-A", 6}, {"T2-B", 4},
                                            {"T3-A", 8}, {"T3-B", 4}, {"T3-C", 6}};
  for (const auto& [label, want] : expected) {
    int got = min_critical_points(by_label(label));
    c.expect(got == want, label + ": " + std::to_string(got));
  }
  return c;
}

Check feasibility() {
  Check c;
  auto f = feasible_stratifications(4);
  c.expect(f.size() == 3, "count " + std::to_string(f.size()));
  std::set<std::string> labels;
  for (const auto& ct : f) labels.insert(stratification_label(ct));
  c.expect(labels == std::set<std::string>{"S", "T2-B", "T3-B"}, "labels");
  return c;
}

int points_on_curves(const MorseStructure& s) {
  return static_cast<int>(std::count_if(s.points.begin(), s.points.end(), [](const PointLocation& p) { return p.curve >= 0; }));
}

Check single_curve() {
  Check c;
  auto cat = build_single_curve_catalog();
  int two = 0, four = 0;
  std::set<std::string> keys;
  for (const auto& e : cat) {
    two += points_on_curves(e.structure) == 2;
    four += points_on_curves(e.structure) == 4;
    keys.insert(e.key);
  }
  c.expect(two == 7, "two-point structures: " + std::to_string(two));
  c.expect(four == 6, "four-point structures: " + std::to_string(four));
  c.expect(cat.size() == 13, "total: " + std::to_string(cat.size()));
  c.expect(keys.size() == 13, "distinct keys: " + std::to_string(keys.size()));
  return c;
}

Check two_curves() {
  Check c;
  std::map<std::string, int> counts;
  for (const auto& e : build_two_curve_catalog()) ++counts[stratification_label(e.structure.stratification)];
  c.expect(counts["T2-B"] == 8, "T2-B: " + std::to_string(counts["T2-B"]));
  c.expect(counts["T3-B"] == 3, "T3-B: " + std::to_string(counts["T3-B"]));
  for (const auto* label : {"T1", "T2-A", "T3-A", "T3-C"}) {
    auto found = enumerate_structures(by_label(label), 4).size();
    c.expect(found == 0 && counts[label] == 0, std::string(label) + " is not empty");
  }
  return c;
}

Check oracle_agreement() {
  Check c;
  auto report = cross_validate(4);
  c.expect(report.ok(), report.text());
  c.expect(report.single_curve_enumerated == 13 && report.two_curve_enumerated == 11, "enumerated counts");
  return c;
}

Check cyclic_order_law() {
  Check c;
  const std::vector<int> law{0, 2, 1, 3};
  EnumerationStats stats;
  auto found = enumerate_structures(by_label("S"), 4, {}, &stats);
  c.expect(stats.cycle_candidates > 0, "no cyclic orders tried");
  c.expect(stats.accepted_cycles == std::vector<std::vector<int>>{law}, "accepted orders differ");
  int circles = 0;
  for (const auto& e : found)
    for (const auto& dg : e.structure.pieces)
      for (std::size_t k = 0; k < dg.decoration.circles.size(); ++k) {
        if (dg.decoration.circles[k].paths.size() != 4) continue;
        ++circles;
        c.expect(relative(stratum_cycle(dg, static_cast<int>(k))) == law, e.case_label);
        // Every reassignment of the four values: alternating ones give the
        // law, the rest are rejected.
        auto cyc = stratum_cycle(dg, static_cast<int>(k));
        std::vector<int> values = cyc;
        std::sort(values.begin(), values.end());
        std::vector<int> perm{0, 1, 2, 3};
        int accepted = 0;
        do {
          auto moved = dg;
          for (int v = 0; v < moved.reeb.vertex_count(); ++v) {
            auto it = std::find(values.begin(), values.end(), dg.reeb.rank[v]);
            if (it != values.end()) moved.reeb.rank[v] = values[perm[it - values.begin()]];
          }
          try {
            c.expect(relative(stratum_cycle(moved, static_cast<int>(k))) == law, "accepted a foreign order");
            ++accepted;
          } catch (const ValidationError&) {
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
        c.expect(accepted == 8, "accepted reassignments: " + std::to_string(accepted));
      }
  c.expect(circles > 0, "no four-point circles generated");
  for (const auto& e : build_single_curve_catalog())
    if (points_on_curves(e.structure) == 4) c.expect(relative(curve_cycle(e.structure, 0)) == law, e.case_label);
  return c;
}

Check property_suites() {
  Check c;
  std::mt19937 rng(2024);
  auto entries = both_catalogs();

  std::vector<DistinguishingGraph> pool;
  for (const auto& e : entries)
    for (const auto& dg : e.structure.pieces) pool.push_back(dg);
  std::size_t originals = pool.size();
  for (std::size_t i = 0; i < originals; i += 2) {
    const auto& dg = pool[i];
    pool.push_back(relabel(dg, random_perm(dg.reeb.vertex_count(), rng), random_perm(dg.reeb.edge_count(), rng),
                           random_perm(static_cast<int>(dg.decoration.paths.size()), rng),
                           random_perm(static_cast<int>(dg.decoration.circles.size()), rng)));
  }
  std::size_t n = pool.size();
  std::vector<std::vector<char>> eq(n, std::vector<char>(n));
  std::vector<std::string> keys;
  for (const auto& dg : pool) keys.push_back(dg_canonical(dg));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) eq[i][j] = dg_equivalent(pool[i], pool[j]);
  for (std::size_t i = 0; i < n; ++i) {
    c.expect(eq[i][i], "dg_equivalent is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      c.expect(eq[i][j] == eq[j][i], "dg_equivalent is not symmetric");
      c.expect(static_cast<bool>(eq[i][j]) == (keys[i] == keys[j]), "dg key disagrees with dg_equivalent");
      if (eq[i][j])
        for (std::size_t k = 0; k < n; ++k) c.expect(!eq[j][k] || eq[i][k], "dg_equivalent is not transitive");
    }
  }

  int trials = 0;
  for (; trials < 1000; ++trials) {
    const auto& e = entries[rng() % entries.size()];
    auto moved = randomly_relabeled(e.structure, rng);
    c.expect(structure_canonical(moved) == e.key, e.case_label + ": key changed under relabeling");
    if (trials % 20 == 0) c.expect(structure_equivalent(moved, e.structure), e.case_label + ": not equivalent");
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j)
      c.expect(structure_equivalent(entries[i].structure, entries[j].structure) == (i == j), "distinct entries equivalent");

  long pieces = 0;
  for (const auto& ct : all_stratifications())
    for (const auto& e : enumerate_structures(ct, 4))
      for (int v = 0; v < ct.tree.vertex_count; ++v, ++pieces)
        c.expect(betti(e.structure.pieces[v].reeb) == closure_surface(ct, v).genus, e.case_label + ": betti");
  c.expect(pieces > 0, "no generated pieces");

  c.expect(enumerate_optimal_reeb(1).size() == 1, "genus 1 Reeb graphs");
  c.expect(enumerate_optimal_reeb(2).size() == 3, "genus 2 Reeb graphs");
  return c;
}

Check determinism() {
  Check c;
  std::ostringstream a, b, sink;
  c.expect(cli::cmd_check({}, a, sink) == 0, "check failed");
  c.expect(cli::cmd_check({}, b, sink) == 0, "check failed");
  c.expect(a.str() == b.str(), "check reports differ");
  for (int curves : {1, 2})
    for (const auto* format : {"text", "json"}) {
      std::ostringstream serial, parallel;
      cli::cmd_classify({curves, 4, format, 1}, serial, sink);
      cli::cmd_classify({curves, 4, format, 8}, parallel, sink);
      c.expect(serial.str() == parallel.str(), "classify output depends on threads");
    }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"tree census", tree_census},
      {"coloring census", coloring_census},
      {"closure surfaces", closure_surfaces},
      {"lower bounds", lower_bounds},
      {"feasibility gate", feasibility},
      {"single-curve catalog", single_curve},
      {"two-curve catalog", two_curves},
      {"oracle agreement", oracle_agreement},
      {"cyclic-order law", cyclic_order_law},
      {"property suites", property_suites},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (c.ok ? "pass" : "fail") << "  " << criteria[i].first << '\n';
    for (std::size_t k = 0; k < c.details.size() && k < 5; ++k) std::cout << "    " << c.details[k] << '\n';
    failed += !c.ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria pass") << '\n';
  return failed ? 1 : 0;
}
