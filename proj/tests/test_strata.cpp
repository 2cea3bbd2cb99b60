#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "morsecat/errors.hpp"
#include "morsecat/strata.hpp"

using namespace morsecat;

namespace {

Tree permuted(const Tree& t, const std::vector<int>& p) {
  std::vector<std::array<int, 2>> edges;
  for (const auto& e : t.edges) edges.push_back({std::min(p[e[0]], p[e[1]]), std::max(p[e[0]], p[e[1]])});
  std::shuffle(edges.begin(), edges.end(), std::mt19937(7));
  return make_tree(t.vertex_count, edges);
}

ColoredTree by_label(const std::string& label) {
  for (const auto& ct : all_stratifications())
    if (stratification_label(ct) == label) return ct;
  FAIL("no stratification " << label);
  return {};
}

int max_degree(const Tree& t) {
  int d = 0;
  for (int v = 0; v < t.vertex_count; ++v) d = std::max(d, t.degree(v));
  return d;
}

// Exhaustive minimum over point budgets with bounded entries, optionally
// under an extra predicate.
int brute_force_minimum(const ColoredTree& ct, int bound, const std::function<bool(const PointBudget&)>& extra) {
  PointBudget b;
  b.per_curve.assign(ct.blocks.size(), 2);
  b.per_vertex_interior.assign(ct.tree.vertex_count, 0);
  int best = -1;
  std::function<void(std::size_t, int)> vertices = [&](std::size_t v, int sum) {
    if (best >= 0 && sum >= best) return;
    if (v == b.per_vertex_interior.size()) {
      if (satisfies_constraints(ct, b) && extra(b)) best = sum;
      return;
    }
    for (int k = 0; k <= bound; ++k) {
      b.per_vertex_interior[v] = k;
      vertices(v + 1, sum + k);
    }
    b.per_vertex_interior[v] = 0;
  };
  std::function<void(std::size_t, int)> curves = [&](std::size_t c, int sum) {
    if (c == b.per_curve.size()) return vertices(0, sum);
    for (int k = 0; k <= bound; ++k) {
      b.per_curve[c] = k;
      curves(c + 1, sum + k);
    }
  };
  curves(0, 0);
  return best;
}

}  // namespace

TEST_CASE("free tree census for 1 to 8 edges") {
  const std::size_t expected[] = {1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 8; ++n) {
    auto trees = enumerate_trees(n);
    CHECK(trees.size() == expected[n - 1]);
    std::set<std::string> keys;
    for (const auto& t : trees) {
      CHECK(t.vertex_count == n + 1);
      CHECK(canonical_tree(t) == t);
      keys.insert(tree_canonical(t));
    }
    CHECK(keys.size() == trees.size());
  }
  CHECK_THROWS_AS(enumerate_trees(0), RangeError);
  CHECK_THROWS_AS(enumerate_trees(9), RangeError);
}

TEST_CASE("tree canonical key is invariant under random relabeling") {
  std::mt19937 rng(12345);
  std::vector<Tree> pool;
  for (int n = 3; n <= 8; ++n)
    for (const auto& t : enumerate_trees(n)) pool.push_back(t);
  for (int trial = 0; trial < 1200; ++trial) {
    const Tree& t = pool[rng() % pool.size()];
    std::vector<int> p(t.vertex_count);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    Tree u = permuted(t, p);
    REQUIRE(tree_canonical(u) == tree_canonical(t));
    REQUIRE(canonical_tree(u) == canonical_tree(t));
  }
}

TEST_CASE("tree automorphism groups") {
  auto star = make_tree(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto path = make_tree(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(tree_automorphisms(star).size() == 24);
  CHECK(tree_automorphisms(path).size() == 2);
  for (const auto& p : tree_automorphisms(path)) CHECK(permuted(path, p) == path);
}

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(make_tree(3, {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(make_tree(3, {{0, 1}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(make_tree(3, {{0, 0}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(make_tree(4, {{0, 1}, {0, 5}, {2, 3}}), ValidationError);
  CHECK_THROWS_AS(make_tree(4, {{0, 1}, {0, 1}, {2, 3}}), ValidationError);
  Tree bad{3, {{1, 0}, {1, 2}}};
  CHECK_THROWS_AS(validate_tree(bad), ValidationError);
}

TEST_CASE("pairing census on the three four-edge trees") {
  auto trees = enumerate_trees(4);
  REQUIRE(trees.size() == 3);
  std::map<int, std::size_t> by_degree;
  for (const auto& t : trees) {
    auto pairings = enumerate_pairings(t);
    by_degree[max_degree(t)] = pairings.size();
    for (const auto& ct : pairings) {
      CHECK_NOTHROW(validate_colored_tree(ct));
      std::vector<int> uses(t.edges.size(), 0);
      for (const auto& b : ct.blocks) ++uses[b[0]], ++uses[b[1]];
      CHECK(std::all_of(uses.begin(), uses.end(), [](int u) { return u == 1; }));
    }
    // No automorphism relates two returned pairings.
    for (std::size_t i = 0; i < pairings.size(); ++i)
      for (std::size_t j = i + 1; j < pairings.size(); ++j)
        for (const auto& a : tree_automorphisms(t)) {
          auto img = relabel(pairings[i], a);
          CHECK(colored_tree_canonical(img) != colored_tree_canonical(pairings[j]));
          std::set<std::set<std::array<int, 2>>> bi, bj;
          for (const auto& b : img.blocks) bi.insert({img.tree.edges[b[0]], img.tree.edges[b[1]]});
          for (const auto& b : pairings[j].blocks) bj.insert({t.edges[b[0]], t.edges[b[1]]});
          CHECK(bi != bj);
        }
  }
  CHECK(by_degree[4] == 1);
  CHECK(by_degree[3] == 2);
  CHECK(by_degree[2] == 3);
  CHECK(enumerate_pairings(enumerate_trees(2).front()).size() == 1);
  CHECK_THROWS_AS(enumerate_pairings(enumerate_trees(3).front()), StructuralError);
}

TEST_CASE("colored tree keys survive relabeling") {
  std::mt19937 rng(99);
  for (const auto& ct : all_stratifications())
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> p(ct.tree.vertex_count);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      auto moved = relabel(ct, p);
      CHECK(colored_tree_canonical(moved) == colored_tree_canonical(ct));
      CHECK(stratification_label(moved) == stratification_label(ct));
      auto cc = canonical_coloring(moved);
      CHECK(cc.form == ct);
      for (const auto& m : cc.maps) CHECK(relabel(moved, m) == ct);
    }
}

TEST_CASE("stratification labels") {
  std::set<std::string> labels;
  for (const auto& ct : all_stratifications()) labels.insert(stratification_label(ct));
  CHECK(labels == std::set<std::string>{"S", "T1", "T2-A", "T2-B", "T3-A", "T3-B", "T3-C"});
  CHECK(all_stratifications().size() == 7);
}

TEST_CASE("closure surfaces of the 2-strata") {
  auto non_disks = [](const ColoredTree& ct) {
    std::multiset<std::pair<int, int>> out;
    for (int v = 0; v < ct.tree.vertex_count; ++v) {
      auto p = closure_surface(ct, v);
      if (!(p.genus == 0 && p.boundaries == 1)) out.insert({p.genus, p.boundaries});
    }
    return out;
  };
  using M = std::multiset<std::pair<int, int>>;
  CHECK(non_disks(by_label("S")) == M{{1, 0}});
  CHECK(non_disks(by_label("T1")) == M{{2, 0}});
  CHECK(non_disks(by_label("T2-A")) == M{{1, 0}, {1, 1}});
  CHECK(non_disks(by_label("T2-B")) == M{{1, 1}, {0, 2}});
  CHECK(non_disks(by_label("T3-A")) == M{{1, 0}, {1, 0}, {0, 2}});
  CHECK(non_disks(by_label("T3-B")) == M{{0, 2}, {0, 2}, {0, 2}});
  CHECK(non_disks(by_label("T3-C")) == M{{1, 0}, {0, 2}, {0, 2}});
  CHECK_THROWS_AS(closure_surface(by_label("S"), 3), LookupError);
}

TEST_CASE("critical point lower bounds") {
  const std::map<std::string, int> expected{{"S", 4},    {"T1", 6},   {"T2-A", 6}, {"T2-B", 4},
                                            {"T3-A", 8}, {"T3-B", 4}, {"T3-C", 6}};
  for (const auto& ct : all_stratifications())
    CHECK(min_critical_points(ct) == expected.at(stratification_label(ct)));
}

TEST_CASE("lower bound equals the brute-force minimum and is monotone") {
  const int budget = 4;
  for (const auto& ct : all_stratifications()) {
    int max_genus = 0;
    for (int v = 0; v < ct.tree.vertex_count; ++v) max_genus = std::max(max_genus, closure_surface(ct, v).genus);
    int bound = 2 + 2 * max_genus + budget;
    int free_min = brute_force_minimum(ct, bound, [](const PointBudget&) { return true; });
    CHECK(min_critical_points(ct) == free_min);
    // Extra constraints never lower the minimum.
    for (std::size_t c = 0; c < ct.blocks.size(); ++c) {
      int m = brute_force_minimum(ct, bound, [c](const PointBudget& b) { return b.per_curve[c] >= 4; });
      CHECK(m >= free_min);
    }
    for (int v = 0; v < ct.tree.vertex_count; ++v) {
      int m = brute_force_minimum(ct, bound, [v](const PointBudget& b) { return b.per_vertex_interior[v] >= 1; });
      CHECK(m >= free_min);
    }
  }
}

TEST_CASE("feasibility gate") {
  std::set<std::string> four;
  for (const auto& ct : feasible_stratifications(4)) four.insert(stratification_label(ct));
  CHECK(four == std::set<std::string>{"S", "T2-B", "T3-B"});
  // Every double curve carries at least two points, so fewer than four points
  // fit nowhere.
  CHECK(feasible_stratifications(3).empty());
  CHECK(feasible_stratifications(6).size() == 6);
  CHECK(feasible_stratifications(8).size() == 7);
}

TEST_CASE("point distributions") {
  auto s = by_label("S");
  auto d = point_distributions(s, 4);
  REQUIRE(d.size() == 2);
  for (const auto& b : d) {
    CHECK(b.total() == 4);
    CHECK(satisfies_constraints(s, b));
  }
  CHECK(point_distributions(by_label("T1"), 4).empty());
  CHECK(point_distributions(by_label("T3-B"), 4).size() == 1);
  CHECK(point_distributions(by_label("T2-B"), 4).size() == 1);
  PointBudget odd{{3}, {1, 0, 0}};
  CHECK_FALSE(satisfies_constraints(s, odd));
}
