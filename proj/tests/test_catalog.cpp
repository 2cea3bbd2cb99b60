#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "morsecat/catalog.hpp"
#include "morsecat/errors.hpp"

using namespace morsecat;

namespace {

ColoredTree by_label(const std::string& label) {
  for (const auto& ct : all_stratifications())
    if (stratification_label(ct) == label) return ct;
  FAIL("no stratification " << label);
  return {};
}

int points_on_curves(const MorseStructure& s) {
  return static_cast<int>(std::count_if(s.points.begin(), s.points.end(), [](const PointLocation& p) { return p.curve >= 0; }));
}

std::vector<std::string> keys_of(const std::vector<CatalogEntry>& entries) {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.key);
  return out;
}

std::map<std::string, int> per_label(const std::vector<CatalogEntry>& entries) {
  std::map<std::string, int> out;
  for (const auto& e : entries) ++out[stratification_label(e.structure.stratification)];
  return out;
}

}  // namespace

TEST_CASE("one double curve: 7 + 6 = 13") {
  auto cat = build_single_curve_catalog();
  REQUIRE(cat.size() == 13);
  int two = 0, four = 0;
  std::set<std::string> keys;
  for (const auto& e : cat) {
    CHECK(validate_structure(e.structure).empty());
    CHECK(stratification_label(e.structure.stratification) == "S");
    CHECK(structure_canonical(e.structure) == e.key);
    keys.insert(e.key);
    int on = points_on_curves(e.structure);
    two += on == 2;
    four += on == 4;
    if (on == 4) CHECK(curve_cycle(e.structure, 0) == std::vector<int>{0, 2, 1, 3});
  }
  CHECK(two == 7);
  CHECK(four == 6);
  CHECK(keys.size() == 13);
  int both_ends = 0;
  for (const auto& e : cat) both_ends += e.case_label.find("pair-(p0,p3)") != std::string::npos;
  CHECK(both_ends == 2);
}

TEST_CASE("two double curves: 8 + 3 = 11") {
  auto cat = build_two_curve_catalog();
  REQUIRE(cat.size() == 11);
  auto counts = per_label(cat);
  CHECK(counts["T2-B"] == 8);
  CHECK(counts["T3-B"] == 3);
  CHECK(counts.size() == 2);
  std::set<std::string> keys;
  for (const auto& e : cat) {
    CHECK(validate_structure(e.structure).empty());
    CHECK(e.structure.stratification == canonical_coloring(e.structure.stratification).form);
    keys.insert(e.key);
    for (int b = 0; b < 2; ++b) CHECK(curve_cycle(e.structure, b).size() == 2);
  }
  CHECK(keys.size() == 11);
}

TEST_CASE("keys are distinct across both catalogs") {
  auto one = keys_of(build_single_curve_catalog());
  auto two = keys_of(build_two_curve_catalog());
  std::set<std::string> all(one.begin(), one.end());
  all.insert(two.begin(), two.end());
  CHECK(all.size() == one.size() + two.size());
}

TEST_CASE("exhaustive search reproduces the catalogs") {
  std::map<std::string, std::size_t> expected{{"S", 13},   {"T1", 0},   {"T2-A", 0}, {"T2-B", 8},
                                              {"T3-A", 0}, {"T3-B", 3}, {"T3-C", 0}};
  auto one = keys_of(build_single_curve_catalog());
  auto two = keys_of(build_two_curve_catalog());
  std::set<std::string> constructed(one.begin(), one.end());
  constructed.insert(two.begin(), two.end());
  for (const auto& ct : all_stratifications()) {
    auto found = enumerate_structures(ct, 4);
    CHECK(found.size() == expected.at(stratification_label(ct)));
    for (const auto& e : found) {
      CHECK(constructed.count(e.key) == 1);
      CHECK(validate_structure(e.structure).empty());
      for (int v = 0; v < ct.tree.vertex_count; ++v)
        CHECK(betti(e.structure.pieces[v].reeb) == closure_surface(ct, v).genus);
    }
    CHECK(std::is_sorted(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.key < b.key; }));
  }
}

TEST_CASE("every generated four-point curve has the order p0 p2 p1 p3") {
  EnumerationStats stats;
  auto found = enumerate_structures(by_label("S"), 4, {}, &stats);
  CHECK(stats.cycle_candidates == 6);
  CHECK(stats.cycle_accepted == 1);
  CHECK(stats.accepted_cycles == std::vector<std::vector<int>>{{0, 2, 1, 3}});
  CHECK(stats.piece_candidates > 0);
  CHECK(stats.structures_generated >= static_cast<long>(found.size()));
  for (const auto& e : found)
    if (points_on_curves(e.structure) == 4) CHECK(curve_cycle(e.structure, 0) == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("enumeration does not depend on the thread count") {
  for (const auto* label : {"S", "T2-B", "T3-B"}) {
    auto serial = enumerate_structures(by_label(label), 4, EnumerationOptions{1});
    auto parallel = enumerate_structures(by_label(label), 4, EnumerationOptions{4});
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].key == parallel[i].key);
      CHECK(serial[i].case_label == parallel[i].case_label);
      CHECK(serial[i].structure == parallel[i].structure);
    }
  }
}

TEST_CASE("cross validation passes and reports differences") {
  auto report = cross_validate(4);
  CHECK(report.ok());
  CHECK(report.single_curve_constructed == 13);
  CHECK(report.single_curve_enumerated == 13);
  CHECK(report.two_curve_constructed == 11);
  CHECK(report.two_curve_enumerated == 11);
  CHECK(report.strata.size() == 7);
  CHECK(report.notes.size() == 1);
  CHECK(report.text() == cross_validate(4, EnumerationOptions{3}).text());
  CHECK_THROWS_AS(cross_validate(5), RangeError);

  auto constructed = build_two_curve_catalog();
  std::vector<CatalogEntry> enumerated;
  for (const auto* label : {"T2-B", "T3-B"})
    for (auto& e : enumerate_structures(by_label(label), 4)) enumerated.push_back(e);
  std::string dropped = constructed.back().key;
  constructed.pop_back();
  auto broken = compare_catalogs(constructed, enumerated, 4);
  CHECK_FALSE(broken.ok());
  bool named = false;
  for (const auto& s : broken.strata)
    named |= std::find(s.only_enumerated.begin(), s.only_enumerated.end(), dropped) != s.only_enumerated.end();
  CHECK(named);
  CHECK(broken.text().find(dropped) != std::string::npos);
}

TEST_CASE("structure keys agree with explicit equivalence on random relabelings") {
  std::mt19937 rng(77);
  auto entries = build_single_curve_catalog();
  for (auto& e : build_two_curve_catalog()) entries.push_back(e);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& e = entries[rng() % entries.size()];
    auto moved = randomly_relabeled(e.structure, rng);
    REQUIRE(validate_structure(moved).empty());
    REQUIRE(structure_canonical(moved) == e.key);
    if (trial % 10 == 0) REQUIRE(structure_equivalent(moved, e.structure));
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j)
      CHECK(structure_equivalent(entries[i].structure, entries[j].structure) == (i == j));
}

TEST_CASE("the leaf disks of the single-curve case are interchangeable") {
  auto cat = build_single_curve_catalog();
  for (const auto& e : cat) {
    auto swapped = e.structure;
    std::swap(swapped.pieces[1], swapped.pieces[2]);
    attach_gluings(swapped);
    // Leaves 1 and 2 are swapped by a tree automorphism that fixes the curve.
    CHECK(validate_structure(swapped).empty());
    CHECK(structure_canonical(swapped) == e.key);
  }
}

TEST_CASE("validation catches broken structures") {
  auto e = build_single_curve_catalog().front();
  auto has_errors = [](const MorseStructure& s) { return !validate_structure(s).empty(); };

  auto moved_point = e.structure;
  for (auto& p : moved_point.points)
    if (p.curve >= 0) {
      p = PointLocation{-1, 1};
      break;
    }
  CHECK(has_errors(moved_point));

  auto stale = e.structure;
  stale.gluings.pop_back();
  CHECK(has_errors(stale));

  auto missing_piece = e.structure;
  missing_piece.pieces.pop_back();
  CHECK(has_errors(missing_piece));

  auto retagged = e.structure;
  retagged.pieces[1].decoration.circles[0].tag = 3;
  attach_gluings(retagged);
  CHECK(has_errors(retagged));

  auto kind = e.structure;
  for (auto& c : kind.pieces[1].decoration.circles) c.kind = CircleKind::glued;
  CHECK(has_errors(kind));

  CHECK_THROWS_AS(structure_canonical(stale), ValidationError);
  CHECK_THROWS_AS(curve_cycle(e.structure, 4), LookupError);
}

TEST_CASE("budgets above four are accepted") {
  auto found = enumerate_structures(by_label("S"), 5);
  CHECK_FALSE(found.empty());
  for (const auto& e : found) CHECK(validate_structure(e.structure).empty());
  CHECK(enumerate_structures(by_label("T1"), 4).empty());
  CHECK_THROWS_AS(enumerate_structures(by_label("S"), -1), RangeError);
}
