#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "morsecat/errors.hpp"
#include "morsecat/reeb.hpp"

using namespace morsecat;

namespace {

ReebGraph torus() { return make_reeb({0, 1, 2, 3}, {{0, 1}, {1, 2}, {1, 2}, {2, 3}}); }

// Same graph with vertex ids and edge order shuffled; ranks travel with the
// vertices.
ReebGraph shuffled(const ReebGraph& r, std::mt19937& rng) {
  std::vector<int> p(r.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  ReebGraph out;
  out.rank.resize(r.rank.size());
  out.segment_end.resize(r.rank.size());
  for (int v = 0; v < r.vertex_count(); ++v) {
    out.rank[p[v]] = r.rank[v];
    out.segment_end[p[v]] = r.segment_end[v];
  }
  for (const auto& e : r.edges) out.edges.push_back({p[e.source], p[e.target]});
  std::shuffle(out.edges.begin(), out.edges.end(), rng);
  return out;
}

}  // namespace

TEST_CASE("torus graph") {
  auto r = torus();
  CHECK(validate_reeb(r).empty());
  CHECK(betti(r) == 1);
  CHECK(r.critical_count() == 4);
  CHECK(r.is_saddle(1));
  CHECK(r.is_saddle(2));
  CHECK(reeb_canonical(r) == "reeb:4:0>1,1>2,1>2,2>3");
}

TEST_CASE("optimal Reeb graph counts") {
  CHECK(enumerate_optimal_reeb(0).size() == 1);
  CHECK(enumerate_optimal_reeb(1).size() == 1);
  CHECK(enumerate_optimal_reeb(2).size() == 3);
  CHECK(enumerate_optimal_reeb(3).size() == 31);
  CHECK(reeb_canonical(enumerate_optimal_reeb(1).front()) == reeb_canonical(torus()));
  CHECK_THROWS_AS(enumerate_optimal_reeb(4), RangeError);
  CHECK_THROWS_AS(enumerate_optimal_reeb(-1), RangeError);
}

TEST_CASE("generated graphs respect the value order and the genus") {
  for (int g = 0; g <= 3; ++g) {
    std::set<std::string> keys;
    for (const auto& r : enumerate_optimal_reeb(g)) {
      CHECK(validate_reeb(r).empty());
      CHECK(betti(r) == g);
      CHECK(r.vertex_count() == 2 + 2 * g);
      for (const auto& e : r.edges) CHECK(r.rank[e.source] < r.rank[e.target]);
      int extrema = 0;
      for (int v = 0; v < r.vertex_count(); ++v) extrema += r.degree(v) == 1;
      CHECK(extrema == 2);
      keys.insert(reeb_canonical(r));
    }
    CHECK(keys.size() == enumerate_optimal_reeb(g).size());
  }
}

TEST_CASE("canonical key ignores vertex ids and edge order") {
  std::mt19937 rng(4);
  std::vector<ReebGraph> pool;
  for (int g = 0; g <= 3; ++g)
    for (const auto& r : enumerate_optimal_reeb(g)) pool.push_back(r);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& r = pool[rng() % pool.size()];
    auto s = shuffled(r, rng);
    REQUIRE(reeb_canonical(s) == reeb_canonical(r));
    REQUIRE(reeb_key_with_ranks(s) == reeb_key_with_ranks(r));
  }
}

TEST_CASE("key with ranks distinguishes actual values") {
  auto a = make_reeb({0, 2}, {{0, 1}});
  auto b = make_reeb({1, 3}, {{0, 1}});
  CHECK(reeb_canonical(a) == reeb_canonical(b));
  CHECK(reeb_key_with_ranks(a) != reeb_key_with_ranks(b));
}

TEST_CASE("validation catches broken graphs") {
  auto has = [](const std::vector<std::string>& v, const std::string& what) {
    return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.find(what) != std::string::npos; });
  };
  CHECK(has(validate_reeb(make_reeb({0, 1}, {{1, 0}})), "edge against value order"));
  CHECK(has(validate_reeb(make_reeb({0, 1, 2, 3}, {{0, 1}, {2, 3}})), "disconnected"));
  CHECK(has(validate_reeb(make_reeb({0, 1, 2}, {{0, 1}, {1, 2}})), "invalid vertex degree"));
  CHECK(has(validate_reeb(make_reeb({0, 0}, {{0, 1}})), "duplicate critical value rank"));
  CHECK(has(validate_reeb(make_reeb({0, 1}, {{0, 5}})), "out of range"));
  CHECK_THROWS_AS(reeb_canonical(make_reeb({0, 1}, {{1, 0}})), ValidationError);
  CHECK_THROWS_AS(betti(make_reeb({0, 1, 2, 3}, {{0, 1}, {2, 3}})), ValidationError);
}

TEST_CASE("segment ends may be regular points") {
  auto r = make_reeb({0, 1, 2}, {{0, 1}, {1, 2}});
  r.segment_end = {true, true, false};
  CHECK(validate_reeb(r).empty());
  CHECK(r.critical_count() == 2);
  auto plain = r;
  plain.segment_end = {false, false, false};
  CHECK_FALSE(validate_reeb(plain).empty());
  CHECK(reeb_canonical(r) != reeb_canonical(make_reeb({0, 1}, {{0, 1}})));
}

TEST_CASE("enumeration with segment ends") {
  // Annulus with two boundary segments: only the chain has two extrema.
  auto graphs = enumerate_reeb_graphs({0, 1, 2, 3}, {true, true, true, true}, 0);
  int chains = 0;
  for (const auto& r : graphs) {
    CHECK(validate_reeb(r).empty());
    CHECK(betti(r) == 0);
    chains += r.critical_count() == 2;
  }
  CHECK(chains == 1);
  CHECK(enumerate_reeb_graphs({5}, {false}, 0).empty());
}
