#include <algorithm>
#include <map>

#include "morsecat/catalog.hpp"
#include "morsecat/errors.hpp"

namespace morsecat {
namespace {

class PieceBuilder {
 public:
  int vertex(int rank, bool segment = false) {
    dg_.reeb.rank.push_back(rank);
    dg_.reeb.segment_end.push_back(segment);
    return dg_.reeb.vertex_count() - 1;
  }

  int edge(int source, int target) {
    dg_.reeb.edges.push_back({source, target});
    return dg_.reeb.edge_count() - 1;
  }

  int path(std::vector<int> edges) {
    MonotonePath p;
    p.start = dg_.reeb.edges[edges.front()].source;
    p.end = dg_.reeb.edges[edges.back()].target;
    p.edges = std::move(edges);
    dg_.decoration.paths.push_back(std::move(p));
    return static_cast<int>(dg_.decoration.paths.size()) - 1;
  }

  void circle(CircleKind kind, int tag, std::vector<int> paths) {
    dg_.decoration.circles.push_back({kind, tag, std::move(paths)});
  }

  // Paths meeting a saddle only through its single-side edge are spread over
  // the two slots alternately, in path order.
  DistinguishingGraph finish() {
    const auto& r = dg_.reeb;
    std::map<std::array<int, 2>, int> choice;
    for (int v = 0; v < r.vertex_count(); ++v) {
      if (r.degree(v) != 3) continue;
      auto sides = double_side_edges(r, v);
      int k = 0;
      for (int p = 0; p < static_cast<int>(dg_.decoration.paths.size()); ++p) {
        const auto& mp = dg_.decoration.paths[p];
        if (path_touches(r, mp, v) && !forced_slot_edge(r, mp, v)) choice[{p, v}] = sides[k++ % 2];
      }
    }
    dg_.partitions = derive_partition(r, dg_.decoration, choice);
    auto bad = validate_distinguishing(dg_);
    if (!bad.empty()) throw StructuralError("constructed piece is invalid: " + bad.front());
    return dg_;
  }

 private:
  DistinguishingGraph dg_;
};

DistinguishingGraph segment_disk(int tag, int lo, int hi) {
  PieceBuilder b;
  int u = b.vertex(lo, true), w = b.vertex(hi, true);
  b.circle(CircleKind::boundary, tag, {b.path({b.edge(u, w)})});
  return b.finish();
}

struct Segment {
  int tag, lo, hi;
};

// Annulus whose two boundary circles each carry two points: a chain through
// the sorted ranks.
DistinguishingGraph segment_cylinder(Segment a, Segment c) {
  std::vector<int> ranks{a.lo, a.hi, c.lo, c.hi};
  std::sort(ranks.begin(), ranks.end());
  PieceBuilder b;
  std::vector<int> ids, chain;
  for (int r : ranks) ids.push_back(b.vertex(r, true));
  for (int i = 0; i + 1 < 4; ++i) chain.push_back(b.edge(ids[i], ids[i + 1]));
  auto pos = [&](int r) { return static_cast<int>(std::find(ranks.begin(), ranks.end(), r) - ranks.begin()); };
  for (const auto& s : {a, c}) {
    std::vector<int> edges(chain.begin() + pos(s.lo), chain.begin() + pos(s.hi));
    b.circle(CircleKind::boundary, s.tag, {b.path(edges)});
  }
  return b.finish();
}

// Disk bounded by a circle through ranks 0..3 in the order 0,2,1,3. The
// saddle is either a split at rank 1 or a merge at rank 2.
DistinguishingGraph four_point_disk(int tag, bool split) {
  PieceBuilder b;
  int v0 = b.vertex(0), v1 = b.vertex(1), v2 = b.vertex(2), v3 = b.vertex(3);
  std::vector<int> arcs;
  if (split) {
    int f0 = b.edge(v0, v1), f1 = b.edge(v1, v2), f2 = b.edge(v1, v3);
    arcs = {b.path({f0, f1}), b.path({f1}), b.path({f2}), b.path({f0, f2})};
  } else {
    int g0 = b.edge(v0, v2), g1 = b.edge(v1, v2), g2 = b.edge(v2, v3);
    arcs = {b.path({g0}), b.path({g1}), b.path({g1, g2}), b.path({g0, g2})};
  }
  b.circle(CircleKind::boundary, tag, arcs);
  return b.finish();
}

// Torus Reeb graph on ranks 0..3: a bottom edge, two parallel middle edges
// ea and eb, a top edge.
struct Torus {
  PieceBuilder b;
  int v[4];
  int e0, ea, eb, e3;

  explicit Torus(std::array<bool, 4> segment = {}) {
    for (int r = 0; r < 4; ++r) v[r] = b.vertex(r, segment[r]);
    e0 = b.edge(v[0], v[1]);
    ea = b.edge(v[1], v[2]);
    eb = b.edge(v[1], v[2]);
    e3 = b.edge(v[2], v[3]);
  }

  // Edge lists of the two sides of a glued pair between ranks lo < hi, or of
  // a single segment when `twin` is false.
  std::vector<std::vector<int>> routes(int lo, int hi, bool twin, bool one_tube) {
    auto via = [&](int middle) {
      std::vector<int> es;
      if (lo == 0) es.push_back(e0);
      if (lo <= 1 && hi >= 2) es.push_back(middle);
      if (hi == 3) es.push_back(e3);
      return es;
    };
    bool crosses = lo <= 1 && hi >= 2;
    if (!twin) return {via(ea)};
    if (!crosses || one_tube) return {via(ea), via(ea)};
    return {via(ea), via(eb)};
  }
};

MorseStructure assemble(ColoredTree ct, std::vector<PointLocation> points, std::vector<DistinguishingGraph> pieces) {
  MorseStructure s;
  s.stratification = std::move(ct);
  s.points = std::move(points);
  s.pieces = std::move(pieces);
  attach_gluings(s);
  auto bad = validate_structure(s);
  if (!bad.empty()) throw StructuralError("constructed structure is invalid: " + bad.front());
  return to_canonical_labeling(s);
}

ColoredTree colored(int n, std::vector<std::array<int, 2>> edges, std::vector<std::array<int, 2>> blocks) {
  ColoredTree ct{make_tree(n, std::move(edges)), std::move(blocks)};
  validate_colored_tree(ct);
  return ct;
}

std::string pair_name(int lo, int hi) { return "pair-(p" + std::to_string(lo) + ",p" + std::to_string(hi) + ")"; }

void add(std::vector<CatalogEntry>& out, MorseStructure s, std::string label) {
  std::string key = structure_canonical(s);
  out.push_back({std::move(s), std::move(key), std::move(label)});
}

}  // namespace

std::vector<CatalogEntry> build_single_curve_catalog() {
  // Center 0 is a torus once the curve is glued; leaves 1 and 2 are disks.
  const ColoredTree ct = colored(3, {{0, 1}, {0, 2}}, {{0, 1}});
  std::vector<CatalogEntry> out;

  for (int lo = 0; lo < 4; ++lo)
    for (int hi = lo + 1; hi < 4; ++hi) {
      bool crosses = lo <= 1 && hi >= 2;
      bool both_ends = lo == 0 && hi == 3;
      for (bool one_tube : both_ends ? std::vector<bool>{false, true} : std::vector<bool>{false}) {
        Torus t;
        std::vector<int> sides;
        for (auto& es : t.routes(lo, hi, true, one_tube || !crosses)) sides.push_back(t.b.path(es));
        t.b.circle(CircleKind::glued, 0, sides);
        std::vector<PointLocation> points(4, PointLocation{-1, 0});
        points[lo] = points[hi] = PointLocation{0, -1};
        auto s = assemble(ct, points, {t.b.finish(), segment_disk(0, lo, hi), segment_disk(0, lo, hi)});
        std::string label = "S/" + pair_name(lo, hi);
        if (both_ends) label += one_tube ? "/one-tube" : "/two-tubes";
        add(out, std::move(s), label);
      }
    }

  // All four points on the curve: arc 0-3 runs beside arc 1-2 or beside
  // arc 0-2, and each leaf disk has its saddle at rank 1 or rank 2.
  for (bool beside_12 : {true, false})
    for (auto [split1, split2] : {std::pair{true, true}, std::pair{true, false}, std::pair{false, false}}) {
      Torus t;
      int a02 = t.b.path({t.e0, t.eb});
      int a12 = t.b.path({t.ea});
      int a13 = t.b.path({t.eb, t.e3});
      int a03 = t.b.path({t.e0, beside_12 ? t.ea : t.eb, t.e3});
      t.b.circle(CircleKind::glued, 0, {a02, a12, a13, a03});
      std::vector<PointLocation> points(4, PointLocation{0, -1});
      auto s = assemble(ct, points, {t.b.finish(), four_point_disk(0, split1), four_point_disk(0, split2)});
      std::string disks = std::string(split1 ? "Y" : "inverted-Y") + "-" + (split2 ? "Y" : "inverted-Y");
      add(out, std::move(s),
          std::string("S/four-point/arc03-with-") + (beside_12 ? "arc12" : "arc02") + "/disks-" + disks);
    }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.key < b.key; });
  return out;
}

std::vector<CatalogEntry> build_two_curve_catalog() {
  std::vector<CatalogEntry> out;

  // Degree-3 vertex 0 carries blue twice (a punctured torus), vertex 3 is an
  // annulus between blue and red, the rest are disks.
  {
    const ColoredTree ct = colored(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}, {{0, 2}, {1, 3}});
    for (int lo = 0; lo < 4; ++lo)
      for (int hi = lo + 1; hi < 4; ++hi) {
        std::vector<int> red;
        for (int r = 0; r < 4; ++r)
          if (r != lo && r != hi) red.push_back(r);
        bool both_ends = lo == 0 && hi == 3;
        for (int variant = 0; variant < (both_ends ? 3 : 1); ++variant) {
          // variant 0: blue through both tubes; 1 and 2: blue through one tube
          // with red beside it or in the other tube.
          std::array<bool, 4> seg{};
          seg[red[0]] = seg[red[1]] = true;
          Torus t(seg);
          bool one_tube = variant > 0;
          bool crosses = lo <= 1 && hi >= 2;
          std::vector<int> sides;
          for (auto& es : t.routes(lo, hi, true, one_tube || !crosses)) sides.push_back(t.b.path(es));
          t.b.circle(CircleKind::glued, 0, sides);
          auto red_route = t.routes(red[0], red[1], false, false).front();
          if (variant == 2) std::replace(red_route.begin(), red_route.end(), t.ea, t.eb);
          t.b.circle(CircleKind::boundary, 1, {t.b.path(red_route)});

          std::vector<PointLocation> points(4, PointLocation{1, -1});
          points[lo] = points[hi] = PointLocation{0, -1};
          auto s = assemble(ct, points,
                            {t.b.finish(), segment_disk(0, lo, hi), segment_disk(1, red[0], red[1]),
                             segment_cylinder({0, lo, hi}, {1, red[0], red[1]}), segment_disk(1, red[0], red[1])});
          std::string label = "T2-B/" + pair_name(lo, hi);
          if (variant == 1) label += "/one-tube/red-same-edge";
          if (variant == 2) label += "/one-tube/red-other-edge";
          if (both_ends && variant == 0) label += "/two-tubes";
          add(out, std::move(s), label);
        }
      }
  }

  // Chain 0-1-2-3-4 with curves X = {01, 23} and Y = {12, 34}; every piece
  // is a disk or an annulus, so only the order of the four values matters.
  {
    const ColoredTree ct = colored(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{0, 2}, {1, 3}});
    const std::pair<std::array<int, 2>, const char*> cases[] = {
        {{0, 2}, "alternate"}, {{0, 1}, "stacked"}, {{0, 3}, "nested"}};
    for (const auto& [x, name] : cases) {
      std::vector<int> y;
      for (int r = 0; r < 4; ++r)
        if (r != x[0] && r != x[1]) y.push_back(r);
      Segment sx{0, x[0], x[1]}, sy{1, y[0], y[1]};
      std::vector<PointLocation> points(4, PointLocation{1, -1});
      points[x[0]] = points[x[1]] = PointLocation{0, -1};
      auto s = assemble(ct, points,
                        {segment_disk(0, x[0], x[1]), segment_cylinder(sx, sy), segment_cylinder(sx, sy),
                         segment_cylinder(sx, sy), segment_disk(1, y[0], y[1])});
      add(out, std::move(s), std::string("T3-B/") + name);
    }
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.key < b.key; });
  return out;
}

}  // namespace morsecat
