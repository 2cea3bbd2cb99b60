#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "morsecat/catalog.hpp"
#include "morsecat/errors.hpp"

namespace morsecat {
namespace {

std::vector<std::vector<int>> ranks_by_block(const MorseStructure& s) {
  std::vector<std::vector<int>> out(s.stratification.blocks.size());
  for (int r = 0; r < s.budget(); ++r)
    if (s.points[r].curve >= 0 && s.points[r].curve < static_cast<int>(out.size())) out[s.points[r].curve].push_back(r);
  return out;
}

std::set<int> circle_ranks(const DistinguishingGraph& dg, const Circle& c) {
  std::set<int> out;
  for (int p : c.paths) {
    out.insert(dg.reeb.rank[dg.decoration.paths[p].start]);
    out.insert(dg.reeb.rank[dg.decoration.paths[p].end]);
  }
  return out;
}

std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

DistinguishingGraph retag(DistinguishingGraph dg, const std::vector<int>& block_map) {
  for (auto& c : dg.decoration.circles)
    if (c.tag >= 0) c.tag = block_map[c.tag];
  return dg;
}

}  // namespace

void attach_gluings(MorseStructure& s) {
  s.gluings.clear();
  for (int b = 0; b < static_cast<int>(s.stratification.blocks.size()); ++b) {
    Gluing g;
    g.block = b;
    for (int v = 0; v < static_cast<int>(s.pieces.size()); ++v) {
      const auto& circles = s.pieces[v].decoration.circles;
      for (int c = 0; c < static_cast<int>(circles.size()); ++c)
        if (circles[c].tag == b) g.sides.push_back({v, c});
    }
    s.gluings.push_back(std::move(g));
  }
}

std::vector<std::string> validate_structure(const MorseStructure& s) {
  std::vector<std::string> out;
  const ColoredTree& ct = s.stratification;
  try {
    validate_colored_tree(ct);
  } catch (const std::exception& e) {
    out.push_back(std::string("stratification: ") + e.what());
    return out;
  }
  const int n = ct.tree.vertex_count;
  const int blocks = static_cast<int>(ct.blocks.size());
  if (static_cast<int>(s.pieces.size()) != n) {
    out.emplace_back("one piece per tree vertex required");
    return out;
  }
  for (int r = 0; r < s.budget(); ++r) {
    const auto& p = s.points[r];
    bool on_curve = p.curve >= 0 && p.curve < blocks && p.vertex < 0;
    bool inside = p.vertex >= 0 && p.vertex < n && p.curve < 0;
    if (!on_curve && !inside) out.push_back("point " + std::to_string(r) + ": invalid location");
  }
  if (!out.empty()) return out;

  auto curve_ranks = ranks_by_block(s);
  for (int b = 0; b < blocks; ++b)
    if (curve_ranks[b].size() < 2 || curve_ranks[b].size() % 2 != 0)
      out.push_back("curve " + std::to_string(b) + ": needs an even number >= 2 of points");

  std::map<int, std::vector<int>> cycles;
  for (int v = 0; v < n; ++v) {
    std::string tag = "piece " + std::to_string(v) + ": ";
    const auto& dg = s.pieces[v];
    auto dgv = validate_distinguishing(dg);
    for (const auto& msg : dgv) out.push_back(tag + msg);
    if (!dgv.empty()) continue;

    std::set<int> expected, segment_ranks;
    for (int r = 0; r < s.budget(); ++r)
      if (s.points[r].vertex == v) expected.insert(r);
    for (int b = 0; b < blocks; ++b) {
      int inc = ct.incidence(b, v);
      if (inc == 0) continue;
      expected.insert(curve_ranks[b].begin(), curve_ranks[b].end());
      if (inc == 1 && curve_ranks[b].size() == 2) segment_ranks.insert(curve_ranks[b].begin(), curve_ranks[b].end());
    }
    std::set<int> actual(dg.reeb.rank.begin(), dg.reeb.rank.end());
    if (actual != expected) out.push_back(tag + "vertices do not match the points of the piece");

    for (int u = 0; u < dg.reeb.vertex_count(); ++u)
      if (dg.reeb.segment_end[u] != static_cast<bool>(segment_ranks.count(dg.reeb.rank[u])))
        out.push_back(tag + "segment flags do not match the boundary circles");

    for (const auto& c : dg.decoration.circles)
      if (c.tag < 0 || c.tag >= blocks || ct.incidence(c.tag, v) == 0)
        out.push_back(tag + "circle tagged with a curve that does not bound the piece");
    for (int b = 0; b < blocks; ++b) {
      int inc = ct.incidence(b, v);
      if (inc == 0) continue;
      std::vector<int> idx;
      for (int c = 0; c < static_cast<int>(dg.decoration.circles.size()); ++c)
        if (dg.decoration.circles[c].tag == b) idx.push_back(c);
      if (idx.size() != 1) {
        out.push_back(tag + "curve " + std::to_string(b) + " must appear as exactly one circle");
        continue;
      }
      const Circle& circ = dg.decoration.circles[idx[0]];
      CircleKind kind = inc == 2 ? CircleKind::glued : CircleKind::boundary;
      if (circ.kind != kind) out.push_back(tag + "curve " + std::to_string(b) + " has the wrong circle kind");
      std::size_t points = curve_ranks[b].size();
      std::size_t arcs = points == 2 ? (kind == CircleKind::glued ? 2 : 1) : points;
      if (circ.paths.size() != arcs) out.push_back(tag + "curve " + std::to_string(b) + " has the wrong arc count");
      auto cr = circle_ranks(dg, circ);
      if (cr != std::set<int>(curve_ranks[b].begin(), curve_ranks[b].end()))
        out.push_back(tag + "curve " + std::to_string(b) + " arcs do not end at its points");
      if (points >= 4 && circ.paths.size() == points) {
        try {
          auto cyc = stratum_cycle(dg, idx[0]);
          auto [it, fresh] = cycles.emplace(b, cyc);
          if (!fresh && it->second != cyc)
            out.push_back(tag + "curve " + std::to_string(b) + " has a different cyclic order than in another piece");
        } catch (const std::exception& e) {
          out.push_back(tag + e.what());
        }
      }
    }
    try {
      if (betti(dg.reeb) != closure_surface(ct, v).genus) out.push_back(tag + "Betti number differs from the closure genus");
    } catch (const std::exception& e) {
      out.push_back(tag + e.what());
    }
  }

  MorseStructure copy = s;
  attach_gluings(copy);
  if (copy.gluings != s.gluings) out.emplace_back("gluing table does not match the circle tags");
  return out;
}

namespace {

void require_valid(const MorseStructure& s) {
  auto v = validate_structure(s);
  if (!v.empty()) throw ValidationError("invalid Morse structure: " + v.front());
}

MorseStructure apply_tree_map(const MorseStructure& s, const ColoredTree& target, const std::vector<int>& vmap) {
  auto bmap = induced_block_map(s.stratification, target, vmap);
  MorseStructure out;
  out.stratification = target;
  out.pieces.resize(s.pieces.size());
  for (std::size_t v = 0; v < s.pieces.size(); ++v) out.pieces[vmap[v]] = retag(s.pieces[v], bmap);
  out.points = s.points;
  for (auto& p : out.points) {
    if (p.curve >= 0) p.curve = bmap[p.curve];
    if (p.vertex >= 0) p.vertex = vmap[p.vertex];
  }
  attach_gluings(out);
  return out;
}

}  // namespace

MorseStructure to_canonical_labeling(const MorseStructure& s) {
  auto cc = canonical_coloring(s.stratification);
  return apply_tree_map(s, cc.form, cc.maps.front());
}

std::string structure_canonical(const MorseStructure& s) {
  require_valid(s);
  auto cc = canonical_coloring(s.stratification);
  std::string best;
  bool have = false;
  for (const auto& vmap : cc.maps) {
    auto bmap = induced_block_map(s.stratification, cc.form, vmap);
    std::vector<int> inverse(vmap.size());
    for (std::size_t v = 0; v < vmap.size(); ++v) inverse[vmap[v]] = static_cast<int>(v);
    for (bool mirror : {false, true}) {
      DgKeyOptions opt;
      opt.actual_ranks = true;
      opt.allow_mirror = false;
      opt.mirror = mirror;
      opt.tag_map = bmap;
      std::string cand;
      for (std::size_t u = 0; u < inverse.size(); ++u) cand += (u ? "/" : "") + dg_key(s.pieces[inverse[u]], opt);
      if (!have || cand < best) best = std::move(cand), have = true;
    }
  }
  return "ms{" + colored_tree_canonical(s.stratification) + "#" + best + "}";
}

bool structure_equivalent(const MorseStructure& a, const MorseStructure& b) {
  require_valid(a);
  require_valid(b);
  const auto& ta = a.stratification.tree;
  const auto& tb = b.stratification.tree;
  if (ta.vertex_count != tb.vertex_count || ta.edges.size() != tb.edges.size() || a.budget() != b.budget()) return false;
  std::set<std::array<int, 2>> edges_b(tb.edges.begin(), tb.edges.end());
  std::set<std::set<std::array<int, 2>>> blocks_b;
  for (const auto& blk : b.stratification.blocks) blocks_b.insert({tb.edges[blk[0]], tb.edges[blk[1]]});

  std::vector<int> sigma(ta.vertex_count);
  std::iota(sigma.begin(), sigma.end(), 0);
  auto img = [&](std::array<int, 2> e) {
    int x = sigma[e[0]], y = sigma[e[1]];
    return x < y ? std::array{x, y} : std::array{y, x};
  };
  do {
    bool iso = true;
    for (const auto& e : ta.edges) iso &= edges_b.count(img(e)) > 0;
    for (const auto& blk : a.stratification.blocks) iso &= blocks_b.count({img(ta.edges[blk[0]]), img(ta.edges[blk[1]])}) > 0;
    if (!iso) continue;
    auto bmap = induced_block_map(a.stratification, b.stratification, sigma);
    bool points_ok = true;
    for (int r = 0; r < a.budget(); ++r) {
      PointLocation p = a.points[r];
      if (p.curve >= 0) p.curve = bmap[p.curve];
      if (p.vertex >= 0) p.vertex = sigma[p.vertex];
      points_ok &= p == b.points[r];
    }
    if (!points_ok) continue;
    for (bool mirror : {false, true}) {
      DgKeyOptions opt;
      opt.actual_ranks = true;
      opt.allow_mirror = false;
      opt.mirror = mirror;
      opt.tag_map = bmap;
      bool all = true;
      for (int v = 0; v < ta.vertex_count && all; ++v) all = dg_equivalent(a.pieces[v], b.pieces[sigma[v]], opt);
      if (all) return true;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

MorseStructure randomly_relabeled(const MorseStructure& s, std::mt19937& rng) {
  auto vmap = random_perm(s.stratification.tree.vertex_count, rng);
  ColoredTree target = relabel(s.stratification, vmap);
  MorseStructure out = apply_tree_map(s, target, vmap);
  for (auto& dg : out.pieces) {
    dg = relabel(dg, random_perm(dg.reeb.vertex_count(), rng), random_perm(dg.reeb.edge_count(), rng),
                 random_perm(static_cast<int>(dg.decoration.paths.size()), rng),
                 random_perm(static_cast<int>(dg.decoration.circles.size()), rng));
    for (auto& order : dg.partitions.saddles)
      if (rng() % 2) std::swap(order.slots[0], order.slots[1]);
    std::shuffle(dg.partitions.saddles.begin(), dg.partitions.saddles.end(), rng);
  }
  attach_gluings(out);
  return out;
}

std::vector<int> curve_cycle(const MorseStructure& s, int block) {
  if (block < 0 || block >= static_cast<int>(s.gluings.size()) || s.gluings[block].sides.empty())
    throw LookupError("unknown curve");
  auto [v, c] = s.gluings[block].sides.front();
  return stratum_cycle(s.pieces[v], c);
}

}  // namespace morsecat
