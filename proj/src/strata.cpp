#include "morsecat/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "morsecat/errors.hpp"
#include "morsecat/labeling.hpp"

namespace morsecat {
namespace {

using EdgeList = std::vector<std::array<int, 2>>;
using BlockList = std::vector<std::array<int, 2>>;

std::array<int, 2> ordered(int a, int b) { return a < b ? std::array{a, b} : std::array{b, a}; }

std::vector<std::vector<int>> adjacency(const Tree& t) {
  std::vector<std::vector<int>> adj(t.vertex_count);
  for (const auto& e : t.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  return adj;
}

// Degree plus the multiset of neighbour degrees; preserved by isomorphisms.
using VertexInvariant = std::pair<int, std::vector<int>>;

std::vector<VertexInvariant> vertex_invariants(const Tree& t) {
  auto adj = adjacency(t);
  std::vector<VertexInvariant> keys(t.vertex_count);
  for (int v = 0; v < t.vertex_count; ++v) {
    std::vector<int> nb;
    for (int w : adj[v]) nb.push_back(-static_cast<int>(adj[w].size()));
    std::sort(nb.begin(), nb.end());
    keys[v] = {-static_cast<int>(adj[v].size()), std::move(nb)};
  }
  return keys;
}

EdgeList mapped_edges(const Tree& t, const std::vector<int>& map) {
  EdgeList out;
  out.reserve(t.edges.size());
  for (const auto& e : t.edges) out.push_back(ordered(map[e[0]], map[e[1]]));
  std::sort(out.begin(), out.end());
  return out;
}

int edge_index(const EdgeList& edges, std::array<int, 2> e) {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) return -1;
  return static_cast<int>(it - edges.begin());
}

BlockList mapped_blocks(const ColoredTree& ct, const std::vector<int>& map,
                        const EdgeList& new_edges) {
  BlockList out;
  for (const auto& b : ct.blocks) {
    int x = edge_index(new_edges, ordered(map[ct.tree.edges[b[0]][0]], map[ct.tree.edges[b[0]][1]]));
    int y = edge_index(new_edges, ordered(map[ct.tree.edges[b[1]][0]], map[ct.tree.edges[b[1]][1]]));
    out.push_back(ordered(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string encode_tree(int n, const EdgeList& edges) {
  std::ostringstream os;
  os << "tree:" << n << ':';
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) os << ',';
    os << edges[i][0] << '-' << edges[i][1];
  }
  return os.str();
}

std::string encode_blocks(const BlockList& blocks) {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ';';
    os << blocks[i][0] << '.' << blocks[i][1];
  }
  return os.str();
}

Tree with_edges(int n, EdgeList edges) {
  Tree t;
  t.vertex_count = n;
  t.edges = std::move(edges);
  return t;
}

}  // namespace

int Tree::degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += (e[0] == v) + (e[1] == v);
  return d;
}

Tree make_tree(int vertex_count, std::vector<std::array<int, 2>> edges) {
  for (auto& e : edges) e = ordered(e[0], e[1]);
  std::sort(edges.begin(), edges.end());
  Tree t = with_edges(vertex_count, std::move(edges));
  validate_tree(t);
  return t;
}

void validate_tree(const Tree& t) {
  if (t.vertex_count < 1) throw ValidationError("tree needs at least one vertex");
  if (static_cast<int>(t.edges.size()) != t.vertex_count - 1)
    throw ValidationError("tree edge count must be vertex count - 1");
  std::set<std::array<int, 2>> seen;
  for (const auto& e : t.edges) {
    if (e[0] < 0 || e[1] < 0 || e[0] >= t.vertex_count || e[1] >= t.vertex_count)
      throw ValidationError("tree edge endpoint out of range");
    if (e[0] == e[1]) throw ValidationError("tree has a self-loop");
    if (e[0] > e[1]) throw ValidationError("tree edge endpoints must be stored in increasing order");
    if (!seen.insert(ordered(e[0], e[1])).second) throw ValidationError("tree has parallel edges");
  }
  auto adj = adjacency(t);
  std::vector<bool> reached(t.vertex_count, false);
  std::vector<int> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!reached[w]) reached[w] = true, stack.push_back(w);
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end())
    throw ValidationError("tree is disconnected");
}

int ColoredTree::block_of_edge(int edge) const {
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    if (blocks[b][0] == edge || blocks[b][1] == edge) return b;
  throw LookupError("edge not in any block");
}

int ColoredTree::incidence(int block, int v) const {
  if (block < 0 || block >= static_cast<int>(blocks.size())) throw LookupError("unknown block");
  int n = 0;
  for (int e : blocks[block]) n += (tree.edges[e][0] == v || tree.edges[e][1] == v);
  return n;
}

void validate_colored_tree(const ColoredTree& ct) {
  validate_tree(ct.tree);
  if (ct.tree.edges.size() % 2 != 0) throw ValidationError("pairing needs an even edge count");
  if (ct.blocks.size() * 2 != ct.tree.edges.size())
    throw ValidationError("pairing must cover every edge exactly once");
  std::vector<int> uses(ct.tree.edges.size(), 0);
  for (const auto& b : ct.blocks) {
    for (int e : b) {
      if (e < 0 || e >= static_cast<int>(uses.size())) throw ValidationError("block edge out of range");
      ++uses[e];
    }
    if (b[0] == b[1]) throw ValidationError("block repeats an edge");
  }
  for (int u : uses)
    if (u != 1) throw ValidationError("pairing must cover every edge exactly once");
}

int PointBudget::total() const {
  return std::accumulate(per_curve.begin(), per_curve.end(), 0) +
         std::accumulate(per_vertex_interior.begin(), per_vertex_interior.end(), 0);
}

// --- trees -------------------------------------------------------------------

namespace {

struct TreeCanon {
  EdgeList edges;
  std::vector<std::vector<int>> maps;
};

TreeCanon canonicalize_tree(const Tree& t) {
  validate_tree(t);
  TreeCanon best;
  bool have = false;
  detail::for_each_ordered_labeling(
      detail::cells_by_key(vertex_invariants(t)), t.vertex_count, [&](const std::vector<int>& map) {
        EdgeList enc = mapped_edges(t, map);
        if (!have || enc < best.edges) {
          best.edges = std::move(enc);
          best.maps.assign(1, map);
          have = true;
        } else if (enc == best.edges) {
          best.maps.push_back(map);
        }
        return true;
      });
  return best;
}

}  // namespace

std::string tree_canonical(const Tree& t) {
  return encode_tree(t.vertex_count, canonicalize_tree(t).edges);
}

Tree canonical_tree(const Tree& t) { return with_edges(t.vertex_count, canonicalize_tree(t).edges); }

std::vector<std::vector<int>> tree_automorphisms(const Tree& t) {
  validate_tree(t);
  auto cells = detail::cells_by_key(vertex_invariants(t));
  EdgeList base = mapped_edges(t, [&] {
    std::vector<int> id(t.vertex_count);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }());
  std::vector<std::vector<int>> out;
  detail::for_each_cell_bijection(cells, cells, t.vertex_count, [&](const std::vector<int>& map) {
    if (mapped_edges(t, map) == base) out.push_back(map);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tree> enumerate_trees(int n_edges) {
  if (n_edges < 1 || n_edges > 8) throw RangeError("enumerate_trees supports 1..8 edges");
  std::map<std::string, Tree> level{{tree_canonical(make_tree(2, {{0, 1}})), make_tree(2, {{0, 1}})}};
  for (int m = 1; m < n_edges; ++m) {
    std::map<std::string, Tree> next;
    for (const auto& [key, t] : level) {
      for (int v = 0; v < t.vertex_count; ++v) {
        EdgeList edges = t.edges;
        edges.push_back({v, t.vertex_count});
        Tree grown = make_tree(t.vertex_count + 1, std::move(edges));
        auto canon = canonicalize_tree(grown);
        next.emplace(encode_tree(grown.vertex_count, canon.edges),
                     with_edges(grown.vertex_count, canon.edges));
      }
    }
    level = std::move(next);
  }
  std::vector<Tree> out;
  for (auto& [key, t] : level) out.push_back(std::move(t));
  return out;
}

// --- pairings ------------------------------------------------------------------

namespace {

void perfect_matchings(std::vector<int>& free_edges, BlockList& current,
                       std::vector<BlockList>& out) {
  if (free_edges.empty()) {
    BlockList sorted = current;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  int first = free_edges.front();
  for (std::size_t k = 1; k < free_edges.size(); ++k) {
    int partner = free_edges[k];
    std::vector<int> rest;
    for (std::size_t j = 1; j < free_edges.size(); ++j)
      if (j != k) rest.push_back(free_edges[j]);
    current.push_back({first, partner});
    perfect_matchings(rest, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<ColoredTree> enumerate_pairings(const Tree& t) {
  validate_tree(t);
  if (t.edges.size() % 2 != 0) throw StructuralError("pairings need an even number of edges");
  EdgeList sorted_edges = t.edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());

  // Edge permutations induced by the tree automorphisms.
  std::vector<std::vector<int>> edge_perms;
  for (const auto& map : tree_automorphisms(t)) {
    std::vector<int> perm(t.edges.size());
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      auto img = ordered(map[t.edges[e][0]], map[t.edges[e][1]]);
      perm[e] = static_cast<int>(std::find(t.edges.begin(), t.edges.end(), img) - t.edges.begin());
    }
    edge_perms.push_back(std::move(perm));
  }

  std::vector<int> all(t.edges.size());
  std::iota(all.begin(), all.end(), 0);
  BlockList scratch;
  std::vector<BlockList> matchings;
  perfect_matchings(all, scratch, matchings);

  std::set<BlockList> reps;
  for (const auto& m : matchings) {
    BlockList best = m;
    for (const auto& perm : edge_perms) {
      BlockList img;
      for (const auto& b : m) img.push_back(ordered(perm[b[0]], perm[b[1]]));
      std::sort(img.begin(), img.end());
      best = std::min(best, img);
    }
    reps.insert(best);
  }
  std::vector<ColoredTree> out;
  for (const auto& r : reps) out.push_back(ColoredTree{t, r});
  return out;
}

CanonicalColoring canonical_coloring(const ColoredTree& ct) {
  validate_colored_tree(ct);
  std::pair<EdgeList, BlockList> best;
  CanonicalColoring result;
  bool have = false;
  detail::for_each_ordered_labeling(
      detail::cells_by_key(vertex_invariants(ct.tree)), ct.tree.vertex_count,
      [&](const std::vector<int>& map) {
        EdgeList edges = mapped_edges(ct.tree, map);
        BlockList blocks = mapped_blocks(ct, map, edges);
        auto enc = std::make_pair(std::move(edges), std::move(blocks));
        if (!have || enc < best) {
          best = std::move(enc);
          result.maps.assign(1, map);
          have = true;
        } else if (enc == best) {
          result.maps.push_back(map);
        }
        return true;
      });
  result.form = ColoredTree{with_edges(ct.tree.vertex_count, best.first), best.second};
  return result;
}

std::string colored_tree_canonical(const ColoredTree& ct) {
  auto c = canonical_coloring(ct);
  return encode_tree(c.form.tree.vertex_count, c.form.tree.edges) + '|' + encode_blocks(c.form.blocks);
}

ColoredTree relabel(const ColoredTree& ct, const std::vector<int>& vertex_map) {
  EdgeList edges = mapped_edges(ct.tree, vertex_map);
  BlockList blocks = mapped_blocks(ct, vertex_map, edges);
  return ColoredTree{with_edges(ct.tree.vertex_count, std::move(edges)), std::move(blocks)};
}

std::vector<int> induced_block_map(const ColoredTree& from, const ColoredTree& to,
                                   const std::vector<int>& vertex_map) {
  std::vector<int> out(from.blocks.size(), -1);
  for (std::size_t b = 0; b < from.blocks.size(); ++b) {
    const auto& e = from.tree.edges[from.blocks[b][0]];
    auto img = ordered(vertex_map[e[0]], vertex_map[e[1]]);
    int idx = static_cast<int>(std::find(to.tree.edges.begin(), to.tree.edges.end(), img) -
                               to.tree.edges.begin());
    if (idx >= static_cast<int>(to.tree.edges.size())) throw LookupError("vertex map is not an isomorphism");
    out[b] = to.block_of_edge(idx);
  }
  return out;
}

std::string stratification_label(const ColoredTree& ct) {
  const Tree& t = ct.tree;
  auto same_block = [&](int e1, int e2) { return ct.block_of_edge(e1) == ct.block_of_edge(e2); };
  if (t.edges.size() == 2) return "S";
  if (t.edges.size() == 4) {
    int maxdeg = 0;
    for (int v = 0; v < t.vertex_count; ++v) maxdeg = std::max(maxdeg, t.degree(v));
    if (maxdeg == 4) return "T1";
    if (maxdeg == 3) {
      for (int v = 0; v < t.vertex_count; ++v) {
        if (t.degree(v) != 2) continue;
        std::vector<int> inc;
        for (int e = 0; e < 4; ++e)
          if (t.edges[e][0] == v || t.edges[e][1] == v) inc.push_back(e);
        return same_block(inc[0], inc[1]) ? "T2-A" : "T2-B";
      }
    }
    // Chain: walk from a leaf to list edges in order.
    auto adj = adjacency(t);
    int v = 0;
    while (adj[v].size() != 1) ++v;
    std::vector<int> chain;
    int prev = -1;
    for (int step = 0; step < 4; ++step) {
      int w = adj[v][0] == prev ? adj[v][1] : adj[v][0];
      chain.push_back(static_cast<int>(
          std::find(t.edges.begin(), t.edges.end(), ordered(v, w)) - t.edges.begin()));
      prev = v;
      v = w;
    }
    if (same_block(chain[0], chain[1])) return "T3-A";
    if (same_block(chain[0], chain[2])) return "T3-B";
    return "T3-C";
  }
  return colored_tree_canonical(ct);
}

// --- surfaces and bounds ---------------------------------------------------------

SurfacePiece closure_surface(const ColoredTree& ct, int v) {
  if (v < 0 || v >= ct.tree.vertex_count) throw LookupError("unknown tree vertex");
  int genus = 0;
  for (int b = 0; b < static_cast<int>(ct.blocks.size()); ++b) genus += ct.incidence(b, v) == 2;
  return SurfacePiece{v, genus, ct.tree.degree(v) - 2 * genus};
}

bool satisfies_constraints(const ColoredTree& ct, const PointBudget& b) {
  if (b.per_curve.size() != ct.blocks.size() ||
      static_cast<int>(b.per_vertex_interior.size()) != ct.tree.vertex_count)
    return false;
  for (int c : b.per_curve)
    if (c < 2 || c % 2 != 0) return false;
  for (int v = 0; v < ct.tree.vertex_count; ++v) {
    if (b.per_vertex_interior[v] < 0) return false;
    auto piece = closure_surface(ct, v);
    if (piece.boundaries != 0) continue;
    int seen = b.per_vertex_interior[v];
    for (int c = 0; c < static_cast<int>(ct.blocks.size()); ++c)
      if (ct.incidence(c, v) == 2) seen += b.per_curve[c];
    if (seen < 2 + 2 * piece.genus) return false;
  }
  return true;
}

int min_critical_points(const ColoredTree& ct) {
  validate_colored_tree(ct);
  struct Closed {
    int demand;
    std::vector<int> curves;
  };
  std::vector<Closed> closed;
  int cap = 2;
  for (int v = 0; v < ct.tree.vertex_count; ++v) {
    auto piece = closure_surface(ct, v);
    if (piece.boundaries != 0) continue;
    Closed c{2 + 2 * piece.genus, {}};
    for (int b = 0; b < static_cast<int>(ct.blocks.size()); ++b)
      if (ct.incidence(b, v) == 2) c.curves.push_back(b);
    cap = std::max(cap, c.demand + c.demand % 2);
    closed.push_back(std::move(c));
  }

  std::vector<int> curve(ct.blocks.size(), 2);
  int best = -1;
  auto evaluate = [&] {
    int total = std::accumulate(curve.begin(), curve.end(), 0);
    for (const auto& c : closed) {
      int seen = 0;
      for (int b : c.curves) seen += curve[b];
      total += std::max(0, c.demand - seen);
    }
    if (best < 0 || total < best) best = total;
  };
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == curve.size()) return evaluate();
    for (int value = 2; value <= cap; value += 2) {
      curve[i] = value;
      recurse(i + 1);
    }
  };
  recurse(0);
  return best;
}

std::vector<ColoredTree> all_stratifications() {
  std::map<std::string, ColoredTree> out;
  for (int n : {2, 4})
    for (const auto& t : enumerate_trees(n))
      for (const auto& ct : enumerate_pairings(t)) out.emplace(colored_tree_canonical(ct), canonical_coloring(ct).form);
  std::vector<ColoredTree> list;
  for (auto& [k, ct] : out) list.push_back(std::move(ct));
  return list;
}

std::vector<ColoredTree> feasible_stratifications(int budget) {
  std::vector<ColoredTree> out;
  for (auto& ct : all_stratifications())
    if (min_critical_points(ct) <= budget) out.push_back(std::move(ct));
  return out;
}

std::vector<PointBudget> point_distributions(const ColoredTree& ct, int budget) {
  validate_colored_tree(ct);
  std::vector<PointBudget> out;
  PointBudget cur;
  cur.per_curve.assign(ct.blocks.size(), 0);
  cur.per_vertex_interior.assign(ct.tree.vertex_count, 0);

  std::function<void(std::size_t, int)> interiors = [&](std::size_t v, int left) {
    if (v + 1 == cur.per_vertex_interior.size()) {
      cur.per_vertex_interior[v] = left;
      if (satisfies_constraints(ct, cur)) out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur.per_vertex_interior[v] = k;
      interiors(v + 1, left - k);
    }
  };
  std::function<void(std::size_t, int)> curves = [&](std::size_t c, int left) {
    if (c == cur.per_curve.size()) return interiors(0, left);
    for (int k = 2; k <= left; k += 2) {
      cur.per_curve[c] = k;
      curves(c + 1, left - k);
    }
  };
  curves(0, budget);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace morsecat
