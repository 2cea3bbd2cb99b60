#include "morsecat/distinguish.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "morsecat/errors.hpp"
#include "morsecat/labeling.hpp"

namespace morsecat {

std::vector<std::array<int, 2>> PathDecoration::pairing() const {
  std::vector<std::array<int, 2>> out;
  for (const auto& c : circles)
    if (c.kind == CircleKind::glued && c.paths.size() == 2) out.push_back({c.paths[0], c.paths[1]});
  return out;
}

std::vector<int> PathDecoration::unpaired() const {
  std::vector<int> out;
  for (const auto& c : circles)
    if (c.paths.size() == 1) out.push_back(c.paths[0]);
  return out;
}

int PathDecoration::circle_of(int path) const {
  for (int c = 0; c < static_cast<int>(circles.size()); ++c)
    if (std::find(circles[c].paths.begin(), circles[c].paths.end(), path) != circles[c].paths.end()) return c;
  return -1;
}

const SaddleOrder* SaddlePartition::at(int vertex) const {
  for (const auto& s : saddles)
    if (s.vertex == vertex) return &s;
  return nullptr;
}

// --- local structure ------------------------------------------------------------------

std::array<int, 2> double_side_edges(const ReebGraph& r, int saddle) {
  bool split = r.out_degree(saddle) == 2;
  std::vector<int> ids;
  for (int e = 0; e < r.edge_count(); ++e)
    if ((split && r.edges[e].source == saddle) || (!split && r.edges[e].target == saddle)) ids.push_back(e);
  if (ids.size() != 2 || r.degree(saddle) != 3) throw ValidationError("vertex is not a saddle");
  return {ids[0], ids[1]};
}

std::vector<int> path_vertices(const ReebGraph& r, const MonotonePath& p) {
  std::vector<int> out{p.start};
  for (int e : p.edges) out.push_back(r.edges[e].target);
  return out;
}

bool path_touches(const ReebGraph& r, const MonotonePath& p, int v) {
  auto vs = path_vertices(r, p);
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

std::optional<int> forced_slot_edge(const ReebGraph& r, const MonotonePath& p, int saddle) {
  auto sides = double_side_edges(r, saddle);
  auto is_double = [&](int e) { return e == sides[0] || e == sides[1]; };
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const auto& e = r.edges[p.edges[i]];
    if ((e.source == saddle || e.target == saddle) && is_double(p.edges[i])) return p.edges[i];
  }
  return std::nullopt;
}

std::vector<std::array<int, 2>> circle_neighbours_at(const ReebGraph&, const PathDecoration& d, int v) {
  std::vector<std::array<int, 2>> out;
  for (const auto& c : d.circles) {
    std::vector<int> ending;
    for (int p : c.paths)
      if (d.paths[p].start == v || d.paths[p].end == v) ending.push_back(p);
    for (std::size_t i = 0; i < ending.size(); ++i)
      for (std::size_t j = i + 1; j < ending.size(); ++j) out.push_back({ending[i], ending[j]});
  }
  return out;
}

std::vector<int> induced_cyclic_order(const DistinguishingGraph& dg, int edge, int v) {
  const SaddleOrder* order = dg.partitions.at(v);
  if (!order) throw LookupError("no saddle partition at vertex");
  std::vector<int> seq;
  bool on_double = order->slots[0].edge == edge || order->slots[1].edge == edge;
  for (const auto& slot : order->slots)
    if (!on_double || slot.edge == edge) seq.insert(seq.end(), slot.paths.begin(), slot.paths.end());
  std::vector<int> out;
  for (int p : seq) {
    const auto& es = dg.decoration.paths[p].edges;
    if (std::find(es.begin(), es.end(), edge) != es.end()) out.push_back(p);
  }
  return out;
}

std::vector<MonotonePath> monotone_paths(const ReebGraph& r, int from, int to) {
  std::vector<MonotonePath> out;
  MonotonePath cur;
  cur.start = from;
  cur.end = to;
  auto walk = [&](auto&& self, int v) -> void {
    if (v == to) {
      if (!cur.edges.empty()) out.push_back(cur);
      return;
    }
    for (int e = 0; e < r.edge_count(); ++e) {
      if (r.edges[e].source != v) continue;
      cur.edges.push_back(e);
      self(self, r.edges[e].target);
      cur.edges.pop_back();
    }
  };
  walk(walk, from);
  return out;
}

SaddlePartition derive_partition(const ReebGraph& r, const PathDecoration& d,
                                 const std::map<std::array<int, 2>, int>& free_choice) {
  SaddlePartition part;
  for (int v : r.by_rank()) {
    if (r.degree(v) != 3) continue;
    auto sides = double_side_edges(r, v);
    SaddleOrder order;
    order.vertex = v;
    order.slots[0].edge = sides[0];
    order.slots[1].edge = sides[1];
    for (int p = 0; p < static_cast<int>(d.paths.size()); ++p) {
      if (!path_touches(r, d.paths[p], v)) continue;
      int edge;
      if (auto forced = forced_slot_edge(r, d.paths[p], v)) {
        edge = *forced;
      } else {
        auto it = free_choice.find({p, v});
        if (it == free_choice.end()) throw LookupError("missing slot choice for path at saddle");
        edge = it->second;
      }
      order.slots[edge == sides[0] ? 0 : 1].paths.push_back(p);
    }
    part.saddles.push_back(std::move(order));
  }
  return part;
}

// --- validation -------------------------------------------------------------------------

namespace {

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = a[(i + shift) % a.size()] == b[i];
    if (same) return true;
  }
  return false;
}

std::vector<int> min_rotation(std::vector<int> seq) {
  if (seq.empty()) return seq;
  std::vector<int> best = seq;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    best = std::min(best, seq);
  }
  return best;
}

// Walks the arcs of a four-point circle; returns vertex ids in cyclic order or
// an empty vector if they do not close up.
std::vector<int> circle_vertex_cycle(const PathDecoration& d, const Circle& c) {
  if (c.paths.size() <= 2) {
    const auto& p = d.paths[c.paths[0]];
    return {p.start, p.end};
  }
  std::vector<int> order;
  std::vector<bool> used(c.paths.size(), false);
  int at = d.paths[c.paths[0]].start;
  order.push_back(at);
  int next = d.paths[c.paths[0]].end;
  used[0] = true;
  while (true) {
    if (next == order.front()) break;
    order.push_back(next);
    bool moved = false;
    for (std::size_t k = 0; k < c.paths.size(); ++k) {
      if (used[k]) continue;
      const auto& p = d.paths[c.paths[k]];
      if (p.start == next || p.end == next) {
        used[k] = true;
        next = p.start == next ? p.end : p.start;
        moved = true;
        break;
      }
    }
    if (!moved) return {};
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) return {};
  if (order.size() != c.paths.size()) return {};
  return order;
}

}  // namespace

bool cycle_order_valid(std::span<const int> ranks) {
  const std::size_t n = ranks.size();
  if (n < 2 || n % 2 != 0) return false;
  if (std::set<int>(ranks.begin(), ranks.end()).size() != n) return false;
  if (n == 2) return true;
  for (std::size_t i = 0; i < n; ++i) {
    int prev = ranks[(i + n - 1) % n], here = ranks[i], next = ranks[(i + 1) % n];
    bool is_min = here < prev && here < next;
    bool is_max = here > prev && here > next;
    if (!is_min && !is_max) return false;
  }
  return true;
}

std::vector<int> normalize_cycle(std::span<const int> ranks) {
  std::vector<int> seq(ranks.begin(), ranks.end());
  if (seq.empty()) return seq;
  auto lowest = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), lowest, seq.end());
  if (seq.size() > 2 && seq.back() < seq[1]) std::reverse(seq.begin() + 1, seq.end());
  return seq;
}

std::vector<int> stratum_cycle(const DistinguishingGraph& dg, int circle) {
  const auto& d = dg.decoration;
  if (circle < 0 || circle >= static_cast<int>(d.circles.size())) throw LookupError("unknown circle");
  auto cyc = circle_vertex_cycle(d, d.circles[circle]);
  if (cyc.empty()) throw ValidationError("circle arcs do not close up");
  std::vector<int> ranks;
  for (int v : cyc) ranks.push_back(dg.reeb.rank[v]);
  if (!cycle_order_valid(ranks)) throw ValidationError("critical points do not alternate along the circle");
  return normalize_cycle(ranks);
}

std::vector<std::string> validate_distinguishing(const DistinguishingGraph& dg) {
  std::vector<std::string> out;
  const ReebGraph& r = dg.reeb;
  const PathDecoration& d = dg.decoration;
  for (const auto& v : validate_reeb(r)) out.push_back("reeb: " + v);
  if (!out.empty()) return out;

  // Paths.
  bool paths_ok = true;
  for (std::size_t i = 0; i < d.paths.size(); ++i) {
    const auto& p = d.paths[i];
    std::string tag = "path " + std::to_string(i) + ": ";
    if (p.edges.empty()) {
      out.push_back(tag + "empty path");
      paths_ok = false;
      continue;
    }
    int at = p.start;
    for (int e : p.edges) {
      if (e < 0 || e >= r.edge_count()) {
        out.push_back(tag + "unknown edge");
        paths_ok = false;
        break;
      }
      if (r.edges[e].source != at) {
        out.push_back(tag + "edges do not chain upward");
        paths_ok = false;
        break;
      }
      at = r.edges[e].target;
    }
    if (paths_ok && at != p.end) {
      out.push_back(tag + "end vertex mismatch");
      paths_ok = false;
    }
  }
  if (!paths_ok) return out;

  // Circles.
  std::vector<int> owner(d.paths.size(), 0);
  for (std::size_t c = 0; c < d.circles.size(); ++c) {
    const auto& circ = d.circles[c];
    std::string tag = "circle " + std::to_string(c) + ": ";
    for (int p : circ.paths) {
      if (p < 0 || p >= static_cast<int>(d.paths.size())) {
        out.push_back(tag + "unknown path");
        return out;
      }
      ++owner[p];
    }
    std::size_t n = circ.paths.size();
    bool size_ok = circ.kind == CircleKind::glued ? (n == 2 || n == 4) : (n == 1 || n == 4);
    if (!size_ok) {
      out.push_back(tag + "wrong number of arcs for circle kind");
      continue;
    }
    if (n == 2) {
      const auto& a = d.paths[circ.paths[0]];
      const auto& b = d.paths[circ.paths[1]];
      if (a.start != b.start || a.end != b.end) out.push_back(tag + "paired paths do not share endpoints");
    } else if (n == 4) {
      auto cyc = circle_vertex_cycle(d, circ);
      std::vector<int> ranks;
      for (int v : cyc) ranks.push_back(r.rank[v]);
      if (cyc.empty() || !cycle_order_valid(ranks)) out.push_back(tag + "arcs do not form an alternating cycle");
    }
  }
  for (std::size_t p = 0; p < owner.size(); ++p)
    if (owner[p] != 1) out.push_back("path " + std::to_string(p) + ": must belong to exactly one circle");

  // Regular points must be ends of collapsed segments.
  for (int v = 0; v < r.vertex_count(); ++v) {
    if (r.degree(v) != 2) continue;
    bool is_end = false;
    for (int p : d.unpaired()) is_end |= d.paths[p].start == v || d.paths[p].end == v;
    if (!is_end) out.push_back("vertex " + std::to_string(v) + ": regular point is not a segment end");
  }

  // Saddle partitions.
  std::set<int> seen_vertices;
  for (const auto& order : dg.partitions.saddles) {
    if (order.vertex < 0 || order.vertex >= r.vertex_count() || r.degree(order.vertex) != 3) {
      out.push_back("partition attached to a non-saddle vertex");
      continue;
    }
    if (!seen_vertices.insert(order.vertex).second) out.push_back("duplicate partition at a saddle");
  }
  for (int v = 0; v < r.vertex_count(); ++v) {
    if (r.degree(v) != 3) continue;
    std::string tag = "saddle " + std::to_string(v) + ": ";
    const SaddleOrder* order = dg.partitions.at(v);
    if (!order) {
      out.push_back(tag + "missing partition");
      continue;
    }
    auto sides = double_side_edges(r, v);
    std::array<int, 2> slot_edges{order->slots[0].edge, order->slots[1].edge};
    std::sort(slot_edges.begin(), slot_edges.end());
    if (slot_edges != sides) {
      out.push_back(tag + "slots are not attached to the co-directional edges");
      continue;
    }
    std::map<int, int> slot_of;
    for (const auto& slot : order->slots)
      for (int p : slot.paths) {
        if (p < 0 || p >= static_cast<int>(d.paths.size())) {
          out.push_back(tag + "unknown path in subset");
          continue;
        }
        if (!slot_of.emplace(p, slot.edge).second) out.push_back(tag + "path listed twice");
      }
    for (int p = 0; p < static_cast<int>(d.paths.size()); ++p) {
      bool touches = path_touches(r, d.paths[p], v);
      auto it = slot_of.find(p);
      if (touches && it == slot_of.end()) out.push_back(tag + "path " + std::to_string(p) + " missing from subsets");
      if (!touches && it != slot_of.end()) out.push_back(tag + "path " + std::to_string(p) + " does not pass the saddle");
      if (touches && it != slot_of.end()) {
        auto forced = forced_slot_edge(r, d.paths[p], v);
        if (forced && *forced != it->second)
          out.push_back(tag + "path " + std::to_string(p) + " is not in the subset of the edge it uses");
      }
    }
    for (const auto& pair : circle_neighbours_at(r, d, v)) {
      auto a = slot_of.find(pair[0]), b = slot_of.find(pair[1]);
      if (a != slot_of.end() && b != slot_of.end() && a->second == b->second)
        out.push_back(tag + "paths " + std::to_string(pair[0]) + " and " + std::to_string(pair[1]) +
                      " of one circle end here in the same subset");
    }
  }
  if (!out.empty()) return out;

  // Cyclic orders on edges between two saddles must coincide.
  for (int e = 0; e < r.edge_count(); ++e) {
    int s = r.edges[e].source, t = r.edges[e].target;
    if (r.degree(s) != 3 || r.degree(t) != 3) continue;
    if (!cyclic_equal(induced_cyclic_order(dg, e, s), induced_cyclic_order(dg, e, t)))
      out.push_back("edge " + std::to_string(e) + ": cyclic orders induced at its ends differ");
  }
  return out;
}

// --- canonical key ---------------------------------------------------------------------------

namespace {

void require_valid(const DistinguishingGraph& dg) {
  auto v = validate_distinguishing(dg);
  if (!v.empty()) throw ValidationError("invalid distinguishing graph: " + v.front());
}

std::vector<int> vertex_labels(const ReebGraph& r, bool actual_ranks) {
  std::vector<int> label(r.vertex_count());
  auto order = r.by_rank();
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = actual_ranks ? r.rank[order[i]] : static_cast<int>(i);
  return label;
}

int mapped_tag(const DgKeyOptions& opt, int tag) {
  if (tag < 0 || opt.tag_map.empty()) return tag;
  return opt.tag_map.at(tag);
}

// Edge endpoint used to read the cyclic order of an edge, or -1 if neither end
// is a saddle.
int order_end(const ReebGraph& r, int e) {
  if (r.degree(r.edges[e].source) == 3) return r.edges[e].source;
  if (r.degree(r.edges[e].target) == 3) return r.edges[e].target;
  return -1;
}

std::string serialize(const DistinguishingGraph& dg, const std::vector<int>& vlabel, bool mirror,
                      const DgKeyOptions& opt, const std::vector<int>& emap, const std::vector<int>& pmap) {
  const auto& r = dg.reeb;
  const auto& d = dg.decoration;
  std::ostringstream os;

  std::vector<int> path_by_label(pmap.size());
  for (std::size_t p = 0; p < pmap.size(); ++p) path_by_label[pmap[p]] = static_cast<int>(p);
  os << "|P";
  for (int p : path_by_label) {
    os << '[';
    for (std::size_t i = 0; i < d.paths[p].edges.size(); ++i) os << (i ? "," : "") << emap[d.paths[p].edges[i]];
    os << ']';
  }

  std::vector<std::tuple<int, int, std::vector<int>>> circles;
  for (const auto& c : d.circles) {
    std::vector<int> members;
    for (int p : c.paths) members.push_back(pmap[p]);
    std::sort(members.begin(), members.end());
    circles.emplace_back(c.kind == CircleKind::glued ? 0 : 1, mapped_tag(opt, c.tag), std::move(members));
  }
  std::sort(circles.begin(), circles.end());
  os << "|C";
  for (const auto& [kind, tag, members] : circles) {
    os << '[' << (kind == 0 ? 'g' : 'b') << tag << ':';
    for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
    os << ']';
  }

  std::vector<std::pair<int, std::vector<std::pair<int, std::vector<int>>>>> saddles;
  for (const auto& order : dg.partitions.saddles) {
    std::vector<std::pair<int, std::vector<int>>> slots;
    for (const auto& slot : order.slots) {
      std::vector<int> members;
      for (int p : slot.paths) members.push_back(pmap[p]);
      std::sort(members.begin(), members.end());
      slots.emplace_back(emap[slot.edge], std::move(members));
    }
    std::sort(slots.begin(), slots.end());
    saddles.emplace_back(vlabel[order.vertex], std::move(slots));
  }
  std::sort(saddles.begin(), saddles.end());
  os << "|S";
  for (const auto& [v, slots] : saddles) {
    os << '[' << v;
    for (const auto& [e, members] : slots) {
      os << ';' << e << ':';
      for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
    }
    os << ']';
  }

  std::vector<std::pair<int, std::vector<int>>> cyclic;
  for (int e = 0; e < r.edge_count(); ++e) {
    int end = order_end(r, e);
    if (end < 0) continue;
    std::vector<int> seq;
    for (int p : induced_cyclic_order(dg, e, end)) seq.push_back(pmap[p]);
    if (seq.size() < 3) continue;  // one or two elements carry no cyclic information
    if (mirror) std::reverse(seq.begin(), seq.end());
    cyclic.emplace_back(emap[e], min_rotation(std::move(seq)));
  }
  std::sort(cyclic.begin(), cyclic.end());
  os << "|O";
  for (const auto& [e, seq] : cyclic) {
    os << '[' << e << ':';
    for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? "," : "") << seq[i];
    os << ']';
  }
  return os.str();
}

}  // namespace

std::string dg_key(const DistinguishingGraph& dg, const DgKeyOptions& opt) {
  require_valid(dg);
  const auto& r = dg.reeb;
  const auto& d = dg.decoration;
  auto vlabel = vertex_labels(r, opt.actual_ranks);

  // Edges: cells of parallel edges, ordered by labelled endpoints.
  std::vector<std::pair<int, int>> ekeys;
  for (const auto& e : r.edges) ekeys.emplace_back(vlabel[e.source], vlabel[e.target]);
  auto ecells = detail::cells_by_key(ekeys);

  // Paths: cells by isomorphism-invariant descriptors.
  using PathKey = std::tuple<int, int, int, int, int>;
  std::vector<PathKey> pkeys;
  for (int p = 0; p < static_cast<int>(d.paths.size()); ++p) {
    const auto& c = d.circles[d.circle_of(p)];
    pkeys.emplace_back(vlabel[d.paths[p].start], vlabel[d.paths[p].end], c.kind == CircleKind::glued ? 0 : 1,
                       mapped_tag(opt, c.tag), static_cast<int>(c.paths.size()));
  }
  auto pcells = detail::cells_by_key(pkeys);

  std::string best;
  bool have = false;
  std::vector<bool> mirrors = opt.allow_mirror ? std::vector<bool>{false, true} : std::vector<bool>{opt.mirror};
  for (bool mirror : mirrors) {
    detail::for_each_ordered_labeling(ecells, r.edges.size(), [&](const std::vector<int>& emap) {
      detail::for_each_ordered_labeling(pcells, d.paths.size(), [&](const std::vector<int>& pmap) {
        std::string s = serialize(dg, vlabel, mirror, opt, emap, pmap);
        if (!have || s < best) best = std::move(s), have = true;
        return true;
      });
      return true;
    });
  }
  std::string head = opt.actual_ranks ? reeb_key_with_ranks(r) : reeb_canonical(r);
  return "dg{" + head + best + "}";
}

std::string dg_canonical(const DistinguishingGraph& dg) { return dg_key(dg, DgKeyOptions{}); }

// --- explicit isomorphism search ------------------------------------------------------------------

namespace {

struct Matcher {
  const DistinguishingGraph& a;
  const DistinguishingGraph& b;
  const DgKeyOptions& opt;
  std::vector<int> vmap, emap, pmap;
  std::vector<bool> eused, pused;
  bool mirror = false;

  bool consistent() const {
    const auto& da = a.decoration;
    const auto& db = b.decoration;
    // Circles onto circles.
    for (const auto& c : da.circles) {
      std::set<int> img;
      for (int p : c.paths) img.insert(pmap[p]);
      bool found = false;
      for (const auto& cb : db.circles) {
        if (cb.kind != c.kind || cb.tag != mapped_tag(opt, c.tag)) continue;
        if (std::set<int>(cb.paths.begin(), cb.paths.end()) == img) found = true;
      }
      if (!found) return false;
    }
    // Slot membership.
    for (const auto& order : a.partitions.saddles) {
      const SaddleOrder* ob = b.partitions.at(vmap[order.vertex]);
      if (!ob) return false;
      for (const auto& slot : order.slots) {
        const SaddleSlot* sb = nullptr;
        for (const auto& s : ob->slots)
          if (s.edge == emap[slot.edge]) sb = &s;
        if (!sb) return false;
        std::set<int> img;
        for (int p : slot.paths) img.insert(pmap[p]);
        if (img != std::set<int>(sb->paths.begin(), sb->paths.end())) return false;
      }
    }
    // Cyclic orders.
    for (int e = 0; e < a.reeb.edge_count(); ++e) {
      int end = order_end(a.reeb, e);
      if (end < 0) continue;
      std::vector<int> seq;
      for (int p : induced_cyclic_order(a, e, end)) seq.push_back(pmap[p]);
      if (mirror) std::reverse(seq.begin(), seq.end());
      if (!cyclic_equal(seq, induced_cyclic_order(b, emap[e], vmap[end]))) return false;
    }
    return true;
  }

  bool match_paths(std::size_t p) {
    const auto& da = a.decoration;
    const auto& db = b.decoration;
    if (p == da.paths.size()) return consistent();
    const auto& pa = da.paths[p];
    for (std::size_t q = 0; q < db.paths.size(); ++q) {
      if (pused[q]) continue;
      const auto& pb = db.paths[q];
      if (pb.start != vmap[pa.start] || pb.end != vmap[pa.end] || pb.edges.size() != pa.edges.size()) continue;
      bool same = true;
      for (std::size_t i = 0; i < pa.edges.size() && same; ++i) same = emap[pa.edges[i]] == pb.edges[i];
      if (!same) continue;
      pused[q] = true;
      pmap[p] = static_cast<int>(q);
      if (match_paths(p + 1)) return true;
      pused[q] = false;
    }
    return false;
  }

  bool match_edges(std::size_t e) {
    if (e == a.reeb.edges.size()) return match_paths(0);
    const auto& ea = a.reeb.edges[e];
    for (std::size_t f = 0; f < b.reeb.edges.size(); ++f) {
      if (eused[f]) continue;
      const auto& eb = b.reeb.edges[f];
      if (eb.source != vmap[ea.source] || eb.target != vmap[ea.target]) continue;
      eused[f] = true;
      emap[e] = static_cast<int>(f);
      if (match_edges(e + 1)) return true;
      eused[f] = false;
    }
    return false;
  }
};

}  // namespace

bool dg_equivalent(const DistinguishingGraph& a, const DistinguishingGraph& b, const DgKeyOptions& opt) {
  require_valid(a);
  require_valid(b);
  if (a.reeb.vertex_count() != b.reeb.vertex_count() || a.reeb.edge_count() != b.reeb.edge_count() ||
      a.decoration.paths.size() != b.decoration.paths.size() ||
      a.decoration.circles.size() != b.decoration.circles.size())
    return false;
  auto oa = a.reeb.by_rank(), ob = b.reeb.by_rank();
  std::vector<int> vmap(oa.size());
  for (std::size_t i = 0; i < oa.size(); ++i) {
    if (opt.actual_ranks && a.reeb.rank[oa[i]] != b.reeb.rank[ob[i]]) return false;
    if (a.reeb.segment_end[oa[i]] != b.reeb.segment_end[ob[i]]) return false;
    vmap[oa[i]] = ob[i];
  }
  std::vector<bool> mirrors = opt.allow_mirror ? std::vector<bool>{false, true} : std::vector<bool>{opt.mirror};
  for (bool mirror : mirrors) {
    Matcher m{a, b, opt, vmap, std::vector<int>(a.reeb.edges.size(), -1),
              std::vector<int>(a.decoration.paths.size(), -1), std::vector<bool>(b.reeb.edges.size(), false),
              std::vector<bool>(b.decoration.paths.size(), false), mirror};
    if (m.match_edges(0)) return true;
  }
  return false;
}

bool dg_equivalent(const DistinguishingGraph& a, const DistinguishingGraph& b) {
  return dg_equivalent(a, b, DgKeyOptions{});
}

DistinguishingGraph relabel(const DistinguishingGraph& dg, const std::vector<int>& vertex_perm,
                            const std::vector<int>& edge_perm, const std::vector<int>& path_perm,
                            const std::vector<int>& circle_perm) {
  DistinguishingGraph out;
  const auto& r = dg.reeb;
  out.reeb.rank.resize(r.rank.size());
  out.reeb.segment_end.resize(r.rank.size());
  for (int v = 0; v < r.vertex_count(); ++v) {
    out.reeb.rank[vertex_perm[v]] = r.rank[v];
    out.reeb.segment_end[vertex_perm[v]] = r.segment_end[v];
  }
  out.reeb.edges.resize(r.edges.size());
  for (int e = 0; e < r.edge_count(); ++e)
    out.reeb.edges[edge_perm[e]] = {vertex_perm[r.edges[e].source], vertex_perm[r.edges[e].target]};

  const auto& d = dg.decoration;
  out.decoration.paths.resize(d.paths.size());
  for (std::size_t p = 0; p < d.paths.size(); ++p) {
    MonotonePath np;
    np.start = vertex_perm[d.paths[p].start];
    np.end = vertex_perm[d.paths[p].end];
    for (int e : d.paths[p].edges) np.edges.push_back(edge_perm[e]);
    out.decoration.paths[path_perm[p]] = std::move(np);
  }
  out.decoration.circles.resize(d.circles.size());
  for (std::size_t c = 0; c < d.circles.size(); ++c) {
    Circle nc = d.circles[c];
    for (int& p : nc.paths) p = path_perm[p];
    out.decoration.circles[circle_perm[c]] = std::move(nc);
  }
  for (const auto& order : dg.partitions.saddles) {
    SaddleOrder no;
    no.vertex = vertex_perm[order.vertex];
    for (int s = 0; s < 2; ++s) {
      no.slots[s].edge = edge_perm[order.slots[s].edge];
      for (int p : order.slots[s].paths) no.slots[s].paths.push_back(path_perm[p]);
    }
    out.partitions.saddles.push_back(std::move(no));
  }
  std::sort(out.partitions.saddles.begin(), out.partitions.saddles.end(),
            [](const SaddleOrder& x, const SaddleOrder& y) { return x.vertex < y.vertex; });
  return out;
}

}  // namespace morsecat
