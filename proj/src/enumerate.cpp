#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "morsecat/catalog.hpp"
#include "morsecat/errors.hpp"

namespace morsecat {
namespace {

struct CircleSpec {
  int tag;
  CircleKind kind;
  std::vector<int> cycle;  // ranks in cyclic order; two entries for a pair
};

struct WorkItem {
  std::vector<PointLocation> points;
  std::map<int, std::vector<int>> cycles;  // block -> cyclic order of ranks
};

// Every arrangement of location labels over the ranks, respecting the counts.
void rank_assignments(const ColoredTree& ct, const PointBudget& budget, std::vector<std::vector<PointLocation>>& out) {
  std::vector<PointLocation> labels;
  for (int b = 0; b < static_cast<int>(budget.per_curve.size()); ++b)
    for (int k = 0; k < budget.per_curve[b]; ++k) labels.push_back({b, -1});
  for (int v = 0; v < ct.tree.vertex_count; ++v)
    for (int k = 0; k < budget.per_vertex_interior[v]; ++k) labels.push_back({-1, v});
  auto code = [](const PointLocation& p) { return p.curve >= 0 ? p.curve : 1000 + p.vertex; };
  std::sort(labels.begin(), labels.end(), [&](const auto& a, const auto& b) { return code(a) < code(b); });
  do {
    out.push_back(labels);
  } while (std::next_permutation(labels.begin(), labels.end(),
                                 [&](const auto& a, const auto& b) { return code(a) < code(b); }));
}

// Normalized alternating cyclic orders of the given ranks.
std::vector<std::vector<int>> curve_orders(std::vector<int> ranks, EnumerationStats& stats) {
  std::vector<std::vector<int>> out;
  if (ranks.size() == 2) return {ranks};
  std::sort(ranks.begin(), ranks.end());
  std::vector<int> rest(ranks.begin() + 1, ranks.end());
  std::set<std::vector<int>> seen;
  do {
    std::vector<int> cyc{ranks.front()};
    cyc.insert(cyc.end(), rest.begin(), rest.end());
    ++stats.cycle_candidates;
    if (!cycle_order_valid(cyc)) continue;
    if (normalize_cycle(cyc) != cyc || !seen.insert(cyc).second) continue;
    ++stats.cycle_accepted;
    std::vector<int> relative;
    for (int r : cyc) relative.push_back(static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), r) - ranks.begin()));
    if (std::find(stats.accepted_cycles.begin(), stats.accepted_cycles.end(), relative) == stats.accepted_cycles.end())
      stats.accepted_cycles.push_back(relative);
    out.push_back(cyc);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// Calls fn for every permutation of every slot sequence of the partition.
template <class Fn>
void for_each_slot_order(DistinguishingGraph& dg, Fn&& fn) {
  std::vector<std::vector<int>*> slots;
  for (auto& order : dg.partitions.saddles)
    for (auto& slot : order.slots)
      if (slot.paths.size() > 1) slots.push_back(&slot.paths);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == slots.size()) return fn();
    auto& seq = *slots[i];
    std::sort(seq.begin(), seq.end());
    do {
      self(self, i + 1);
    } while (std::next_permutation(seq.begin(), seq.end()));
  };
  recurse(recurse, 0);
}

// All optimal distinguishing graphs of one piece, one per equivalence class
// under a fixed orientation.
std::vector<DistinguishingGraph> piece_candidates(const ColoredTree& ct, int v, const std::vector<int>& interior,
                                                  const std::vector<CircleSpec>& circles, int budget,
                                                  long& tried) {
  std::set<int> rank_set(interior.begin(), interior.end());
  std::set<int> segment_ranks;
  for (const auto& c : circles) {
    rank_set.insert(c.cycle.begin(), c.cycle.end());
    if (c.kind == CircleKind::boundary && c.cycle.size() == 2) segment_ranks.insert(c.cycle.begin(), c.cycle.end());
  }
  std::vector<int> ranks(rank_set.begin(), rank_set.end());
  std::vector<bool> segment;
  for (int r : ranks) segment.push_back(segment_ranks.count(r) > 0);

  if (static_cast<int>(ranks.size()) > budget + 2) throw StructuralError("piece exceeds the vertex bound");

  std::map<std::string, DistinguishingGraph> found;
  for (const auto& reeb : enumerate_reeb_graphs(ranks, segment, closure_surface(ct, v).genus)) {
    // Route options per circle: each option is a list of paths.
    std::vector<std::vector<std::vector<MonotonePath>>> options;
    for (const auto& c : circles) {
      std::vector<std::vector<MonotonePath>> opts;
      if (c.cycle.size() == 2) {
        auto lo = reeb.vertex_of_rank(std::min(c.cycle[0], c.cycle[1]));
        auto hi = reeb.vertex_of_rank(std::max(c.cycle[0], c.cycle[1]));
        auto ps = monotone_paths(reeb, lo, hi);
        if (c.kind == CircleKind::boundary) {
          for (auto& p : ps) opts.push_back({p});
        } else {
          for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i; j < ps.size(); ++j) opts.push_back({ps[i], ps[j]});
        }
      } else {
        std::vector<std::vector<MonotonePath>> arcs;
        for (std::size_t i = 0; i < c.cycle.size(); ++i) {
          int a = c.cycle[i], b = c.cycle[(i + 1) % c.cycle.size()];
          arcs.push_back(monotone_paths(reeb, reeb.vertex_of_rank(std::min(a, b)), reeb.vertex_of_rank(std::max(a, b))));
        }
        std::vector<MonotonePath> pick;
        auto product = [&](auto&& self, std::size_t i) -> void {
          if (i == arcs.size()) return opts.push_back(pick);
          for (const auto& p : arcs[i]) {
            pick.push_back(p);
            self(self, i + 1);
            pick.pop_back();
          }
        };
        product(product, 0);
      }
      options.push_back(std::move(opts));
    }

    DistinguishingGraph dg;
    dg.reeb = reeb;
    auto choose = [&](auto&& self, std::size_t i) -> void {
      if (i < options.size()) {
        for (const auto& opt : options[i]) {
          Circle circ{circles[i].kind, circles[i].tag, {}};
          for (const auto& p : opt) {
            circ.paths.push_back(static_cast<int>(dg.decoration.paths.size()));
            dg.decoration.paths.push_back(p);
          }
          dg.decoration.circles.push_back(circ);
          self(self, i + 1);
          dg.decoration.circles.pop_back();
          dg.decoration.paths.resize(dg.decoration.paths.size() - opt.size());
        }
        return;
      }
      std::vector<std::array<int, 2>> free;
      for (int s = 0; s < reeb.vertex_count(); ++s) {
        if (reeb.degree(s) != 3) continue;
        for (int p = 0; p < static_cast<int>(dg.decoration.paths.size()); ++p)
          if (path_touches(reeb, dg.decoration.paths[p], s) && !forced_slot_edge(reeb, dg.decoration.paths[p], s))
            free.push_back({p, s});
      }
      for (long mask = 0; mask < (1L << free.size()); ++mask) {
        std::map<std::array<int, 2>, int> choice;
        for (std::size_t k = 0; k < free.size(); ++k)
          choice[free[k]] = double_side_edges(reeb, free[k][1])[(mask >> k) & 1];
        dg.partitions = derive_partition(reeb, dg.decoration, choice);
        for_each_slot_order(dg, [&] {
          ++tried;
          if (!validate_distinguishing(dg).empty()) return;
          DgKeyOptions opt;
          opt.actual_ranks = true;
          opt.allow_mirror = false;
          found.emplace(dg_key(dg, opt), dg);
        });
      }
    };
    choose(choose, 0);
  }

  int best = -1;
  for (const auto& [k, dg] : found)
    if (best < 0 || dg.reeb.critical_count() < best) best = dg.reeb.critical_count();
  std::vector<DistinguishingGraph> out;
  for (auto& [k, dg] : found)
    if (dg.reeb.critical_count() == best) out.push_back(std::move(dg));
  return out;
}

using Found = std::vector<std::pair<std::string, MorseStructure>>;

Found expand(const ColoredTree& ct, const WorkItem& item, long& tried) {
  const int n = ct.tree.vertex_count;
  std::vector<std::vector<DistinguishingGraph>> per_piece;
  for (int v = 0; v < n; ++v) {
    std::vector<int> interior;
    for (int r = 0; r < static_cast<int>(item.points.size()); ++r)
      if (item.points[r].vertex == v) interior.push_back(r);
    std::vector<CircleSpec> circles;
    for (int b = 0; b < static_cast<int>(ct.blocks.size()); ++b) {
      int inc = ct.incidence(b, v);
      if (inc == 0) continue;
      circles.push_back({b, inc == 2 ? CircleKind::glued : CircleKind::boundary, item.cycles.at(b)});
    }
    per_piece.push_back(piece_candidates(ct, v, interior, circles, static_cast<int>(item.points.size()), tried));
    if (per_piece.back().empty()) return {};
  }

  Found out;
  MorseStructure s;
  s.stratification = ct;
  s.points = item.points;
  s.pieces.resize(n);
  auto product = [&](auto&& self, int v) -> void {
    if (v == n) {
      attach_gluings(s);
      if (validate_structure(s).empty()) out.emplace_back(structure_canonical(s), s);
      return;
    }
    for (const auto& dg : per_piece[v]) {
      s.pieces[v] = dg;
      self(self, v + 1);
    }
  };
  product(product, 0);
  return out;
}

}  // namespace

std::vector<CatalogEntry> enumerate_structures(const ColoredTree& ct, int budget, const EnumerationOptions& opt,
                                               EnumerationStats* stats) {
  validate_colored_tree(ct);
  if (budget < 0) throw RangeError("budget must be non-negative");
  EnumerationStats local;
  EnumerationStats& st = stats ? *stats : local;

  std::vector<WorkItem> items;
  for (const auto& dist : point_distributions(ct, budget)) {
    std::vector<std::vector<PointLocation>> assignments;
    rank_assignments(ct, dist, assignments);
    for (const auto& points : assignments) {
      std::vector<std::vector<std::vector<int>>> orders;
      for (int b = 0; b < static_cast<int>(ct.blocks.size()); ++b) {
        std::vector<int> ranks;
        for (int r = 0; r < budget; ++r)
          if (points[r].curve == b) ranks.push_back(r);
        orders.push_back(curve_orders(ranks, st));
      }
      WorkItem item{points, {}};
      auto product = [&](auto&& self, std::size_t b) -> void {
        if (b == orders.size()) return items.push_back(item);
        for (const auto& cyc : orders[b]) {
          item.cycles[static_cast<int>(b)] = cyc;
          self(self, b + 1);
        }
      };
      product(product, 0);
    }
  }

  const int threads = std::max(1, opt.threads);
  std::vector<Found> results(items.size());
  std::vector<long> tried(threads, 0);
  auto worker = [&](int t) {
    for (std::size_t i = t; i < items.size(); i += threads) results[i] = expand(ct, items[i], tried[t]);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  std::map<std::string, MorseStructure> unique;
  for (auto& found : results)
    for (auto& [key, s] : found) {
      ++st.structures_generated;
      unique.emplace(key, std::move(s));
    }
  st.piece_candidates += std::accumulate(tried.begin(), tried.end(), 0L);

  std::vector<CatalogEntry> out;
  const std::string label = stratification_label(ct);
  for (auto& [key, s] : unique)
    out.push_back({std::move(s), key, label + "/enumerated-" + std::to_string(out.size() + 1)});
  return out;
}

}  // namespace morsecat
