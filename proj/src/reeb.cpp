#include "morsecat/reeb.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "morsecat/errors.hpp"

namespace morsecat {

int ReebGraph::in_degree(int v) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const ReebEdge& e) { return e.target == v; }));
}

int ReebGraph::out_degree(int v) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const ReebEdge& e) { return e.source == v; }));
}

std::vector<int> ReebGraph::by_rank() const {
  std::vector<int> ids(rank.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) { return rank[a] < rank[b]; });
  return ids;
}

int ReebGraph::vertex_of_rank(int r) const {
  auto it = std::find(rank.begin(), rank.end(), r);
  return it == rank.end() ? -1 : static_cast<int>(it - rank.begin());
}

int ReebGraph::critical_count() const {
  int n = 0;
  for (int v = 0; v < vertex_count(); ++v) n += degree(v) != 2;
  return n;
}

bool ReebGraph::connected() const {
  if (rank.empty()) return false;
  std::vector<int> parent(rank.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    if (e.source < 0 || e.target < 0 || e.source >= vertex_count() || e.target >= vertex_count()) return false;
    parent[find(e.source)] = find(e.target);
  }
  int root = find(0);
  for (int v = 1; v < vertex_count(); ++v)
    if (find(v) != root) return false;
  return true;
}

ReebGraph make_reeb(std::vector<int> ranks, std::vector<ReebEdge> edges) {
  ReebGraph r;
  r.segment_end.assign(ranks.size(), false);
  r.rank = std::move(ranks);
  r.edges = std::move(edges);
  return r;
}

int betti(const ReebGraph& r) {
  if (!r.connected()) throw ValidationError("Reeb graph is disconnected");
  return r.edge_count() - r.vertex_count() + 1;
}

std::vector<std::string> validate_reeb(const ReebGraph& r) {
  std::vector<std::string> out;
  if (r.rank.empty()) {
    out.emplace_back("empty graph");
    return out;
  }
  if (r.segment_end.size() != r.rank.size()) out.emplace_back("segment flags do not match vertices");
  if (std::set<int>(r.rank.begin(), r.rank.end()).size() != r.rank.size())
    out.emplace_back("duplicate critical value rank");
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    const auto& e = r.edges[i];
    if (e.source < 0 || e.target < 0 || e.source >= r.vertex_count() || e.target >= r.vertex_count()) {
      out.push_back("edge " + std::to_string(i) + ": endpoint out of range");
      return out;
    }
    if (r.rank[e.source] >= r.rank[e.target]) out.push_back("edge " + std::to_string(i) + ": edge against value order");
  }
  if (!r.connected()) out.emplace_back("disconnected");
  if (r.vertex_count() == 1) out.emplace_back("single vertex has no extrema pair");
  for (int v = 0; v < r.vertex_count(); ++v) {
    int in = r.in_degree(v), outd = r.out_degree(v);
    int d = in + outd;
    bool ok = d == 1 || (d == 3 && (in == 1 || in == 2)) ||
              (d == 2 && in == 1 && v < static_cast<int>(r.segment_end.size()) && r.segment_end[v]);
    if (!ok) out.push_back("vertex " + std::to_string(v) + ": invalid vertex degree");
  }
  return out;
}

namespace {

std::string encode(const ReebGraph& r, bool actual_ranks) {
  auto order = r.by_rank();
  std::vector<int> pos(r.rank.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  auto label = [&](int v) { return actual_ranks ? r.rank[v] : pos[v]; };
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : r.edges) edges.emplace_back(label(e.source), label(e.target));
  std::sort(edges.begin(), edges.end());
  std::ostringstream os;
  os << "reeb:" << r.vertex_count() << ':';
  if (actual_ranks) {
    for (std::size_t i = 0; i < order.size(); ++i) os << (i ? "." : "") << r.rank[order[i]];
    os << ':';
  }
  for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? "," : "") << edges[i].first << '>' << edges[i].second;
  bool any_segment = std::find(r.segment_end.begin(), r.segment_end.end(), true) != r.segment_end.end();
  if (any_segment) {
    os << ":s";
    for (int v : order) os << (r.segment_end[v] ? '1' : '0');
  }
  return os.str();
}

void require_valid(const ReebGraph& r) {
  auto v = validate_reeb(r);
  if (!v.empty()) throw ValidationError("invalid Reeb graph: " + v.front());
}

}  // namespace

std::string reeb_canonical(const ReebGraph& r) {
  require_valid(r);
  return encode(r, false);
}

std::string reeb_key_with_ranks(const ReebGraph& r) {
  require_valid(r);
  return encode(r, true);
}

std::vector<ReebGraph> enumerate_reeb_graphs(const std::vector<int>& ranks,
                                             const std::vector<bool>& segment_end, int betti_number) {
  const int n = static_cast<int>(ranks.size());
  if (n < 2 || betti_number < 0) return {};
  // Vertex ids follow rank order.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return ranks[a] < ranks[b]; });
  std::vector<int> sorted_ranks(n);
  std::vector<bool> sorted_seg(n);
  for (int i = 0; i < n; ++i) {
    sorted_ranks[i] = ranks[idx[i]];
    sorted_seg[i] = segment_end.empty() ? false : segment_end[idx[i]];
  }

  const int edge_total = n - 1 + betti_number;
  std::map<std::string, ReebGraph> found;
  std::vector<int> in(n, 0);
  std::vector<ReebEdge> chosen;
  // Vertices are settled in rank order; the in-degree of a vertex fixes how
  // many edges may leave it.
  auto settle = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (static_cast<int>(chosen.size()) != edge_total) return;
      ReebGraph g;
      g.rank = sorted_ranks;
      g.segment_end = sorted_seg;
      g.edges = chosen;
      if (validate_reeb(g).empty()) found.emplace(encode(g, true), std::move(g));
      return;
    }
    std::vector<int> outs;
    if (in[v] == 0) outs = {1};
    if (in[v] == 1) outs = sorted_seg[v] ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 2};
    if (in[v] == 2) outs = {1};
    for (int k : outs) {
      if (static_cast<int>(chosen.size()) + k > edge_total) continue;
      auto pick = [&](auto&& rec, int from, int left) -> void {
        if (left == 0) return self(self, v + 1);
        for (int w = from; w < n; ++w) {
          if (in[w] >= 2) continue;
          ++in[w];
          chosen.push_back({v, w});
          rec(rec, w, left - 1);
          chosen.pop_back();
          --in[w];
        }
      };
      pick(pick, v + 1, k);
    }
  };
  settle(settle, 0);

  std::vector<ReebGraph> out;
  for (auto& [k, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<ReebGraph> enumerate_optimal_reeb(int genus) {
  if (genus < 0 || genus > 3) throw RangeError("enumerate_optimal_reeb supports genus 0..3");
  const int n = 2 + 2 * genus;
  std::vector<int> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 0);
  std::vector<ReebGraph> out;
  for (auto& g : enumerate_reeb_graphs(ranks, std::vector<bool>(n, false), genus)) {
    int extrema = 0;
    for (int v = 0; v < n; ++v) extrema += g.degree(v) == 1;
    if (extrema == 2) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace morsecat
