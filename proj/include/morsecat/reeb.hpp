#pragma once

// Reeb graphs of simple Morse functions: directed multigraphs whose vertices
// carry a strict total order (the order of critical values).

#include <string>
#include <vector>

namespace morsecat {

struct ReebEdge {
  int source = 0;
  int target = 0;
  friend bool operator==(const ReebEdge&, const ReebEdge&) = default;
  friend auto operator<=>(const ReebEdge&, const ReebEdge&) = default;
};

/// Vertex ids index `rank` and `segment_end`; edge ids index `edges`.
///
/// `rank` fixes the order of critical values. `segment_end` marks the end of
/// a collapsed boundary circle; only such a vertex may be a regular point
/// (one edge in, one edge out) of the glued-up surface.
struct ReebGraph {
  std::vector<int> rank;
  std::vector<bool> segment_end;
  std::vector<ReebEdge> edges;

  int vertex_count() const { return static_cast<int>(rank.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int in_degree(int v) const;
  int out_degree(int v) const;
  int degree(int v) const { return in_degree(v) + out_degree(v); }
  bool is_saddle(int v) const { return degree(v) == 3; }
  /// Vertex ids sorted by rank.
  std::vector<int> by_rank() const;
  /// Vertex with the given rank, or -1.
  int vertex_of_rank(int r) const;
  /// Vertices of degree other than 2 (genuine critical points).
  int critical_count() const;
  bool connected() const;

  friend bool operator==(const ReebGraph&, const ReebGraph&) = default;
};

/// Convenience constructor: vertex i has rank ranks[i], no segment ends.
ReebGraph make_reeb(std::vector<int> ranks, std::vector<ReebEdge> edges);

/// First Betti number |E| - |V| + 1. Throws ValidationError if disconnected.
int betti(const ReebGraph& r);

/// Every invariant violation; empty means valid.
std::vector<std::string> validate_reeb(const ReebGraph& r);

/// Canonical key up to order-preserving isomorphism (vertex i of the key is
/// the i-th smallest rank). Throws ValidationError on invalid graphs.
std::string reeb_canonical(const ReebGraph& r);
/// Same, but vertices are written with their actual ranks.
std::string reeb_key_with_ranks(const ReebGraph& r);

/// All valid graphs on the given vertices (ranks, segment flags) with the
/// given Betti number. Vertex ids follow rank order. Sorted by key.
std::vector<ReebGraph> enumerate_reeb_graphs(const std::vector<int>& ranks,
                                             const std::vector<bool>& segment_end, int betti_number);

/// Graphs with one minimum, one maximum and 2*genus saddles. genus <= 3.
std::vector<ReebGraph> enumerate_optimal_reeb(int genus);

}  // namespace morsecat
