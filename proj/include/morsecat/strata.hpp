#pragma once

// Dual trees of sphere stratifications, their edge pairings (double curves),
// closure surfaces of 2-strata, and critical-point lower bounds.

#include <array>
#include <string>
#include <vector>

namespace morsecat {

/// Undirected tree on vertices 0..vertex_count-1. Edges are stored with
/// endpoints ordered (first < second).
struct Tree {
  int vertex_count = 1;
  std::vector<std::array<int, 2>> edges;

  int degree(int v) const;
  friend bool operator==(const Tree&, const Tree&) = default;
};

/// Builds a tree and checks the invariants; throws ValidationError.
Tree make_tree(int vertex_count, std::vector<std::array<int, 2>> edges);
void validate_tree(const Tree& t);

/// A tree whose edges are partitioned into 2-element blocks. Each block is one
/// double curve of the immersed image; its two edges are the two preimage
/// circles. Blocks hold edge indices.
struct ColoredTree {
  Tree tree;
  std::vector<std::array<int, 2>> blocks;

  /// Block index containing the edge.
  int block_of_edge(int edge) const;
  /// Number of edges of `block` incident to `v` (0, 1 or 2).
  int incidence(int block, int v) const;
  friend bool operator==(const ColoredTree&, const ColoredTree&) = default;
};

void validate_colored_tree(const ColoredTree& ct);

/// Closure of the image of the 2-stratum at a tree vertex.
struct SurfacePiece {
  int vertex = 0;
  int genus = 0;
  int boundaries = 0;
  friend bool operator==(const SurfacePiece&, const SurfacePiece&) = default;
};

/// Critical points per double curve plus interior critical points per 2-stratum.
struct PointBudget {
  std::vector<int> per_curve;
  std::vector<int> per_vertex_interior;

  int total() const;
  friend bool operator==(const PointBudget&, const PointBudget&) = default;
  friend auto operator<=>(const PointBudget&, const PointBudget&) = default;
};

// --- trees -----------------------------------------------------------------

std::string tree_canonical(const Tree& t);
/// The tree relabeled so that its encoding is the canonical one.
Tree canonical_tree(const Tree& t);
/// All vertex permutations p (p[old] = new) with p(t) == t.
std::vector<std::vector<int>> tree_automorphisms(const Tree& t);
/// One canonical tree per isomorphism class, sorted by key. 1 <= n_edges <= 8.
std::vector<Tree> enumerate_trees(int n_edges);

// --- pairings ----------------------------------------------------------------

/// Pairings of t's edges, one per orbit of the automorphism group of t.
std::vector<ColoredTree> enumerate_pairings(const Tree& t);

std::string colored_tree_canonical(const ColoredTree& ct);
/// Relabeled copy with canonical encoding, and the vertex maps achieving it.
struct CanonicalColoring {
  ColoredTree form;
  std::vector<std::vector<int>> maps;  ///< map[old vertex] = canonical vertex
};
CanonicalColoring canonical_coloring(const ColoredTree& ct);
/// Applies a vertex relabeling; blocks are re-indexed and sorted.
ColoredTree relabel(const ColoredTree& ct, const std::vector<int>& vertex_map);
/// Block index map induced by a vertex map from `from` onto `to`.
std::vector<int> induced_block_map(const ColoredTree& from, const ColoredTree& to,
                                   const std::vector<int>& vertex_map);

/// Short human name: "S" for the single-curve tree, "T1", "T2-A", "T2-B",
/// "T3-A", "T3-B", "T3-C" for four-edge trees, otherwise the canonical key.
std::string stratification_label(const ColoredTree& ct);

// --- surfaces and bounds -------------------------------------------------------

SurfacePiece closure_surface(const ColoredTree& ct, int v);

/// Smallest total of a PointBudget where every curve carries an even number
/// >= 2 of points and every closed piece of genus g sees >= 2 + 2g points.
int min_critical_points(const ColoredTree& ct);

/// Colored trees with 2 or 4 edges whose lower bound does not exceed budget,
/// sorted by canonical key.
std::vector<ColoredTree> feasible_stratifications(int budget);
/// Every 2- and 4-edge stratification, sorted by canonical key.
std::vector<ColoredTree> all_stratifications();

/// All PointBudgets with total exactly `budget` satisfying the lower-bound
/// constraints. Empty when ct is infeasible.
std::vector<PointBudget> point_distributions(const ColoredTree& ct, int budget);

/// True when the budget meets the per-curve and closed-piece constraints.
bool satisfies_constraints(const ColoredTree& ct, const PointBudget& b);

}  // namespace morsecat
