#pragma once

// Distinguishing graphs: a Reeb graph decorated with the monotone images of
// 1-stratum arcs, the grouping of those arcs into circles, and at every
// saddle a split of the incident paths into two ordered subsets.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morsecat/reeb.hpp"

namespace morsecat {

/// Edge ids of the Reeb graph, traversed upward; start/end are vertex ids.
struct MonotonePath {
  std::vector<int> edges;
  int start = -1;
  int end = -1;
  friend bool operator==(const MonotonePath&, const MonotonePath&) = default;
};

/// glued: the circle lies inside the piece (both preimage circles belong to
/// it). boundary: the circle is a boundary component of the piece.
enum class CircleKind { glued, boundary };

/// One 1-stratum circle as seen from a piece.
///
/// A glued circle with two critical points holds its two arcs (a pairing
/// block). A boundary circle with two critical points collapses to one
/// segment and holds a single unpaired path. Circles with four critical
/// points hold their four arcs in either kind.
struct Circle {
  CircleKind kind = CircleKind::glued;
  int tag = -1;  ///< owning double curve (block index) or -1 when free-standing
  std::vector<int> paths;
  friend bool operator==(const Circle&, const Circle&) = default;
};

struct PathDecoration {
  std::vector<MonotonePath> paths;
  std::vector<Circle> circles;

  /// Path pairs of glued two-point circles.
  std::vector<std::array<int, 2>> pairing() const;
  /// Paths of collapsed boundary segments.
  std::vector<int> unpaired() const;
  /// Circle index holding the path, or -1.
  int circle_of(int path) const;
  friend bool operator==(const PathDecoration&, const PathDecoration&) = default;
};

/// Ordered subset of paths attached to one of the two co-directional edges
/// at a saddle.
struct SaddleSlot {
  int edge = -1;
  std::vector<int> paths;
  friend bool operator==(const SaddleSlot&, const SaddleSlot&) = default;
};

struct SaddleOrder {
  int vertex = -1;
  std::array<SaddleSlot, 2> slots;
  friend bool operator==(const SaddleOrder&, const SaddleOrder&) = default;
};

struct SaddlePartition {
  std::vector<SaddleOrder> saddles;
  const SaddleOrder* at(int vertex) const;
  friend bool operator==(const SaddlePartition&, const SaddlePartition&) = default;
};

struct DistinguishingGraph {
  ReebGraph reeb;
  PathDecoration decoration;
  SaddlePartition partitions;
  friend bool operator==(const DistinguishingGraph&, const DistinguishingGraph&) = default;
};

// --- local structure at saddles -------------------------------------------------

/// The two co-directional edges at a saddle (out-edges of a split, in-edges of
/// a merge), ascending by id.
std::array<int, 2> double_side_edges(const ReebGraph& r, int saddle);
/// Vertex ids visited by the path, start to end.
std::vector<int> path_vertices(const ReebGraph& r, const MonotonePath& p);
bool path_touches(const ReebGraph& r, const MonotonePath& p, int v);
/// The double-side edge the path uses at the saddle, or nullopt when the path
/// meets the saddle only through the single-side edge (its slot is free data).
std::optional<int> forced_slot_edge(const ReebGraph& r, const MonotonePath& p, int saddle);
/// Pairs of paths from one circle that both have `v` as an endpoint.
std::vector<std::array<int, 2>> circle_neighbours_at(const ReebGraph& r, const PathDecoration& d, int v);
/// Cyclic order of the paths crossing `edge`, as induced at saddle endpoint v.
std::vector<int> induced_cyclic_order(const DistinguishingGraph& dg, int edge, int v);

/// All monotone paths between two vertices.
std::vector<MonotonePath> monotone_paths(const ReebGraph& r, int from, int to);

/// Builds the saddle partition: forced slots from the path edges, free slots
/// from `free_choice[{path, vertex}]` (an edge id). Slot sequences list paths
/// by ascending index.
SaddlePartition derive_partition(const ReebGraph& r, const PathDecoration& d,
                                 const std::map<std::array<int, 2>, int>& free_choice = {});

// --- operations ---------------------------------------------------------------------

/// Every violated invariant; empty means valid.
std::vector<std::string> validate_distinguishing(const DistinguishingGraph& dg);

/// True when each critical point on the cyclic sequence of ranks is a strict
/// local minimum or maximum (the arcs alternate up and down).
bool cycle_order_valid(std::span<const int> ranks);
/// Rotates to start at the smallest rank, reflected so the second entry is the
/// smaller neighbour.
std::vector<int> normalize_cycle(std::span<const int> ranks);

/// Ranks of the critical points met along a circle, normalized. Throws
/// LookupError for an unknown circle and ValidationError when the circle's
/// arcs do not close up into an alternating cycle.
std::vector<int> stratum_cycle(const DistinguishingGraph& dg, int circle);

struct DgKeyOptions {
  bool actual_ranks = false;     ///< write ranks instead of rank positions
  bool allow_mirror = true;      ///< minimize over surface orientation as well
  bool mirror = false;           ///< fixed orientation when allow_mirror is false
  std::vector<int> tag_map;      ///< renames circle tags; empty means identity
};

/// Canonical key; equal keys iff dg_equivalent. Throws ValidationError.
std::string dg_canonical(const DistinguishingGraph& dg);
std::string dg_key(const DistinguishingGraph& dg, const DgKeyOptions& opt);

/// Explicit isomorphism search, independent of the canonical key.
bool dg_equivalent(const DistinguishingGraph& a, const DistinguishingGraph& b);
bool dg_equivalent(const DistinguishingGraph& a, const DistinguishingGraph& b, const DgKeyOptions& opt);

/// Copy with vertex ids, edge ids, path indices and circle order permuted.
/// Structure is unchanged.
DistinguishingGraph relabel(const DistinguishingGraph& dg, const std::vector<int>& vertex_perm,
                            const std::vector<int>& edge_perm, const std::vector<int>& path_perm,
                            const std::vector<int>& circle_perm);

}  // namespace morsecat
