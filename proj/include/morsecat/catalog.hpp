#pragma once

// Morse structures with a fixed number of critical points on an immersed
// sphere: a colored dual tree plus one distinguishing graph per 2-stratum
// closure. Two catalogs are produced, one by explicit case construction and
// one by exhaustive generate-and-filter search, and compared key for key.

#include <array>
#include <random>
#include <string>
#include <vector>

#include "morsecat/distinguish.hpp"
#include "morsecat/strata.hpp"

namespace morsecat {

/// Where a critical point sits: on a double curve (block index) or inside the
/// 2-stratum of a tree vertex. Exactly one field is set.
struct PointLocation {
  int curve = -1;
  int vertex = -1;
  friend bool operator==(const PointLocation&, const PointLocation&) = default;
};

/// The circles representing one double curve in each piece it bounds.
struct Gluing {
  int block = -1;
  std::vector<std::array<int, 2>> sides;  ///< (tree vertex, circle index in that piece)
  friend bool operator==(const Gluing&, const Gluing&) = default;
};

struct MorseStructure {
  ColoredTree stratification;
  std::vector<PointLocation> points;        ///< indexed by critical value rank
  std::vector<DistinguishingGraph> pieces;  ///< indexed by tree vertex
  std::vector<Gluing> gluings;              ///< indexed by block

  int budget() const { return static_cast<int>(points.size()); }
  friend bool operator==(const MorseStructure&, const MorseStructure&) = default;
};

struct CatalogEntry {
  MorseStructure structure;
  std::string key;
  std::string case_label;
};

// --- structures ---------------------------------------------------------------------

std::vector<std::string> validate_structure(const MorseStructure& s);
/// Recomputes the gluing table from the circle tags of the pieces.
void attach_gluings(MorseStructure& s);
/// Relabels the stratification into its canonical form.
MorseStructure to_canonical_labeling(const MorseStructure& s);

/// Canonical key; equal iff structure_equivalent. Throws ValidationError.
std::string structure_canonical(const MorseStructure& s);
/// Explicit search for a color-preserving tree isomorphism with matching
/// pieces under one common surface orientation.
bool structure_equivalent(const MorseStructure& a, const MorseStructure& b);
/// Random relabeling of tree vertices, Reeb vertices, edges, paths, circles.
MorseStructure randomly_relabeled(const MorseStructure& s, std::mt19937& rng);

/// Normalized cyclic order of ranks along a double curve.
std::vector<int> curve_cycle(const MorseStructure& s, int block);

// --- constructive catalogs ------------------------------------------------------------

/// The connected double-curve case: 7 structures with two points on the curve
/// and 6 with all four on it.
std::vector<CatalogEntry> build_single_curve_catalog();
/// The two double-curve case: 8 structures on T2-B and 3 on T3-B.
std::vector<CatalogEntry> build_two_curve_catalog();

// --- exhaustive search ------------------------------------------------------------------

struct EnumerationStats {
  long cycle_candidates = 0;  ///< cyclic orders tried on curves with four or more points
  long cycle_accepted = 0;
  std::vector<std::vector<int>> accepted_cycles;  ///< normalized, relative ranks, deduplicated
  long piece_candidates = 0;
  long structures_generated = 0;
};

struct EnumerationOptions {
  int threads = 1;
};

/// Generate-and-filter over point distributions, rank placements, per-piece
/// Reeb graphs and decorations; deduplicated by structure_canonical and
/// sorted by key. Reeb vertices are exactly the critical points of a piece.
std::vector<CatalogEntry> enumerate_structures(const ColoredTree& ct, int budget,
                                               const EnumerationOptions& opt = {},
                                               EnumerationStats* stats = nullptr);

// --- cross validation ---------------------------------------------------------------------

struct StratumComparison {
  std::string label;
  std::string tree_key;
  int constructed = 0;
  int enumerated = 0;
  std::vector<std::string> only_constructed;
  std::vector<std::string> only_enumerated;
  bool ok() const { return only_constructed.empty() && only_enumerated.empty(); }
};

struct CrossValidationReport {
  int budget = 4;
  std::vector<StratumComparison> strata;
  std::vector<std::string> notes;
  int single_curve_constructed = 0, single_curve_enumerated = 0;
  int two_curve_constructed = 0, two_curve_enumerated = 0;
  bool ok() const;
  std::string text() const;
};

/// Compares constructed entries against enumerated entries per stratification.
CrossValidationReport compare_catalogs(const std::vector<CatalogEntry>& constructed,
                                       const std::vector<CatalogEntry>& enumerated, int budget);
/// Both constructive catalogs against enumerate_structures on every
/// stratification with two or four tree edges. budget must be 4.
CrossValidationReport cross_validate(int budget, const EnumerationOptions& opt = {});

}  // namespace morsecat
