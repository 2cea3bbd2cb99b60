#pragma once

// Graphviz DOT text for trees, Reeb graphs and whole structures. Output is a
// pure function of the input, with the function value increasing upward.

#include <string>

#include "morsecat/catalog.hpp"

namespace morsecat {

std::string tree_dot(const Tree& t);
/// Edges are colored and labeled by double curve.
std::string colored_tree_dot(const ColoredTree& ct);
std::string reeb_dot(const ReebGraph& r);
/// Reeb edges carry the paths (circle.path) running along them.
std::string distinguishing_dot(const DistinguishingGraph& dg);
/// One cluster per 2-stratum closure.
std::string structure_dot(const MorseStructure& s, const std::string& title);

}  // namespace morsecat
