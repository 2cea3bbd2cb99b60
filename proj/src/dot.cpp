#include "morsecat/dot.hpp"

#include <algorithm>
#include <sstream>

namespace morsecat {
namespace {

const char* const kCurveColors[] = {"blue", "red", "darkgreen", "orange", "purple", "brown"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

const char* node_shape(const ReebGraph& r, int v) {
  switch (r.degree(v)) {
    case 1: return "circle";
    case 3: return "diamond";
    default: return "square";
  }
}

// Nodes are written in rank order, then edges in id order.
void write_reeb_body(std::ostream& os, const DistinguishingGraph& dg, const std::string& prefix, const std::string& indent) {
  const auto& r = dg.reeb;
  for (int v : r.by_rank())
    os << indent << prefix << 'r' << r.rank[v] << " [label=\"" << r.rank[v] << "\", shape=" << node_shape(r, v) << "];\n";
  for (int e = 0; e < r.edge_count(); ++e) {
    std::string label;
    for (int p = 0; p < static_cast<int>(dg.decoration.paths.size()); ++p) {
      const auto& es = dg.decoration.paths[p].edges;
      if (std::find(es.begin(), es.end(), e) == es.end()) continue;
      label += (label.empty() ? "" : " ") + std::to_string(dg.decoration.circle_of(p)) + "." + std::to_string(p);
    }
    os << indent << prefix << 'r' << r.rank[r.edges[e].source] << " -> " << prefix << 'r' << r.rank[r.edges[e].target];
    if (!label.empty()) os << " [label=" << quoted(label) << "]";
    os << ";\n";
  }
}

}  // namespace

std::string tree_dot(const Tree& t) {
  std::ostringstream os;
  os << "digraph tree {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int v = 0; v < t.vertex_count; ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
  for (const auto& e : t.edges) os << "  v" << e[0] << " -> v" << e[1] << " [dir=none];\n";
  os << "}\n";
  return os.str();
}

std::string colored_tree_dot(const ColoredTree& ct) {
  std::ostringstream os;
  os << "digraph stratification {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int v = 0; v < ct.tree.vertex_count; ++v) {
    auto piece = closure_surface(ct, v);
    os << "  v" << v << " [label=\"" << v << "\\ng=" << piece.genus << " b=" << piece.boundaries << "\"];\n";
  }
  for (int e = 0; e < static_cast<int>(ct.tree.edges.size()); ++e) {
    int b = ct.block_of_edge(e);
    os << "  v" << ct.tree.edges[e][0] << " -> v" << ct.tree.edges[e][1] << " [dir=none, color=" << kCurveColors[b % 6]
       << ", label=\"c" << b << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string reeb_dot(const ReebGraph& r) {
  DistinguishingGraph dg;
  dg.reeb = r;
  return distinguishing_dot(dg);
}

std::string distinguishing_dot(const DistinguishingGraph& dg) {
  std::ostringstream os;
  os << "digraph reeb {\n  rankdir=BT;\n";
  write_reeb_body(os, dg, "", "  ");
  os << "}\n";
  return os.str();
}

std::string structure_dot(const MorseStructure& s, const std::string& title) {
  std::ostringstream os;
  os << "digraph structure {\n  rankdir=BT;\n  label=" << quoted(title) << ";\n";
  for (int v = 0; v < static_cast<int>(s.pieces.size()); ++v) {
    auto piece = closure_surface(s.stratification, v);
    std::string prefix = "v" + std::to_string(v) + "_";
    os << "  subgraph cluster_v" << v << " {\n    label=\"vertex " << v << " (genus " << piece.genus << ", "
       << piece.boundaries << " boundary)\";\n";
    write_reeb_body(os, s.pieces[v], prefix, "    ");
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace morsecat
