#include "morsecat/document.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>

#include "morsecat/errors.hpp"

namespace morsecat {

using nlohmann::json;

namespace {

void only_fields(const json& j, std::initializer_list<const char*> names, const std::string& what) {
  if (!j.is_object()) throw ValidationError(what + ": expected an object");
  std::set<std::string> allowed(names.begin(), names.end());
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ValidationError(what + ": unknown field '" + k + "'");
  for (const char* n : names)
    if (!j.contains(n)) throw ValidationError(what + ": missing field '" + n + "'");
}

json pair_list(const std::vector<std::array<int, 2>>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back({x[0], x[1]});
  return out;
}

std::vector<std::array<int, 2>> pairs_from(const json& j) {
  if (!j.is_array()) throw ValidationError("expected a list of pairs");
  std::vector<std::array<int, 2>> out;
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != 2) throw ValidationError("expected a pair of integers");
    out.push_back({x[0].get<int>(), x[1].get<int>()});
  }
  return out;
}

json tree_to_json(const ColoredTree& ct) {
  return {{"vertex_count", ct.tree.vertex_count}, {"edges", pair_list(ct.tree.edges)}, {"blocks", pair_list(ct.blocks)}};
}

ColoredTree tree_from_json(const json& j) {
  only_fields(j, {"vertex_count", "edges", "blocks"}, "stratification");
  ColoredTree ct;
  ct.tree.vertex_count = j["vertex_count"].get<int>();
  ct.tree.edges = pairs_from(j["edges"]);
  ct.blocks = pairs_from(j["blocks"]);
  validate_colored_tree(ct);
  return ct;
}

json piece_to_json(const DistinguishingGraph& dg) {
  json edges = json::array(), paths = json::array(), circles = json::array(), saddles = json::array();
  for (const auto& e : dg.reeb.edges) edges.push_back({e.source, e.target});
  for (const auto& p : dg.decoration.paths) paths.push_back({{"edges", p.edges}, {"start", p.start}, {"end", p.end}});
  for (const auto& c : dg.decoration.circles)
    circles.push_back({{"kind", c.kind == CircleKind::glued ? "glued" : "boundary"}, {"tag", c.tag}, {"paths", c.paths}});
  for (const auto& o : dg.partitions.saddles) {
    json slots = json::array();
    for (const auto& s : o.slots) slots.push_back({{"edge", s.edge}, {"paths", s.paths}});
    saddles.push_back({{"vertex", o.vertex}, {"slots", slots}});
  }
  std::vector<int> segment(dg.reeb.segment_end.begin(), dg.reeb.segment_end.end());
  return {{"ranks", dg.reeb.rank}, {"segment_end", segment}, {"edges", edges},
          {"paths", paths},        {"circles", circles},     {"saddles", saddles}};
}

DistinguishingGraph piece_from_json(const json& j) {
  only_fields(j, {"ranks", "segment_end", "edges", "paths", "circles", "saddles"}, "piece");
  DistinguishingGraph dg;
  dg.reeb.rank = j["ranks"].get<std::vector<int>>();
  for (int s : j["segment_end"].get<std::vector<int>>()) dg.reeb.segment_end.push_back(s != 0);
  for (const auto& e : pairs_from(j["edges"])) dg.reeb.edges.push_back({e[0], e[1]});
  for (const auto& p : j["paths"]) {
    only_fields(p, {"edges", "start", "end"}, "path");
    dg.decoration.paths.push_back({p["edges"].get<std::vector<int>>(), p["start"].get<int>(), p["end"].get<int>()});
  }
  for (const auto& c : j["circles"]) {
    only_fields(c, {"kind", "tag", "paths"}, "circle");
    std::string kind = c["kind"].get<std::string>();
    if (kind != "glued" && kind != "boundary") throw ValidationError("circle: unknown kind '" + kind + "'");
    dg.decoration.circles.push_back(
        {kind == "glued" ? CircleKind::glued : CircleKind::boundary, c["tag"].get<int>(), c["paths"].get<std::vector<int>>()});
  }
  for (const auto& o : j["saddles"]) {
    only_fields(o, {"vertex", "slots"}, "saddle");
    if (!o["slots"].is_array() || o["slots"].size() != 2) throw ValidationError("saddle: expected two slots");
    SaddleOrder order;
    order.vertex = o["vertex"].get<int>();
    for (int k = 0; k < 2; ++k) {
      const auto& s = o["slots"][k];
      only_fields(s, {"edge", "paths"}, "slot");
      order.slots[k] = {s["edge"].get<int>(), s["paths"].get<std::vector<int>>()};
    }
    dg.partitions.saddles.push_back(std::move(order));
  }
  return dg;
}

}  // namespace

json structure_to_json(const MorseStructure& s) {
  json points = json::array(), pieces = json::array(), gluings = json::array();
  for (const auto& p : s.points) points.push_back(p.curve >= 0 ? json{{"curve", p.curve}} : json{{"vertex", p.vertex}});
  for (const auto& dg : s.pieces) pieces.push_back(piece_to_json(dg));
  for (const auto& g : s.gluings) gluings.push_back({{"block", g.block}, {"sides", pair_list(g.sides)}});
  return {{"stratification", tree_to_json(s.stratification)}, {"points", points}, {"pieces", pieces}, {"gluings", gluings}};
}

MorseStructure structure_from_json(const json& j) {
  only_fields(j, {"stratification", "points", "pieces", "gluings"}, "structure");
  MorseStructure s;
  s.stratification = tree_from_json(j["stratification"]);
  for (const auto& p : j["points"]) {
    if (!p.is_object() || p.size() != 1 || !(p.contains("curve") || p.contains("vertex")))
      throw ValidationError("point: expected exactly one of 'curve' or 'vertex'");
    s.points.push_back(p.contains("curve") ? PointLocation{p["curve"].get<int>(), -1} : PointLocation{-1, p["vertex"].get<int>()});
  }
  for (const auto& dg : j["pieces"]) s.pieces.push_back(piece_from_json(dg));
  for (const auto& g : j["gluings"]) {
    only_fields(g, {"block", "sides"}, "gluing");
    s.gluings.push_back({g["block"].get<int>(), pairs_from(g["sides"])});
  }
  return s;
}

std::vector<StratificationRecord> stratification_records(int double_curves, int budget) {
  std::vector<StratificationRecord> out;
  for (const auto& ct : all_stratifications()) {
    if (static_cast<int>(ct.blocks.size()) != double_curves) continue;
    StratificationRecord rec;
    rec.tree_key = colored_tree_canonical(ct);
    rec.label = stratification_label(ct);
    rec.stratification = ct;
    for (int v = 0; v < ct.tree.vertex_count; ++v) rec.pieces.push_back(closure_surface(ct, v));
    rec.min_critical_points = min_critical_points(ct);
    rec.feasible = rec.min_critical_points <= budget;
    out.push_back(std::move(rec));
  }
  return out;
}

CatalogDocument make_document(int double_curves, int budget, bool verified, const std::vector<CatalogEntry>& entries) {
  CatalogDocument doc;
  doc.budget = budget;
  doc.double_curves = double_curves;
  doc.verified = verified;
  doc.stratifications = stratification_records(double_curves, budget);
  for (const auto& e : entries) doc.entries.push_back({e.case_label, e.key, e.structure});
  return doc;
}

json document_to_json(const CatalogDocument& doc) {
  json strata = json::array(), entries = json::array();
  for (const auto& r : doc.stratifications) {
    json pieces = json::array();
    for (const auto& p : r.pieces) pieces.push_back({{"vertex", p.vertex}, {"genus", p.genus}, {"boundaries", p.boundaries}});
    strata.push_back({{"tree_key", r.tree_key},
                      {"label", r.label},
                      {"pairing", tree_to_json(r.stratification)},
                      {"pieces", pieces},
                      {"min_critical_points", r.min_critical_points},
                      {"feasible", r.feasible}});
  }
  for (const auto& e : doc.entries)
    entries.push_back({{"case_label", e.case_label}, {"key", e.key}, {"structure", structure_to_json(e.structure)}});
  return {{"version", doc.version},
          {"budget", doc.budget},
          {"double_curves", doc.double_curves},
          {"verified", doc.verified},
          {"stratifications", strata},
          {"entries", entries}};
}

CatalogDocument document_from_json(const json& j) {
  try {
    only_fields(j, {"version", "budget", "double_curves", "verified", "stratifications", "entries"}, "document");
    CatalogDocument doc;
    doc.version = j["version"].get<std::string>();
    if (doc.version != kSchemaVersion) throw ValidationError("document: unsupported version '" + doc.version + "'");
    doc.budget = j["budget"].get<int>();
    doc.double_curves = j["double_curves"].get<int>();
    doc.verified = j["verified"].get<bool>();
    for (const auto& r : j["stratifications"]) {
      only_fields(r, {"tree_key", "label", "pairing", "pieces", "min_critical_points", "feasible"}, "stratification record");
      StratificationRecord rec;
      rec.tree_key = r["tree_key"].get<std::string>();
      rec.label = r["label"].get<std::string>();
      rec.stratification = tree_from_json(r["pairing"]);
      for (const auto& p : r["pieces"]) {
        only_fields(p, {"vertex", "genus", "boundaries"}, "surface piece");
        rec.pieces.push_back({p["vertex"].get<int>(), p["genus"].get<int>(), p["boundaries"].get<int>()});
      }
      rec.min_critical_points = r["min_critical_points"].get<int>();
      rec.feasible = r["feasible"].get<bool>();
      doc.stratifications.push_back(std::move(rec));
    }
    for (const auto& e : j["entries"]) {
      only_fields(e, {"case_label", "key", "structure"}, "entry");
      doc.entries.push_back({e["case_label"].get<std::string>(), e["key"].get<std::string>(), structure_from_json(e["structure"])});
    }
    return doc;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("document: ") + e.what());
  }
}

std::string serialize_document(const CatalogDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

CatalogDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

}  // namespace morsecat
