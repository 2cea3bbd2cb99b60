#pragma once

// JSON catalog documents. Parsing is strict: unknown fields, missing fields
// and a foreign schema version are all rejected with ValidationError.

#include <string>
#include <vector>

#include "json.hpp"
#include "morsecat/catalog.hpp"

namespace morsecat {

inline constexpr const char* kSchemaVersion = "1.0";

struct StratificationRecord {
  std::string tree_key;
  std::string label;
  ColoredTree stratification;
  std::vector<SurfacePiece> pieces;
  int min_critical_points = 0;
  bool feasible = false;
  friend bool operator==(const StratificationRecord&, const StratificationRecord&) = default;
};

struct DocumentEntry {
  std::string case_label;
  std::string key;
  MorseStructure structure;
  friend bool operator==(const DocumentEntry&, const DocumentEntry&) = default;
};

struct CatalogDocument {
  std::string version = kSchemaVersion;
  int budget = 4;
  int double_curves = 1;
  bool verified = true;  ///< false for budgets the constructive catalogs do not cover
  std::vector<StratificationRecord> stratifications;
  std::vector<DocumentEntry> entries;
  friend bool operator==(const CatalogDocument&, const CatalogDocument&) = default;
};

/// Stratification records for every 2- and 4-edge tree with `double_curves` blocks.
std::vector<StratificationRecord> stratification_records(int double_curves, int budget);
CatalogDocument make_document(int double_curves, int budget, bool verified, const std::vector<CatalogEntry>& entries);

nlohmann::json structure_to_json(const MorseStructure& s);
MorseStructure structure_from_json(const nlohmann::json& j);

nlohmann::json document_to_json(const CatalogDocument& doc);
CatalogDocument document_from_json(const nlohmann::json& j);

std::string serialize_document(const CatalogDocument& doc);
/// Throws ValidationError on malformed text or schema violations.
CatalogDocument parse_document(const std::string& text);

}  // namespace morsecat
