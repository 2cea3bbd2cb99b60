#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "morsecat/catalog.hpp"
#include "morsecat/errors.hpp"

namespace morsecat {

bool CrossValidationReport::ok() const {
  return std::all_of(strata.begin(), strata.end(), [](const StratumComparison& s) { return s.ok(); });
}

std::string CrossValidationReport::text() const {
  std::ostringstream os;
  os << "cross-check with " << budget << " critical points\n";
  for (const auto& s : strata) {
    os << "  " << s.label << ": constructed " << s.constructed << ", enumerated " << s.enumerated << " ... "
       << (s.ok() ? "ok" : "MISMATCH") << '\n';
    for (const auto& k : s.only_constructed) os << "    only constructed: " << k << '\n';
    for (const auto& k : s.only_enumerated) os << "    only enumerated: " << k << '\n';
  }
  os << "  one double curve: " << single_curve_constructed << '/' << single_curve_enumerated << '\n';
  os << "  two double curves: " << two_curve_constructed << '/' << two_curve_enumerated << '\n';
  for (const auto& n : notes) os << "  note: " << n << '\n';
  return os.str();
}

CrossValidationReport compare_catalogs(const std::vector<CatalogEntry>& constructed,
                                       const std::vector<CatalogEntry>& enumerated, int budget) {
  CrossValidationReport report;
  report.budget = budget;
  std::map<std::string, StratumComparison> by_tree;
  std::map<std::string, std::set<std::string>> keys_c, keys_e;
  std::map<std::string, int> curves;
  auto note = [&](const CatalogEntry& e, std::map<std::string, std::set<std::string>>& keys) {
    std::string tree = colored_tree_canonical(e.structure.stratification);
    auto& cmp = by_tree[tree];
    cmp.tree_key = tree;
    cmp.label = stratification_label(e.structure.stratification);
    curves[tree] = static_cast<int>(e.structure.stratification.blocks.size());
    keys[tree].insert(e.key);
  };
  for (const auto& e : constructed) note(e, keys_c);
  for (const auto& e : enumerated) note(e, keys_e);

  for (auto& [tree, cmp] : by_tree) {
    const auto& c = keys_c[tree];
    const auto& e = keys_e[tree];
    cmp.constructed = static_cast<int>(c.size());
    cmp.enumerated = static_cast<int>(e.size());
    std::set_difference(c.begin(), c.end(), e.begin(), e.end(), std::back_inserter(cmp.only_constructed));
    std::set_difference(e.begin(), e.end(), c.begin(), c.end(), std::back_inserter(cmp.only_enumerated));
    if (curves[tree] == 1) {
      report.single_curve_constructed += cmp.constructed;
      report.single_curve_enumerated += cmp.enumerated;
    } else if (curves[tree] == 2) {
      report.two_curve_constructed += cmp.constructed;
      report.two_curve_enumerated += cmp.enumerated;
    }
    report.strata.push_back(cmp);
  }
  return report;
}

CrossValidationReport cross_validate(int budget, const EnumerationOptions& opt) {
  if (budget != 4) throw RangeError("the constructive catalogs cover exactly 4 critical points");
  auto constructed = build_single_curve_catalog();
  for (auto& e : build_two_curve_catalog()) constructed.push_back(std::move(e));

  std::vector<CatalogEntry> enumerated;
  std::vector<StratumComparison> empty;
  for (const auto& ct : all_stratifications()) {
    auto found = enumerate_structures(ct, budget, opt);
    if (found.empty()) {
      StratumComparison cmp;
      cmp.label = stratification_label(ct);
      cmp.tree_key = colored_tree_canonical(ct);
      empty.push_back(cmp);
    }
    for (auto& e : found) enumerated.push_back(std::move(e));
  }

  auto report = compare_catalogs(constructed, enumerated, budget);
  for (auto& cmp : empty)
    if (std::none_of(report.strata.begin(), report.strata.end(),
                     [&](const StratumComparison& s) { return s.tree_key == cmp.tree_key; }))
      report.strata.push_back(cmp);
  std::sort(report.strata.begin(), report.strata.end(),
            [](const StratumComparison& a, const StratumComparison& b) { return a.label < b.label; });

  for (const auto& s : report.strata)
    if (s.label == "T2-B")
      report.notes.push_back(
          "T2-B has " + std::to_string(s.enumerated) +
          " structures; when the blue pair runs through one tube, the red segment in the same tube and in the other "
          "tube are inequivalent, so a count of 7 merges two of them");
  return report;
}

}  // namespace morsecat
