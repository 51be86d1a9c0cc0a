#pragma once

#include <cycres/curves.hpp>
#include <cycres/knots.hpp>
#include <cycres/limits.hpp>

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace cycres::cli {

enum class Format { kJson, kMarkdown, kCsv };

// accepts "json", "md", "csv"
Format parse_format(const std::string& name);

nlohmann::json padic_json(const PadicScalar& x);
nlohmann::json report_json(const LimitReport& rep);
nlohmann::json invariants_json(const IwasawaInvariants& inv);

std::string emit_limit_report(const LimitReport& rep, Format format);
std::string emit_invariants(const IwasawaInvariants& inv, Format format);
std::string emit_homology_tower(const HomologyTower& tower, Format format);
std::string emit_composite_tower(const CompositeTower& tower, Format format);
std::string emit_class_tower(const ClassTower& tower, Format format);
std::string emit_curve_classification(const CurveClassification& cls, Format format);

// Generic table document: labelled columns plus named rows, in the tower
// layout (one column per level, a value row and a residue row).
struct TableDoc {
  std::string id;
  std::string title;
  std::vector<std::string> col_labels;
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  std::vector<std::string> notes;
  bool pass = true;
  std::vector<std::string> diffs;  // human-readable mismatches
};

std::string emit_table(const TableDoc& doc, Format format);

}  // namespace cycres::cli
