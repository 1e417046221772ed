#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qalt/diagram.hpp"
#include "qalt/poly.hpp"
#include "qalt/verdict.hpp"

namespace qalt {

struct CatalogEntry {
  std::string name;
  std::string pd;  // source text as given
  PDDiagram diagram;
  std::optional<long> expected_det;
  std::optional<long> expected_deg_q;
  int line = 0;  // source line (CSV) or 1-based array index (JSON)
};

// CSV with header "name,pd,expected_det,expected_deg_q" (empty cells allowed,
// '#' lines ignored) or a JSON array of objects with those keys; in JSON
// "pd" may also be an array of 4-tuples. Errors name the offending line.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);
std::vector<CatalogEntry> parse_catalog_csv(const std::string& text);
std::vector<CatalogEntry> parse_catalog_json(const std::string& text);

enum class RowStatus { Ok, InputError, ResourceError };

struct ReportRow {
  std::string name;
  std::optional<BigInt> computed_det;
  std::optional<int> computed_deg_q;
  std::optional<Rational> breadth;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> mismatches;
  RowStatus status = RowStatus::Ok;
  std::string error;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct VerifyOptions {
  std::size_t max_crossings = 14;
  std::size_t max_jones_crossings = 16;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct TableReport {
  std::vector<ReportRow> rows;
  int mismatched = 0;
  int input_errors = 0;
  int resource_errors = 0;
  bool passed() const { return mismatched == 0 && input_errors == 0 && resource_errors == 0; }
};

// Recomputes det, deg Q and breadth for every entry (in parallel, output in
// input order) and compares against the expectations.
TableReport verify_table(const std::vector<CatalogEntry>& entries, const VerifyOptions& options = {});
// Same computation; the breadth column is informational only.
TableReport report_obstructions(const std::vector<CatalogEntry>& entries,
                                const VerifyOptions& options = {});

std::string render_table(const TableReport& report);
std::string report_to_json(const TableReport& report);
TableReport report_from_json(const std::string& text);

}  // namespace qalt
