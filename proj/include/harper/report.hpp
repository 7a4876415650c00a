// Machine-readable command reports: a flat set of named scalars plus at most
// one table, rendered either as JSON (single object, lexicographically
// sorted keys, table under "rows") or as CSV (the table with a header row,
// or key,value lines for scalar-only reports).  All floating-point values
// are rendered with 17 significant digits so fixed inputs give byte-stable
// files; files are written atomically (temp file + rename).
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace harper {

// One serializable cell: a 17-digit number, an integer, a string, or null
// (meaning "not computed"; empty in CSV).
class ReportValue {
 public:
  static ReportValue number(double v);
  static ReportValue integer(std::int64_t v);
  static ReportValue text(std::string v);
  static ReportValue null();

  // JSON token: bare numeral, quoted escaped string, or null.  Non-finite
  // numbers have no JSON numeral and are emitted as quoted "inf"/"-inf"/
  // "nan" markers.
  std::string json() const;
  // CSV field, RFC-4180-quoted only when the content requires it.
  std::string csv() const;

 private:
  enum class Kind { number, integer, text, null_value };
  Kind kind_ = Kind::null_value;
  double num_ = 0.0;
  std::int64_t int_ = 0;
  std::string text_;
};

struct Report {
  std::map<std::string, ReportValue> scalars;
  std::vector<std::string> columns;            // empty -> no table
  std::vector<std::vector<ReportValue>> rows;  // each sized like columns
};

// Rejects a scalar named "rows" (reserved) and ragged table rows.
std::string render_json(const Report& report);
std::string render_csv(const Report& report);

// Writes content to path via a sibling temp file and an atomic rename;
// throws std::runtime_error on an unwritable path.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace harper
