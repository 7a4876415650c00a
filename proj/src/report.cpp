#include "harper/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "harper/common.hpp"

namespace harper {
namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string nonfinite_name(double v) {
  if (std::isnan(v)) return "nan";
  return v > 0.0 ? "inf" : "-inf";
}

void validate(const Report& report) {
  if (report.scalars.count("rows"))
    throw std::invalid_argument("report: scalar key 'rows' is reserved");
  for (const auto& row : report.rows)
    if (row.size() != report.columns.size())
      throw std::invalid_argument("report: ragged table row");
  if (!report.rows.empty() && report.columns.empty())
    throw std::invalid_argument("report: table rows without columns");
}

}  // namespace

ReportValue ReportValue::number(double v) {
  ReportValue out;
  out.kind_ = Kind::number;
  out.num_ = v;
  return out;
}

ReportValue ReportValue::integer(std::int64_t v) {
  ReportValue out;
  out.kind_ = Kind::integer;
  out.int_ = v;
  return out;
}

ReportValue ReportValue::text(std::string v) {
  ReportValue out;
  out.kind_ = Kind::text;
  out.text_ = std::move(v);
  return out;
}

ReportValue ReportValue::null() { return {}; }

std::string ReportValue::json() const {
  switch (kind_) {
    case Kind::number:
      if (!std::isfinite(num_)) return "\"" + nonfinite_name(num_) + "\"";
      return format_float17(num_);
    case Kind::integer: return std::to_string(int_);
    case Kind::text: return "\"" + json_escape(text_) + "\"";
    case Kind::null_value: break;
  }
  return "null";
}

std::string ReportValue::csv() const {
  switch (kind_) {
    case Kind::number:
      if (!std::isfinite(num_)) return nonfinite_name(num_);
      return format_float17(num_);
    case Kind::integer: return std::to_string(int_);
    case Kind::text: return csv_quote(text_);
    case Kind::null_value: break;
  }
  return "";
}

std::string render_json(const Report& report) {
  validate(report);
  std::map<std::string, std::string> pieces;
  for (const auto& [key, value] : report.scalars) pieces[key] = value.json();
  if (!report.columns.empty()) {
    std::string rows = "[";
    for (std::size_t r = 0; r < report.rows.size(); ++r) {
      std::map<std::string, std::string> cells;
      for (std::size_t c = 0; c < report.columns.size(); ++c)
        cells[report.columns[c]] = report.rows[r][c].json();
      std::string obj = "{";
      bool first = true;
      for (const auto& [key, value] : cells) {
        if (!first) obj += ",";
        first = false;
        obj += "\"" + json_escape(key) + "\":" + value;
      }
      obj += "}";
      rows += (r == 0 ? "" : ",") + obj;
    }
    rows += "]";
    pieces["rows"] = rows;
  }

  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : pieces) {
    if (!first) out += ",";
    first = false;
    out += "\"" + json_escape(key) + "\":" + value;
  }
  out += "}\n";
  return out;
}

std::string render_csv(const Report& report) {
  validate(report);
  std::string out;
  if (!report.columns.empty()) {
    for (std::size_t c = 0; c < report.columns.size(); ++c)
      out += (c ? "," : "") + csv_quote(report.columns[c]);
    out += '\n';
    for (const auto& row : report.rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out += (c ? "," : "") + row[c].csv();
      out += '\n';
    }
    return out;
  }
  out = "key,value\n";
  for (const auto& [key, value] : report.scalars)
    out += csv_quote(key) + "," + value.csv() + "\n";
  return out;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  const std::filesystem::path temp = target.string() + ".tmp";
  {
    std::ofstream stream(temp, std::ios::binary | std::ios::trunc);
    if (!stream) throw std::runtime_error("unwritable path: " + path);
    stream.write(content.data(),
                 static_cast<std::streamsize>(content.size()));
    stream.flush();
    if (!stream) {
      std::error_code ec;
      std::filesystem::remove(temp, ec);
      throw std::runtime_error("write failed: " + path);
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::error_code ec2;
    std::filesystem::remove(temp, ec2);
    throw std::runtime_error("rename failed: " + path + " (" + ec.message() +
                             ")");
  }
}

}  // namespace harper
