#include "floorlat/output.hpp"

#include <nlohmann/json.hpp>

#include "floorlat/rational.hpp"

namespace floorlat {

namespace {

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_number(v);
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw PreconditionError("unknown format '" + std::string(name) + "', expected csv or json");
}

std::string format_number(double value) { return nlohmann::json(value).dump(); }

std::string to_csv(const OutputRecord& record) {
  std::string out;
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    if (i) out += ',';
    out += record.columns[i];
  }
  out += '\n';
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const OutputRecord& record) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = record.schema_version;
  doc["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record.inputs) doc["inputs"][key] = value;
  doc["columns"] = record.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : record.rows) {
    auto line = nlohmann::ordered_json::array();
    for (const auto& cell : row) {
      std::visit([&](const auto& v) { line.push_back(v); }, cell);
    }
    rows.push_back(std::move(line));
  }
  doc["rows"] = std::move(rows);
  return doc.dump() + "\n";
}

std::string render(const OutputRecord& record, OutputFormat format) {
  return format == OutputFormat::csv ? to_csv(record) : to_json(record);
}

}  // namespace floorlat
