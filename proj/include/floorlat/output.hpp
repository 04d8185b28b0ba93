#pragma once

// Tabular command output rendered as CSV or JSON.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace floorlat {

using Cell = std::variant<std::int64_t, double, std::string>;

struct OutputRecord {
  std::string schema_version = "1";
  /// Effective parameters, in the order they were recorded.
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(std::string_view name);

/// Header row plus one line per row, comma separated, LF endings.
std::string to_csv(const OutputRecord& record);

/// {"schema_version", "inputs", "columns", "rows"} on a single line.
std::string to_json(const OutputRecord& record);

std::string render(const OutputRecord& record, OutputFormat format);

/// Shortest round-trip text for a double; shared by both renderers so a
/// value reads the same in either format.
std::string format_number(double value);

}  // namespace floorlat
