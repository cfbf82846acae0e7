#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qutrit {

/// Numeric table with `# key = value` metadata lines, written as
/// comma-separated text with 17 significant digits.
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_meta(std::string key, std::string value) { metadata.emplace_back(std::move(key), std::move(value)); }
  /// Metadata value for key, or empty.
  std::string meta(const std::string& key) const;
  /// Index of a named column; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;

  std::string to_string() const;
};

/// Writes the table to path, or to standard output when path is "-".
/// Throws IoError if the file cannot be written.
void write_csv(const CsvTable& table, const std::string& path);

/// Parses text produced by CsvTable::to_string.
CsvTable parse_csv(const std::string& text);

}  // namespace qutrit
