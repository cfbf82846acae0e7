#include "qutrit/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "qutrit/errors.hpp"
#include "qutrit/scenario.hpp"

namespace qutrit {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  return out;
}

double parse_cell(const std::string& cell) {
  if (cell == "inf") return INFINITY;
  if (cell == "-inf") return -INFINITY;
  if (cell == "nan") return NAN;
  return std::stod(cell);
}

}  // namespace

std::string CsvTable::meta(const std::string& key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return v;
  return {};
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw std::out_of_range("no column named " + name);
}

std::string CsvTable::to_string() const {
  std::string out;
  for (const auto& [k, v] : metadata) out += "# " + k + " = " + v + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += format_double(row[i]);
    }
    out += "\n";
  }
  return out;
}

void write_csv(const CsvTable& table, const std::string& path) {
  const std::string text = table.to_string();
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing " + path);
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::stringstream ss(text);
  std::string line;
  bool header = false;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = line.substr(1);
      const auto eq = body.find('=');
      if (eq == std::string::npos) continue;
      table.add_meta(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
    } else if (!header) {
      table.columns = split(line);
      header = true;
    } else {
      std::vector<double> row;
      for (const std::string& cell : split(line)) row.push_back(parse_cell(cell));
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace qutrit
