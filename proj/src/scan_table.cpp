#include "chiralpol/scan_table.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace chiralpol {

ScanTable::ScanTable(std::vector<std::string> column_names) : columns_(std::move(column_names)) {}

std::size_t ScanTable::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i] == name) return i;
  throw std::out_of_range("ScanTable: no column '" + std::string(name) + "'");
}

double ScanTable::at(std::size_t row, std::string_view column) const {
  return rows_.at(row).at(column_index(column));
}

std::vector<double> ScanTable::column(std::string_view name) const {
  const std::size_t idx = column_index(name);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r[idx]);
  return out;
}

void ScanTable::add_row(std::vector<double> row) {
  if (row.size() != columns_.size())
    throw std::invalid_argument("ScanTable: row has " + std::to_string(row.size()) + " values, expected " +
                                std::to_string(columns_.size()));
  rows_.push_back(std::move(row));
}

void ScanTable::add_metadata(std::string key, std::string value) {
  metadata_.emplace_back(std::move(key), std::move(value));
}

void ScanTable::write_csv(std::ostream& out) const {
  for (const auto& [key, value] : metadata_) out << "# " << key << " = " << value << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
  out << '\n';
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << format_number(r[i]);
    out << '\n';
  }
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace chiralpol
