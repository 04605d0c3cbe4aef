#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chiralpol {

/// Rectangular numeric result set with a `#`-prefixed metadata header.
class ScanTable {
 public:
  ScanTable() = default;
  explicit ScanTable(std::vector<std::string> column_names);

  const std::vector<std::string>& column_names() const noexcept { return columns_; }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const noexcept { return metadata_; }

  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t column_index(std::string_view name) const;
  double at(std::size_t row, std::string_view column) const;
  std::vector<double> column(std::string_view name) const;

  void add_row(std::vector<double> row);
  void add_metadata(std::string key, std::string value);

  /// Metadata as "# key = value" lines, then the header and one line per row
  /// with every number printed as %.17g.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

std::string format_number(double value);

}  // namespace chiralpol
