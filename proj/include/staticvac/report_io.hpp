#pragma once

// CSV and JSON emission shared by the command-line tool.
// CSV: '.' decimal point, LF line endings, 17 significant digits.

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace staticvac::io {

std::string format_double(double x);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  // Cells are written verbatim; use format_double for numbers.
  void add_row(std::vector<std::string> cells);
  void add_row(const std::vector<double>& values);

  std::size_t rows() const { return rows_.size(); }
  void write(std::ostream& os) const;
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Writes the whole buffer in binary mode so line endings are preserved.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace staticvac::io
