#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace deplm {

// Strict numeric CSV: comma separator, mandatory header row, decimal point.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
  // Index of a named column, -1 when absent.
  int column_index(const std::string& name) const;
};

// Throws MalformedInput on ragged rows, non-numeric fields, or empty input.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::filesystem::path& path);

// Writes to a temporary file in the same directory, then renames, so a
// failed run never leaves a partial file behind.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

// Shortest representation that round-trips exactly.
std::string format_double(double value);

}  // namespace deplm
