#include "deplm/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <string>
#include <system_error>

#include "deplm/errors.hpp"

namespace deplm {

int CsvTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  fields.push_back(field);
  return fields;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double parse_field(const std::string& field, std::size_t line_no) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw MalformedInput("line " + std::to_string(line_no) + ": field '" + field +
                         "' is not a number");
  }
  return value;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw MalformedInput("empty input: a header row is required");
  }

  CsvTable table;
  table.header = split_fields(strip_cr(line));
  if (table.header.size() == 1 && table.header.front().empty()) {
    throw MalformedInput("empty header row");
  }
  table.columns.resize(table.header.size());

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != table.header.size()) {
      throw MalformedInput("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(table.header.size()) + " fields, got " +
                           std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
      table.columns[i].push_back(parse_field(fields[i], line_no));
    }
  }
  if (table.rows() == 0) {
    throw MalformedInput("no data rows");
  }
  return table;
}

CsvTable read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw MalformedInput("cannot open '" + path.string() + "'");
  }
  return read_csv(in);
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path dir =
      path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  std::random_device rd;
  const std::filesystem::path tmp =
      dir / (path.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error("cannot create temporary file '" + tmp.string() + "'");
    }
    out << content;
    out.flush();
    if (!out) {
      std::error_code ignore;
      std::filesystem::remove(tmp, ignore);
      throw Error("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignore;
    std::filesystem::remove(tmp, ignore);
    throw Error("failed renaming to '" + path.string() + "': " + ec.message());
  }
}

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc{}) return "nan";
  return std::string(buffer, ptr);
}

}  // namespace deplm
