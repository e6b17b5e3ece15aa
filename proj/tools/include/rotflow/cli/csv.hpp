#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>

namespace rotflow::cli {

/// Shortest round-trip decimal text with '.' as separator, independent of the locale.
std::string format_double(double v);

/// Comma-separated writer with '\n' line endings.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string_view> header);

  CsvWriter& cell(double v);
  CsvWriter& cell(long long v);
  CsvWriter& cell(std::size_t v) { return cell(static_cast<long long>(v)); }
  CsvWriter& cell(int v) { return cell(static_cast<long long>(v)); }
  CsvWriter& cell(bool v);
  CsvWriter& cell(std::string_view v);
  void end_row();

  std::size_t rows() const { return rows_; }

 private:
  void separator();

  std::ofstream out_;
  std::size_t columns_ = 0;
  std::size_t in_row_ = 0;
  std::size_t rows_ = 0;
};

}  // namespace rotflow::cli
