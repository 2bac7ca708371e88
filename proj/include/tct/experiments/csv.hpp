#pragma once

#include <string>
#include <vector>

namespace tct {

// CSV contract: comma separators, dot decimals, %.10e floats, LF endings,
// a '#' provenance comment first, then the header row. Identical inputs
// produce byte-identical files.
class CsvWriter {
public:
  CsvWriter(const std::string& path, const std::string& provenance);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);

  static std::string num(double value);
  static std::string num(long long value);

private:
  void line(const std::string& text);
  void* file_;
  std::string path_;
};

std::string provenance_line(const std::string& verb, const std::string& config_hash,
                            unsigned long long seed);

} // namespace tct
