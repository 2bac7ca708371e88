#include "tct/experiments/csv.hpp"

#include "tct/errors.hpp"

#include <cstdio>

#ifndef TCT_VERSION_STRING
#define TCT_VERSION_STRING "0.0.0"
#endif

namespace tct {

CsvWriter::CsvWriter(const std::string& path, const std::string& provenance) : path_(path) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw_error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  file_ = f;
  line(provenance);
}

CsvWriter::~CsvWriter() {
  if (file_) std::fclose(static_cast<std::FILE*>(file_));
}

void CsvWriter::line(const std::string& text) {
  std::FILE* f = static_cast<std::FILE*>(file_);
  if (std::fwrite(text.data(), 1, text.size(), f) != text.size() || std::fputc('\n', f) == EOF)
    throw_error(ErrorCode::Io, "write failed for '" + path_ + "'");
}

void CsvWriter::header(const std::vector<std::string>& columns) { row(columns); }

void CsvWriter::row(const std::vector<std::string>& cells) {
  std::string text;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text += ',';
    text += cells[i];
  }
  line(text);
}

std::string CsvWriter::num(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", value);
  return buf;
}

std::string CsvWriter::num(long long value) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%lld", value);
  return buf;
}

std::string provenance_line(const std::string& verb, const std::string& config_hash,
                            unsigned long long seed) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " seed=%llu", seed);
  return "# tct " TCT_VERSION_STRING " verb=" + verb + " config=" + config_hash + buf;
}

} // namespace tct
