#include "fockdarwin/cli/csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fockdarwin::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& os, const std::string& comment, std::initializer_list<const char*> columns)
    : os_(os), columns_(columns.size()) {
  os_ << "# " << comment << '\n';
  bool first = true;
  for (const char* c : columns) {
    if (!first) os_ << ',';
    os_ << c;
    first = false;
  }
  os_ << '\n';
}

void CsvWriter::sep() {
  if (field_ >= columns_) throw std::logic_error("CsvWriter: too many fields in row");
  if (field_ > 0) os_ << ',';
  ++field_;
}

CsvWriter& CsvWriter::operator<<(double v) {
  sep();
  os_ << format_number(v);
  return *this;
}

CsvWriter& CsvWriter::operator<<(long long v) {
  sep();
  os_ << v;
  return *this;
}

CsvWriter& CsvWriter::operator<<(const std::string& v) {
  sep();
  os_ << v;
  return *this;
}

void CsvWriter::end_row() {
  if (field_ != columns_) throw std::logic_error("CsvWriter: short row");
  os_ << '\n';
  field_ = 0;
  ++rows_;
}

}  // namespace fockdarwin::cli
