#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace fockdarwin::cli {

// Comma-separated rows after a '#' comment line and a header. Numbers are
// printed with %.17g so reruns are byte-identical.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::string& comment, std::initializer_list<const char*> columns);

  CsvWriter& operator<<(double v);
  CsvWriter& operator<<(long long v);
  CsvWriter& operator<<(int v) { return *this << static_cast<long long>(v); }
  CsvWriter& operator<<(const std::string& v);
  void end_row();

  std::size_t rows() const noexcept { return rows_; }

 private:
  void sep();

  std::ostream& os_;
  std::size_t columns_;
  std::size_t field_ = 0;
  std::size_t rows_ = 0;
};

std::string format_number(double v);

}  // namespace fockdarwin::cli
