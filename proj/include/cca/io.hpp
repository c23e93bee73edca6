#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cca::io {

// 12 significant digits; enough to make regression diffs meaningful without
// noise at machine epsilon.
std::string format_sig(double v);

// Builds a CSV document in memory. Every emitted file has a header row.
class CsvBuilder {
  public:
    explicit CsvBuilder(std::vector<std::string> header);
    void add_row(const std::vector<double>& values);
    void add_row_raw(const std::vector<std::string>& cells);
    const std::string& str() const { return body_; }

  private:
    std::string body_;
    size_t columns_;
};

// Writes via a temporary file in the same directory followed by a rename, so
// a crash never leaves a half-written output behind.
void write_file_atomic(const std::string& path, const std::string& content);

// Single-polyline line chart, fixed 800x500 viewport, linear axes.
std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<std::pair<double, double>>& points);

}  // namespace cca::io
