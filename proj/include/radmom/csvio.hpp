#pragma once

#include <map>
#include <string>
#include <vector>

namespace radmom {

// CSV with a '# key=value' header block, then a column-name row, then data.
// Numbers are written with enough digits to round-trip exactly.
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> header; // ordered key=value
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data; // one vector per column

  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, double value);
  std::string get(const std::string& key) const; // "" if absent
};

std::string format_full(double v);

void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

struct SvgSeries {
  std::string label;
  std::string color;
  std::vector<double> values;
  bool dashed = false;
};

// Minimal polyline plot: axes, curves, legend labels.
void write_svg_plot(const std::string& path, const std::vector<double>& x,
                    const std::vector<SvgSeries>& series);

} // namespace radmom
