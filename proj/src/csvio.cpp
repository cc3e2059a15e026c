#include "radmom/csvio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "radmom/errors.hpp"

namespace radmom {

void CsvTable::set(const std::string& key, const std::string& value) {
  for (auto& kv : header)
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  header.emplace_back(key, value);
}

void CsvTable::set(const std::string& key, double value) { set(key, format_full(value)); }

std::string CsvTable::get(const std::string& key) const {
  for (const auto& kv : header)
    if (kv.first == key) return kv.second;
  return {};
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  for (const auto& [k, v] : table.header) out << "# " << k << "=" << v << "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "\n");
  const std::size_t rows = table.data.empty() ? 0 : table.data.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < table.data.size(); ++c)
      out << format_full(table.data[c][r]) << (c + 1 < table.data.size() ? "," : "\n");
  }
  if (!out) throw io_error("write failed: " + path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open for reading: " + path);
  CsvTable table;
  std::string line;
  bool have_columns = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto eq = line.find('=');
      if (eq != std::string::npos) {
        std::string key = line.substr(1, eq - 1);
        key.erase(0, key.find_first_not_of(' '));
        key.erase(key.find_last_not_of(' ') + 1);
        table.header.emplace_back(key, line.substr(eq + 1));
      }
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    if (!have_columns) {
      while (std::getline(ss, cell, ',')) table.columns.push_back(cell);
      table.data.resize(table.columns.size());
      have_columns = true;
      continue;
    }
    std::size_t c = 0;
    while (std::getline(ss, cell, ',') && c < table.data.size())
      table.data[c++].push_back(std::strtod(cell.c_str(), nullptr));
  }
  return table;
}

void write_svg_plot(const std::string& path, const std::vector<double>& x,
                    const std::vector<SvgSeries>& series) {
  if (x.size() < 2) throw std::invalid_argument("svg plot: need at least 2 points");
  const double width = 800, height = 500, ml = 60, mr = 20, mt = 20, mb = 40;
  double ymin = 0.0, ymax = 0.0;
  for (const auto& s : series)
    for (const double v : s.values) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  if (ymax == ymin) ymax = ymin + 1.0;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;
  const double xmin = x.front(), xmax = x.back();
  const auto sx = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * (width - ml - mr); };
  const auto sy = [&](double v) {
    return height - mb - (v - ymin) / (ymax - ymin) * (height - mt - mb);
  };

  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
      << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
      << height - mb << "\" stroke=\"black\"/>\n";
  if (ymin < 0.0 && ymax > 0.0)
    out << "<line x1=\"" << ml << "\" y1=\"" << sy(0.0) << "\" x2=\"" << width - mr
        << "\" y2=\"" << sy(0.0) << "\" stroke=\"#cccccc\"/>\n";
  // curves
  std::size_t li = 0;
  for (const auto& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\"";
    if (s.dashed) out << " stroke-dasharray=\"6,4\"";
    out << " points=\"";
    for (std::size_t i = 0; i < x.size() && i < s.values.size(); ++i)
      out << sx(x[i]) << "," << sy(s.values[i]) << " ";
    out << "\"/>\n";
    out << "<text x=\"" << width - mr - 120 << "\" y=\"" << mt + 20 + 18 * double(li)
        << "\" fill=\"" << s.color << "\">" << s.label << "</text>\n";
    ++li;
  }
  // axis extremes
  out << "<text x=\"" << ml << "\" y=\"" << height - mb + 18 << "\">" << xmin << "</text>\n";
  out << "<text x=\"" << width - mr - 30 << "\" y=\"" << height - mb + 18 << "\">" << xmax
      << "</text>\n";
  out << "<text x=\"4\" y=\"" << sy(ymax - pad) << "\">" << ymax - pad << "</text>\n";
  out << "</svg>\n";
  if (!out) throw io_error("write failed: " + path);
}

} // namespace radmom
