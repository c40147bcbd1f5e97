#include "hvh/svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hvh {

namespace {

struct CsvRow {
  double omega_t;
  bool hybrid;
  double purity;
  double concurrence;
};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<CsvRow> parse_csv(const std::string& text) {
  std::vector<CsvRow> rows;
  std::istringstream is(text);
  std::string line;
  bool header = true;
  int col_purity = -1, col_conc = -1, col_mode = -1, col_t = -1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (header) {
      for (size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == "omega_t") col_t = static_cast<int>(i);
        if (cells[i] == "mode") col_mode = static_cast<int>(i);
        if (cells[i] == "purity") col_purity = static_cast<int>(i);
        if (cells[i] == "concurrence") col_conc = static_cast<int>(i);
      }
      if (col_t < 0 || col_mode < 0 || col_purity < 0 || col_conc < 0)
        throw std::invalid_argument("svg_from_csv: missing expected CSV columns");
      header = false;
      continue;
    }
    CsvRow r;
    r.omega_t = std::stod(cells[static_cast<size_t>(col_t)]);
    r.hybrid = cells[static_cast<size_t>(col_mode)] == "hybrid";
    r.purity = std::stod(cells[static_cast<size_t>(col_purity)]);
    r.concurrence = std::stod(cells[static_cast<size_t>(col_conc)]);
    rows.push_back(r);
  }
  return rows;
}

std::string f2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// One panel: frame, ticks, and the two curves.
void render_panel(std::ostringstream& os, const std::vector<CsvRow>& rows, bool concurrence,
                  double x0, double y0, double w, double h, double t_max,
                  const std::string& ylabel) {
  os << "<rect x='" << f2(x0) << "' y='" << f2(y0) << "' width='" << f2(w) << "' height='"
     << f2(h) << "' fill='none' stroke='black' stroke-width='1'/>\n";
  // y ticks at 0, 0.5, 1
  for (double yt : {0.0, 0.5, 1.0}) {
    const double py = y0 + h * (1.0 - yt);
    os << "<line x1='" << f2(x0 - 4) << "' y1='" << f2(py) << "' x2='" << f2(x0) << "' y2='"
       << f2(py) << "' stroke='black' stroke-width='1'/>\n";
    os << "<text x='" << f2(x0 - 8) << "' y='" << f2(py + 4)
       << "' font-size='12' text-anchor='end'>" << f2(yt) << "</text>\n";
  }
  // x ticks every 2*pi
  const double two_pi = 6.283185307179586;
  for (double xt = 0.0; xt <= t_max + 1e-9; xt += two_pi) {
    const double px = x0 + w * (xt / t_max);
    os << "<line x1='" << f2(px) << "' y1='" << f2(y0 + h) << "' x2='" << f2(px) << "' y2='"
       << f2(y0 + h + 4) << "' stroke='black' stroke-width='1'/>\n";
    os << "<text x='" << f2(px) << "' y='" << f2(y0 + h + 18)
       << "' font-size='12' text-anchor='middle'>" << f2(xt / two_pi) << "</text>\n";
  }
  os << "<text x='" << f2(x0 + w / 2) << "' y='" << f2(y0 + h + 34)
     << "' font-size='13' text-anchor='middle'>omega t / 2pi</text>\n";
  os << "<text x='" << f2(x0 - 44) << "' y='" << f2(y0 + h / 2)
     << "' font-size='13' text-anchor='middle' transform='rotate(-90 " << f2(x0 - 44) << " "
     << f2(y0 + h / 2) << ")'>" << ylabel << "</text>\n";

  for (bool hybrid : {false, true}) {
    std::ostringstream pts;
    bool any = false;
    for (const CsvRow& r : rows) {
      if (r.hybrid != hybrid) continue;
      const double v = concurrence ? r.concurrence : r.purity;
      const double px = x0 + w * (r.omega_t / t_max);
      const double py = y0 + h * (1.0 - std::clamp(v, 0.0, 1.0));
      pts << (any ? " " : "") << f2(px) << ',' << f2(py);
      any = true;
    }
    if (!any) continue;
    os << "<polyline fill='none' stroke='" << (hybrid ? "#c0392b" : "#2c3e50")
       << "' stroke-width='1.5'" << (hybrid ? "" : " stroke-dasharray='6 4'") << " points='"
       << pts.str() << "'/>\n";
  }
}

}  // namespace

std::string svg_from_csv(const std::string& csv_text, const std::string& label) {
  const std::vector<CsvRow> rows = parse_csv(csv_text);
  double t_max = 0.0;
  for (const CsvRow& r : rows) t_max = std::max(t_max, r.omega_t);
  if (t_max <= 0.0) t_max = 1.0;

  const double width = 640, panel_h = 220, margin_l = 70, margin_r = 20, margin_t = 40,
               gap = 60;
  const double plot_w = width - margin_l - margin_r;
  const double height = margin_t + 2 * panel_h + gap + 50;

  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << f2(width) << "' height='"
     << f2(height) << "' viewBox='0 0 " << f2(width) << " " << f2(height) << "'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  os << "<text x='" << f2(width / 2) << "' y='22' font-size='15' text-anchor='middle'>" << label
     << ": quantum (dashed), hybrid (solid)</text>\n";
  render_panel(os, rows, false, margin_l, margin_t, plot_w, panel_h, t_max, "purity");
  render_panel(os, rows, true, margin_l, margin_t + panel_h + gap, plot_w, panel_h, t_max,
               "concurrence");
  os << "</svg>\n";
  return os.str();
}

}  // namespace hvh
