#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace fvlab::svg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string loglog_scatter(const std::vector<Series>& series, const std::string& title) {
  const double W = 640, H = 420, M = 50;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  std::vector<std::vector<std::pair<double, double>>> pts(series.size());
  for (std::size_t s = 0; s < series.size(); ++s) {
    for (std::size_t i = 0; i < series[s].x.size() && i < series[s].y.size(); ++i) {
      double x = series[s].x[i], y = std::fabs(series[s].y[i]);
      if (!(x > 0) || !(y > 0) || !std::isfinite(x) || !std::isfinite(y)) continue;
      double lx = std::log10(x), ly = std::log10(y);
      pts[s].push_back({lx, ly});
      x0 = std::min(x0, lx);
      x1 = std::max(x1, lx);
      y0 = std::min(y0, ly);
      y1 = std::max(y1, ly);
    }
  }
  if (!(x0 < x1)) x1 = x0 + 1;
  if (!(y0 < y1)) y1 = y0 + 1;
  auto px = [&](double lx) { return M + (lx - x0) / (x1 - x0) * (W - 2 * M); };
  auto py = [&](double ly) { return H - M - (ly - y0) / (y1 - y0) * (H - 2 * M); };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" + escape(title) +
         "</text>\n";
  out += "<rect x=\"50\" y=\"50\" width=\"540\" height=\"320\" fill=\"none\" stroke=\"black\"/>\n";
  out += "<text x=\"50\" y=\"390\" font-size=\"11\">" + num(x0) + "</text>\n";
  out += "<text x=\"590\" y=\"390\" font-size=\"11\" text-anchor=\"end\">" + num(x1) +
         "  log10 eps</text>\n";
  out += "<text x=\"4\" y=\"370\" font-size=\"11\">" + num(y0) + "</text>\n";
  out += "<text x=\"4\" y=\"58\" font-size=\"11\">" + num(y1) + "</text>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    for (auto [lx, ly] : pts[s]) {
      out += "<circle cx=\"" + num(px(lx)) + "\" cy=\"" + num(py(ly)) + "\" r=\"3\" fill=\"" +
             series[s].color + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

std::string tile_grid(const std::vector<Cell>& cells, const std::vector<std::string>& col_labels,
                      const std::vector<std::string>& row_labels, const std::string& title) {
  const int S = 56, L = 90, T = 60;
  int w = L + S * static_cast<int>(col_labels.size()) + 20;
  int h = T + S * static_cast<int>(row_labels.size()) + 20;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
                    "\" height=\"" + std::to_string(h) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"10\" y=\"20\" font-size=\"14\">" + escape(title) + "</text>\n";
  for (std::size_t c = 0; c < col_labels.size(); ++c) {
    out += "<text x=\"" + std::to_string(L + S * static_cast<int>(c) + S / 2) +
           "\" y=\"50\" font-size=\"10\" text-anchor=\"middle\">" + escape(col_labels[c]) +
           "</text>\n";
  }
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    out += "<text x=\"10\" y=\"" + std::to_string(T + S * static_cast<int>(r) + S / 2) +
           "\" font-size=\"10\">" + escape(row_labels[r]) + "</text>\n";
  }
  for (const auto& c : cells) {
    int x = L + S * c.col, y = T + S * c.row;
    out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
           std::to_string(S - 2) + "\" height=\"" + std::to_string(S - 2) + "\" fill=\"" +
           c.color + "\"/>\n";
    out += "<text x=\"" + std::to_string(x + S / 2) + "\" y=\"" + std::to_string(y + S / 2) +
           "\" font-size=\"9\" text-anchor=\"middle\">" + escape(c.label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace fvlab::svg
