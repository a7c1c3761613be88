#include "gdensity/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace gdensity {

namespace {

double top_of(const RatioTrace& t) {
  double top = 1;
  for (const auto& r : t.ratios) top = std::max(top, static_cast<double>(r));
  return top;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string ascii_plot(const RatioTrace& t, int width, int height) {
  if (width < 8 || height < 4) throw DomainError("plot too small");
  const std::size_t n = t.ratios.size();
  std::vector<std::string> rows(height, std::string(width, ' '));
  const double top = top_of(t);
  for (std::size_t k = 0; k < n; ++k) {
    const int col = n == 1 ? 0 : static_cast<int>(k * (width - 1) / (n - 1));
    const double r = static_cast<double>(t.ratios[k]);
    int row = static_cast<int>((1 - r / top) * (height - 1) + 0.5);
    row = std::clamp(row, 0, height - 1);
    rows[row][col] = '*';
  }
  std::ostringstream os;
  for (int i = 0; i < height; ++i) {
    const double label = top * (1 - static_cast<double>(i) / (height - 1));
    os << (i == 0 || i == height - 1 || i == (height - 1) / 2 ? fixed(label, 3) : std::string(5, ' ')) << " |"
       << rows[i] << '\n';
  }
  os << std::string(6, ' ') << '+' << std::string(width, '-') << '\n';
  os << std::string(7, ' ') << "k = 0" << std::string(std::max(1, width - 10 - static_cast<int>(std::to_string(n).size())), ' ')
     << "k = " << (n == 0 ? 0 : n - 1) << '\n';
  return os.str();
}

std::string svg_plot(const RatioTrace& t, const std::string& title, int width, int height) {
  const int margin = 48;
  const double top = top_of(t);
  const std::size_t n = t.ratios.size();
  const double w = width - 2.0 * margin, h = height - 2.0 * margin;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
     << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << margin << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" << escape(title) << "</text>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << margin + h << "\" x2=\"" << margin + w << "\" y2=\"" << margin + h
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << margin + h
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"4\" y=\"" << margin + 4 << "\" font-family=\"sans-serif\" font-size=\"11\">" << fixed(top, 2)
     << "</text>\n";
  os << "<text x=\"4\" y=\"" << margin + h + 4 << "\" font-family=\"sans-serif\" font-size=\"11\">0</text>\n";
  os << "<text x=\"" << margin + w - 40 << "\" y=\"" << height - 12
     << "\" font-family=\"sans-serif\" font-size=\"11\">k</text>\n";
  os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k < n; ++k) {
    const double x = margin + (n == 1 ? 0 : w * static_cast<double>(k) / (n - 1));
    const double y = margin + h * (1 - static_cast<double>(t.ratios[k]) / top);
    os << (k ? " " : "") << fixed(x, 2) << ',' << fixed(y, 2);
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace gdensity
