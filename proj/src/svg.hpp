#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace thinness::svg {

// Doubled-integer world coordinates; one drawing unit is 20px, so one stored unit is 10px.
class Canvas {
 public:
  Canvas(int xmin, int xmax, int ymin, int ymax) : xmin_(xmin - 2), xmax_(xmax + 2), ymin_(ymin - 2), ymax_(ymax + 2) {}

  int xmin() const { return xmin_; }
  int xmax() const { return xmax_; }
  int ymin() const { return ymin_; }
  int ymax() const { return ymax_; }

  void rect(int x1, int x2, int y1, int y2, const std::string& stroke, const std::string& label) {
    body_ << "  <rect x=\"" << px(x1) << "\" y=\"" << py(y2) << "\" width=\"" << (x2 - x1) * kScale
          << "\" height=\"" << (y2 - y1) * kScale << "\" fill=\"" << stroke << "\" fill-opacity=\"0.08\" stroke=\""
          << stroke << "\" stroke-width=\"1.5\"><title>" << label << "</title></rect>\n";
  }

  void polyline(const std::vector<std::pair<int, int>>& pts, const std::string& stroke, const std::string& label) {
    body_ << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) body_ << (i ? " " : "") << px(pts[i].first) << ',' << py(pts[i].second);
    body_ << "\"><title>" << label << "</title></polyline>\n";
  }

  void dashed_line(int xa, int ya, int xb, int yb, const std::string& stroke) {
    body_ << "  <line x1=\"" << px(xa) << "\" y1=\"" << py(ya) << "\" x2=\"" << px(xb) << "\" y2=\"" << py(yb)
          << "\" stroke=\"" << stroke << "\" stroke-dasharray=\"6,4\"/>\n";
  }

  void text(int x, int y, const std::string& s, const std::string& fill) {
    body_ << "  <text x=\"" << px(x) + 2 << "\" y=\"" << py(y) - 2 << "\" font-size=\"10\" fill=\"" << fill << "\">" << s
          << "</text>\n";
  }

  // Line y = x + d clipped to the canvas.
  void diagonal(int d, const std::string& stroke) {
    const int xa = std::max(xmin_, ymin_ - d), xb = std::min(xmax_, ymax_ - d);
    if (xa < xb) dashed_line(xa, xa + d, xb, xb + d, stroke);
  }

  std::string str() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (xmax_ - xmin_) * kScale << "\" height=\""
        << (ymax_ - ymin_) * kScale << "\" viewBox=\"0 0 " << (xmax_ - xmin_) * kScale << ' ' << (ymax_ - ymin_) * kScale
        << "\">\n  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  static constexpr int kScale = 10;
  int px(int x) const { return (x - xmin_) * kScale; }
  int py(int y) const { return (ymax_ - y) * kScale; }
  int xmin_, xmax_, ymin_, ymax_;
  std::ostringstream body_;
};

inline std::string class_color(int cls) {
  static const char* palette[] = {"#555555", "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  return palette[cls >= 0 && cls < 6 ? cls : 0];
}

}  // namespace thinness::svg
