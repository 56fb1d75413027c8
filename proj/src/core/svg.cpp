#include "core/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kf::svg {

std::string heatmap(const std::vector<std::vector<double>>& values, int cell_px) {
  const std::size_t rows = values.size();
  const std::size_t cols = rows ? values[0].size() : 0;
  double vmax = 0.0;
  for (const auto& row : values)
    for (double v : row) vmax = std::max(vmax, std::fabs(v));
  if (vmax == 0.0) vmax = 1.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * cell_px << "\" height=\""
      << rows * cell_px << "\">\n";
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const double t = std::clamp(values[r][c] / vmax, -1.0, 1.0);
      int red = 255, green = 255, blue = 255;
      if (t > 0.0) {
        green = blue = static_cast<int>(std::lround(255.0 * (1.0 - t)));
      } else if (t < 0.0) {
        red = green = static_cast<int>(std::lround(255.0 * (1.0 + t)));
      }
      // Row 0 at the bottom so y increases upward.
      out << "<rect x=\"" << c * cell_px << "\" y=\"" << (rows - 1 - r) * cell_px << "\" width=\""
          << cell_px << "\" height=\"" << cell_px << "\" fill=\"rgb(" << red << "," << green << ","
          << blue << ")\"/>\n";
    }
  out << "</svg>\n";
  return out.str();
}

}  // namespace kf::svg
