#include "greenosher/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <vector>

#include "greenosher/greenosher.hpp"

namespace greenosher {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kSamples = 512;

std::vector<Vec2> boundary(const SupportBody& body, double factor) {
  std::vector<Vec2> pts(kSamples);
  for (std::size_t j = 0; j < kSamples; ++j) {
    Vec2 p = boundary_point(body, kTwoPi * j / kSamples);
    pts[j] = {factor * p.x, factor * p.y};
  }
  return pts;
}

struct Mapper {
  double scale, ox, oy;
  double x(double v) const { return ox + scale * v; }
  double y(double v) const { return oy - scale * v; }  // flip: SVG y is down
};

void emit_path(std::ostream& out, const std::vector<Vec2>& pts,
               const Mapper& map, const char* style) {
  out << "  <path d=\"";
  for (std::size_t j = 0; j < pts.size(); ++j) {
    out << (j == 0 ? 'M' : 'L') << map.x(pts[j].x) << ' ' << map.y(pts[j].y);
  }
  out << "Z\" " << style << "/>\n";
}

}  // namespace

void write_plot_svg(std::ostream& out, const SupportBody& k,
                    const SupportBody& l, double r, double R, bool rho_inset) {
  std::vector<std::vector<Vec2>> curves = {
      boundary(k, 1.0), boundary(l, 1.0), boundary(l, r), boundary(l, R)};

  double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
  for (const auto& curve : curves) {
    for (const Vec2& p : curve) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
  }
  double span = std::max(hi_x - lo_x, hi_y - lo_y);
  if (span <= 0.0) span = 1.0;
  const double size = 640.0, margin = 40.0;
  Mapper map{(size - 2.0 * margin) / span,
             margin - (size - 2.0 * margin) / span * lo_x,
             size - margin + (size - 2.0 * margin) / span * lo_y};

  out << std::setprecision(10);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
      << size << ' ' << size << "\">\n";
  emit_path(out, curves[2], map,
            "fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" "
            "stroke-dasharray=\"6 4\"");
  emit_path(out, curves[3], map,
            "fill=\"none\" stroke=\"#888888\" stroke-width=\"1\" "
            "stroke-dasharray=\"6 4\"");
  emit_path(out, curves[0], map,
            "fill=\"none\" stroke=\"#1f6fb5\" stroke-width=\"2\"");
  emit_path(out, curves[1], map,
            "fill=\"none\" stroke=\"#2f9e44\" stroke-width=\"2\"");
  out << "  <circle cx=\"" << map.x(0.0) << "\" cy=\"" << map.y(0.0)
      << "\" r=\"3\" fill=\"#000000\"/>\n";

  if (rho_inset) {
    GridProfile rho = relative_curvature_radius(k, l, kSamples);
    double max_rho = *std::max_element(rho.values.begin(), rho.values.end());
    const double box = size / 4.0, pad = 8.0;
    double inset_scale = (box / 2.0 - pad) / max_rho;
    double cx = size - box / 2.0 - pad, cy = box / 2.0 + pad;
    out << "  <rect x=\"" << (size - box - pad) << "\" y=\"" << pad
        << "\" width=\"" << box << "\" height=\"" << box
        << "\" fill=\"#ffffff\" stroke=\"#cccccc\"/>\n";
    out << "  <path d=\"";
    for (std::size_t j = 0; j < rho.values.size(); ++j) {
      double theta = kTwoPi * j / rho.values.size();
      double x = cx + inset_scale * rho.values[j] * std::cos(theta);
      double y = cy - inset_scale * rho.values[j] * std::sin(theta);
      out << (j == 0 ? 'M' : 'L') << x << ' ' << y;
    }
    out << "Z\" fill=\"none\" stroke=\"#c2255c\" stroke-width=\"1.5\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace greenosher
