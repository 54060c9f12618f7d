#include "hirsch/torus_plot.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "hirsch/rational.hpp"

namespace hirsch {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

struct Angles {
  double x = 0;
  double y = 0;
};

// Shortest signed difference between two angles, in [-pi, pi).
double wrap_delta(double from, double to) {
  double d = std::fmod(to - from, kTwoPi);
  if (d < -std::numbers::pi) d += kTwoPi;
  if (d >= std::numbers::pi) d -= kTwoPi;
  return d;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string torus_svg(const std::vector<TorusLayer>& layers, int size) {
  if (size < 16) throw std::invalid_argument("torus_svg: size must be at least 16 pixels");
  const double s = size;
  const auto px = [&](double x) { return x / kTwoPi * s; };
  const auto py = [&](double y) { return s - y / kTwoPi * s; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
      << "<defs><clipPath id=\"torus\"><rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size
      << "\"/></clipPath></defs>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size
      << "\" fill=\"white\" stroke=\"black\"/>\n";

  for (const auto& layer : layers) {
    std::map<std::string, Angles> points;
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& line : layer.lines) {
      std::istringstream ss(line);
      std::string kind, a, b;
      ss >> kind;
      if (kind == "TORUS") {
        Angles t;
        if (!(ss >> a >> t.x >> t.y)) throw ParseError("torus_svg: bad point line '" + line + "'");
        points[a] = t;
      } else if (kind == "EDGE") {
        if (!(ss >> a >> b)) throw ParseError("torus_svg: bad edge line '" + line + "'");
        edges.emplace_back(a, b);
      } else {
        throw ParseError("torus_svg: unknown line '" + line + "'");
      }
    }

    out << "<g id=\"" << escape(layer.name) << "\" stroke=\"" << escape(layer.color) << "\" fill=\""
        << escape(layer.color) << "\" clip-path=\"url(#torus)\">\n";
    for (const auto& [a, b] : edges) {
      const auto ia = points.find(a), ib = points.find(b);
      if (ia == points.end() || ib == points.end()) throw ParseError("torus_svg: edge names unknown point");
      const Angles p = ia->second, q = ib->second;
      const double dx = wrap_delta(p.x, q.x), dy = wrap_delta(p.y, q.y);
      const auto segment = [&](const Angles& from, double ex, double ey) {
        out << "<line x1=\"" << num(px(from.x)) << "\" y1=\"" << num(py(from.y)) << "\" x2=\""
            << num(px(from.x + ex)) << "\" y2=\"" << num(py(from.y + ey)) << "\" stroke-width=\"1\"/>\n";
      };
      const double ex = p.x + dx, ey = p.y + dy;
      segment(p, dx, dy);
      if (ex < 0 || ex >= kTwoPi || ey < 0 || ey >= kTwoPi) segment(q, -dx, -dy);
    }
    for (const auto& [label, t] : points) {
      out << "<circle cx=\"" << num(px(t.x)) << "\" cy=\"" << num(py(t.y)) << "\" r=\"3\"><title>" << escape(label)
          << "</title></circle>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace hirsch
