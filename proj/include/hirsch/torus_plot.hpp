#pragma once

// SVG pictures of normal maps on the flat torus.

#include <string>
#include <vector>

namespace hirsch {

/// One map to draw: the "TORUS <label> <x> <y>" and "EDGE <a> <b>" lines
/// produced by torus_plot_data, and a stroke color.
struct TorusLayer {
  std::string name;
  std::string color;
  std::vector<std::string> lines;
};

/// Square SVG 1.1 document, `size` pixels wide, with the angle square
/// [0, 2 pi)^2 mapped linearly onto it (latitude growing upward). Each edge
/// takes its shorter way around the torus; one that leaves the square is
/// drawn twice, once from each end, clipped at the border.
/// Throws ParseError on malformed lines or edges naming unknown labels.
std::string torus_svg(const std::vector<TorusLayer>& layers, int size);

}  // namespace hirsch
