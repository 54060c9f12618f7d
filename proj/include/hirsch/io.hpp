#pragma once

// Text formats.
//
//   POLY 1               HPOLY 1
//   dim <d>              dim <d>
//   vertices <n>         inequalities <m>
//   <n rows of d>        <m rows of d+1, a.x <= b with b last>
//   [labels              [incidence
//    <n lines>]           <m lines of tight vertex indices>]
//
// Numbers are exact rationals ("3", "-7/2"). Blank lines and lines
// starting with '#' are ignored. Malformed input throws ParseError.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hirsch/polytope.hpp"

namespace hirsch {

VPolytope read_poly(std::istream& in);
VPolytope read_poly_file(const std::filesystem::path& path);
void write_poly(std::ostream& out, const VPolytope& p);

struct HPolyFile {
  HPolytope hpoly;
  std::optional<std::vector<std::vector<std::size_t>>> incidence;  ///< tight vertices per inequality
};

HPolyFile read_hpoly(std::istream& in);
HPolyFile read_hpoly_file(const std::filesystem::path& path);
void write_hpoly(std::ostream& out, const HPolytope& h);
/// Also writes the incidence block from the hull's incidence matrix.
void write_hpoly(std::ostream& out, const HullResult& hull);

/// Replaces the file at `path` with `text`; throws on I/O failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace hirsch
