#pragma once

// Normal cones, Minkowski sums of the two bases of a prismatoid, and the
// checks that go with them.

#include <optional>
#include <utility>
#include <vector>

#include "hirsch/graph.hpp"
#include "hirsch/prismatoid.hpp"
#include "hirsch/report.hpp"

namespace hirsch {

/// Normal cone of a vertex of a full-dimensional polytope. The generators are
/// the canonical normals of the facets through the vertex; the cone itself
/// is cut out by one inequality (w - v).p <= 0 per edge vw.
struct NormalCone {
  std::size_t vertex = 0;
  std::vector<Point> generators;
  std::vector<Inequality> inequalities;  ///< canonical, sorted, deduplicated
};

NormalCone normal_cone(const VPolytope& p, const HullResult& hull, std::size_t vertex);
NormalCone normal_cone(const VPolytope& p, std::size_t vertex);
bool contains_strictly(const NormalCone& c, const Point& dir);
/// Closed containment.
bool contains(const NormalCone& c, const Point& dir);

/// Primitive integer facet normals of a polytope, in facet order.
std::vector<Point> facet_normals(const HullResult& hull);

/// Facet normals of the plus base of the embedded prismatoid (32 of them).
std::vector<Point> gplus_vertices();
std::vector<Point> gminus_vertices();
/// x1^2 + x2^2 = 26 and x3^2 + x4^2 = 5 for every normal of the plus base.
Report torus_membership_check();

struct MinkowskiFacet {
  Face plus;   ///< face of the first summand maximizing the facet normal
  Face minus;  ///< likewise for the second summand
  std::pair<int, int> bidimension() const { return {plus.dim, minus.dim}; }
};

struct MinkowskiSum {
  VPolytope sum;  ///< vertices only
  HullResult hull;
  std::vector<MinkowskiFacet> facets;  ///< parallel to hull facets
  std::vector<std::pair<std::size_t, std::size_t>> summands;  ///< vertex i = plus[first] + minus[second]
};

MinkowskiSum minkowski_sum(const VPolytope& plus, const VPolytope& minus);

/// True when every facet's vertex set is exactly the set of sums of
/// vertices of its two decomposition faces.
bool decomposition_is_exact(const MinkowskiSum& m, const VPolytope& plus, const VPolytope& minus);

/// The two bases as full-dimensional polytopes in one dimension less, using
/// the coordinates other than `dropped`.
struct ProjectedBases {
  VPolytope plus;
  VPolytope minus;
  std::size_t dropped = 0;
  std::vector<std::size_t> plus_index;   ///< vertex of the prismatoid for each plus vertex
  std::vector<std::size_t> minus_index;
};

ProjectedBases projected_bases(const Prismatoid& q);

/// Vertices of the slice of q at the height where the plus base has weight
/// lambda1, computed from the edges that cross it. Sorted.
VPolytope intermediate_slice(const Prismatoid& q, const Scalar& lambda1);
/// lambda1 Q+ + (1 - lambda1) Q- as a vertex set in the ambient space, sorted.
VPolytope weighted_base_sum(const Prismatoid& q, const Scalar& lambda1);

struct PairDStep {
  bool property = false;
  int min_facets = 0;  ///< shortest facet sequence, counting both ends
};

/// Dual-graph search over the sum of two (d-1)-polytopes, from facets whose
/// plus part is a facet of the first to facets whose minus part is a facet
/// of the second.
PairDStep pair_dstep_property(const VPolytope& plus, const VPolytope& minus, int d);
PairDStep pair_dstep_property(const MinkowskiSum& m, int plus_dim, int minus_dim, int d);

/// dim(F cap Q+) + dim(F cap Q-) = dim F - 1 on every non-base facet.
Report transversality_check(const Prismatoid& q);

/// The sum's dual graph equals the prismatoid's dual graph without its bases,
/// with facets matched by their normals.
Report sum_dual_graph_check(const Prismatoid& q, const MinkowskiSum& m, const ProjectedBases& b);

/// Three parts of the statement on how the two normal maps of the embedded
/// prismatoid sit relative to each other.
Report normal_map_position_check(const VPolytope& q);

/// Every vertex of the polytope lies on 8 facets that meet like the facets
/// of a 3-cube, and on 6 edges each contained in 4 of them.
Report cube_vertex_figure_check(const VPolytope& p);

/// Longitude and latitude on the flat torus, in [0, 2 pi). Floating point,
/// for plotting only.
struct TorusPoint {
  double x = 0;
  double y = 0;
};

TorusPoint torus_project(const Point& p);

/// "TORUS <label> <x> <y>" lines for the vertices of a normal map and
/// "EDGE <a> <b>" lines for its edges. The map of a 4-polytope has one
/// vertex per facet normal and one edge per ridge.
std::vector<std::string> torus_plot_data(const VPolytope& p, const std::string& prefix);

}  // namespace hirsch
