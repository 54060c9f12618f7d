#pragma once

// The 48-vertex, 5-dimensional prismatoid of width six, its symmetry
// groups, facet labels and verification suite.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hirsch/graph.hpp"
#include "hirsch/prismatoid.hpp"
#include "hirsch/report.hpp"

namespace hirsch::santos {

/// Vertices 1+ .. 24+ followed by 1- .. 24-, labeled "1+", ..., "24-".
VPolytope vertices();

/// One row "constant + k5 x5 >= sum of +-coef * x_var" of the facet table.
/// Terms are kept in the order the table lists them; sign patterns refer to
/// that order.
struct FacetFamily {
  std::string letter;  ///< "A", "B", "B'", ..., "L"
  Scalar constant;
  Scalar k5;
  std::vector<std::pair<Scalar, std::size_t>> terms;  ///< (coefficient, 0-based variable)
};

/// The 22 rows, A first and L last.
const std::vector<FacetFamily>& facet_families();

/// Canonical inequality of one family member. `signs` has one entry per
/// term (empty for A and L).
Inequality family_inequality(const FacetFamily& fam, const std::vector<int>& signs);

struct LabeledFacet {
  std::string label;  ///< e.g. "A", "B+-++", "H'++++"
  Inequality ineq;
};

/// All 322 facets, sorted by canonical inequality.
std::vector<LabeledFacet> expected_facets();

/// The letter part of a label ("B'" for "B'+-++").
std::string letter_of(const std::string& label);

/// (x1..x5) -> (x3, x4, x2, x1, -x5); sends vertex i+ to i-.
OrthMap base_swap();
/// (x1..x5) -> (x4, x3, x1, x2, -x5) read literally as the image vector.
OrthMap literal_swap();
/// The sign flips of x1..x4 and the double transposition x1<->x2, x3<->x4.
std::vector<OrthMap> plus_generators();

struct SymmetryGroup {
  std::vector<OrthMap> generators;
  std::vector<OrthMap> elements;  ///< sorted, identity included

  std::size_t order() const { return elements.size(); }
  bool contains(const OrthMap& m) const;
};

/// Closure under composition by breadth-first multiplication.
SymmetryGroup generate_group(const std::vector<OrthMap>& generators);

/// (Sigma, Sigma+).
std::pair<SymmetryGroup, SymmetryGroup> symmetry_groups();

/// perm[i] = index of the image of vertex i, or nullopt if some image is
/// not a vertex.
std::optional<std::vector<std::size_t>> vertex_permutation(const OrthMap& m, const VPolytope& p);
std::optional<std::vector<std::size_t>> facet_permutation(const OrthMap& m, const HullResult& hull);

/// Orbits of the group acting on facets, each sorted, ordered by first element.
/// Throws GeometryError if some element does not permute the facets.
std::vector<std::vector<std::size_t>> facet_orbits(const SymmetryGroup& g, const HullResult& hull);

/// A polytope together with everything the checks need.
struct Analysis {
  VPolytope poly;
  HullResult hull;
  DualGraph dual;
  std::vector<std::string> facet_labels;  ///< "?" where no table row matches
  std::optional<std::size_t> facet_A, facet_L;

  std::optional<std::size_t> facet_by_label(const std::string& label) const;
};

Analysis analyze(const VPolytope& p);

/// Verified prismatoid on the embedded data with bases x5 = 1 and x5 = -1.
Prismatoid santos_prismatoid();

/// Q+ or Q- with the last coordinate dropped (4-dimensional, 24 vertices).
VPolytope base_polytope(const VPolytope& q, bool plus);

/// (dim F cap Q+, dim F cap Q-) with -1 for an empty intersection.
std::pair<int, int> bidimension(const Analysis& a, std::size_t facet);

struct OrbitQuotient {
  std::vector<std::string> names;  ///< orbit letter, primes dropped
  std::vector<std::vector<std::size_t>> orbits;
  Graph graph;
  int distance_A_L = -1;
};

OrbitQuotient orbit_adjacency_graph(const Analysis& a, const SymmetryGroup& plus_group);

Report verify_incidence_table(const VPolytope& q);
Report verify_prism_structure(const VPolytope& q);

/// The full check suite. Each line corresponds to one claim about the
/// polytope. Never throws on bad data; failures become FAIL lines.
Report verify_santos(const VPolytope& q);

}  // namespace hirsch::santos
