#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hirsch/graph.hpp"
#include "hirsch/prismatoid.hpp"

namespace hirsch {

/// A construction could not be carried out (precondition not met, or a
/// validate-and-halve search ran out of attempts).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// -------------------------------------------------------- one-point suspension

/// Embeds q at last coordinate 0 and replaces vertex v by u = (v, 1) and
/// w = (v, -1). The other vertices keep their order; u and w come last.
VPolytope one_point_suspension(const VPolytope& q, std::size_t v);

/// Re-enumerates the suspension and compares its facets with the vertex
/// sets predicted from the facets of q: (F - v) + {u, w} when v is in F,
/// otherwise F + {u} and F + {w}.
bool ops_facet_formula_holds(const VPolytope& q, std::size_t v);

/// The facet of the suspension standing for facet f of q. For facets missing
/// v there are two; `use_w` picks F * w instead of F * u.
std::size_t lifted_facet(const HullResult& q, const HullResult& suspension, std::size_t v, std::size_t f,
                         bool use_w = false);

/// Dual distance between lifts of f1, f2 is at least their distance in q,
/// for every choice of lift.
bool ops_distance_check(const VPolytope& q, std::size_t v, std::size_t f1, std::size_t f2);
/// The same for all facet pairs at once.
bool ops_distance_check_all(const VPolytope& q, std::size_t v);

// ------------------------------------------------------------------ pushing

using PushPredicate = std::function<bool(const VPolytope&, const HullResult&)>;

struct PushResult {
  VPolytope polytope;
  HullResult hull;
  Point position;
  int halvings = 0;
};

/// Moves vertex v towards a random point p in the relative interior of the
/// face spanned by `face` (vertex indices of q): v' = v + t (p - v) with t
/// halved from 1 until the result keeps every vertex, each of its facets
/// lies in exactly one facet of q once v' is read as v, adjacent facets go
/// to equal or adjacent facets, and `generic` (if given) accepts it.
PushResult push_vertex(const VPolytope& q, std::size_t v, const std::vector<std::size_t>& face, std::uint64_t seed,
                       const PushPredicate& generic = {}, int max_halvings = 64);

/// The facet map of a push: facet of q containing each facet of the pushed
/// polytope with v' read as v. nullopt if some facet has no unique image.
std::optional<std::vector<std::size_t>> push_facet_map(const HullResult& q, const HullResult& pushed,
                                                       std::size_t v);

// ----------------------------------------------------------- strong d-step

struct StepTrace {
  int step = 0;
  int dim = 0;
  std::size_t vertices = 0;
  std::size_t facets = 0;
  int width = 0;

  std::string to_string() const;  ///< "STEP i dim=.. vertices=.. facets=.. width=.."
};

/// One step: one dimension and one vertex more, width at least one more.
/// Throws InfeasibleError when both bases are simplices or no perturbation
/// validates.
Prismatoid strong_dstep_step(const Prismatoid& q, std::uint64_t seed);

struct IterateResult {
  Prismatoid result;
  std::vector<StepTrace> trace;  ///< step 0 is the input
};

/// min(max_steps, n - 2d) steps, with a trace line per polytope.
IterateResult strong_dstep_iterate(const Prismatoid& q, int max_steps, std::uint64_t seed,
                                   const std::function<void(const StepTrace&)>& on_step = {});

// ------------------------------------------------------ products and blends

/// Vertices are all concatenations (p, q), p-major.
VPolytope product(const VPolytope& a, const VPolytope& b);
VPolytope power(const VPolytope& p, int k);

struct BlendGraph {
  Graph graph;
  std::size_t facet_count = 0;
  int dim = 0;
  std::vector<std::string> labels;  ///< "1:<label>" or "2:<label>"
};

/// Glues the graphs of two simple d-polytopes at simple vertices v1, v2.
/// matching[i] = j pairs the i-th facet through v1 with the j-th facet
/// through v2 (both in increasing facet order).
BlendGraph blend_graph(const VPolytope& p1, std::size_t v1, const VPolytope& p2, std::size_t v2,
                       const std::vector<std::size_t>& matching);

// ------------------------------------------------------------------ excess

struct ExcessReport {
  long dim = 0;
  long facets = 0;
  long diameter = 0;
  Scalar excess;  ///< diameter / (facets - dim) - 1
};

ExcessReport hirsch_excess(long d, long n, long l);
bool is_hirsch(long d, long n, long l);

struct FamilyParameters {
  long dim = 0;
  long facets = 0;
  long diameter = 0;   ///< lower bound
  Scalar excess;       ///< of the j-th member, from its parameters
  Scalar epsilon;      ///< excess of the seed polytope
  Scalar limit;        ///< excess as j grows: epsilon - 1/(k(n-d))
  Scalar bound;        ///< (1 - 1/k) epsilon
  Scalar refined_bound;  ///< (1 - 1/(bk)) epsilon with b = l - n + d
  long b = 0;
};

/// The k-fold power of a non-Hirsch (d, n, l) polytope, then j copies of it
/// glued together.
FamilyParameters family_parameters(long d, long n, long l, long k, long j);

}  // namespace hirsch
