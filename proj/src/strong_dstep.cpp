// The inductive step that trades one unit of asimpliciality for one extra
// dimension and at least one extra unit of width.
//
// With Q+ the base that is not a simplex and v a vertex of Q-, the one-point
// suspension S_v(Q) is almost a prismatoid: Q+ has become a ridge. Lifting a
// single vertex a of Q+ along the new coordinate turns it back into a facet.
// For the width to grow, every facet through a other than Q+ has to be a
// simplex; if that fails a is first pushed into the relative interior of Q+.

#include <random>

#include "hirsch/constructions.hpp"

namespace hirsch {

std::string StepTrace::to_string() const {
  return "STEP " + std::to_string(step) + " dim=" + std::to_string(dim) + " vertices=" + std::to_string(vertices) +
         " facets=" + std::to_string(facets) + " width=" + std::to_string(width);
}

namespace {

constexpr int kJitterAttempts = 3;
constexpr int kMaxHalvings = 64;

Inequality lifted(const Inequality& ineq) {
  std::vector<Scalar> c = ineq.coeffs();
  c.emplace_back(0);
  return Inequality(std::move(c), ineq.offset());
}

/// The new coordinate axis, tilted on retries by a small random direction in
/// the base hyperplane's direction space.
Point lift_direction(const Inequality& base, int attempt, std::mt19937_64& rng) {
  const std::size_t d = base.dim();
  if (attempt == 0) {
    Point axis = Point::zero(d + 1);
    axis[d] = 1;
    return axis;
  }
  std::uniform_int_distribution<int> pick(-2, 2);
  Point r = Point::zero(d);
  for (std::size_t i = 0; i < d; ++i) r[i] = pick(rng);
  const Point c = base.normal();
  r -= (dot(c, r) / dot(c, c)) * c;
  Point dir = (Scalar(1) / Scalar(8)) * r.with(Scalar(0));
  dir[d] += 1;
  return dir;
}

}  // namespace

Prismatoid strong_dstep_step(const Prismatoid& q, std::uint64_t seed) {
  const int d = q.dim();
  if (q.asimpliciality() <= 0) throw InfeasibleError("strong d-step: both bases are simplices");
  std::size_t plus = q.base_plus, minus = q.base_minus;
  if (q.hull.incidence.row(plus).count() == static_cast<std::size_t>(d)) std::swap(plus, minus);
  const Inequality plus_ineq = q.hull.facet(plus);
  const Inequality minus_ineq = q.hull.facet(minus);
  const int old_width = width(q);
  const auto plus_verts = q.hull.incidence.vertices_of(plus);
  const std::size_t v = q.hull.incidence.vertices_of(minus).front();
  std::mt19937_64 rng(seed);

  for (const std::size_t a : plus_verts) {
    // conv(Q+ - a) must still span the base hyperplane.
    std::vector<Point> rest;
    for (auto i : plus_verts) {
      if (i != a) rest.push_back(q.polytope.vertices[i]);
    }
    if (affine_rank(rest) != d - 1) continue;

    const auto generic = [&](const VPolytope&, const HullResult& h) {
      const auto pf = h.find_facet(plus_ineq);
      if (!pf) return false;
      for (auto f : h.incidence.facets_of(a)) {
        if (f != *pf && h.incidence.row(f).count() != static_cast<std::size_t>(d)) return false;
      }
      return true;
    };
    VPolytope base = q.polytope;
    if (!generic(q.polytope, q.hull)) {
      try {
        base = push_vertex(q.polytope, a, plus_verts, rng(), generic).polytope;
      } catch (const InfeasibleError&) {
        continue;
      }
    }

    const VPolytope s = one_point_suspension(base, v);
    const std::size_t a_s = a < v ? a : a - 1;
    for (int attempt = 0; attempt < kJitterAttempts; ++attempt) {
      const Point dir = lift_direction(plus_ineq, attempt, rng);
      Scalar eps(1);
      for (int h = 0; h <= kMaxHalvings; ++h, eps /= 2) {
        VPolytope cand = s;
        cand.vertices[a_s] += eps * dir;
        try {
          Prismatoid next = make_prismatoid(cand, lifted(plus_ineq), lifted(minus_ineq));
          if (width(next) >= old_width + 1) return next;
        } catch (const GeometryError&) {
          // not yet a prismatoid with all points as vertices; shrink
        }
      }
    }
  }
  throw InfeasibleError("strong d-step: no perturbation validated");
}

IterateResult strong_dstep_iterate(const Prismatoid& q, int max_steps, std::uint64_t seed,
                                   const std::function<void(const StepTrace&)>& on_step) {
  if (max_steps < 0) throw std::invalid_argument("strong_dstep_iterate: max_steps must be nonnegative");
  IterateResult out{q, {}};
  const auto record = [&](int step) {
    const Prismatoid& p = out.result;
    out.trace.push_back({step, p.dim(), p.vertex_count(), p.hull.facet_count(), width(p)});
    if (on_step) on_step(out.trace.back());
  };
  record(0);
  const long steps = std::min<long>(max_steps, std::max<long>(q.asimpliciality(), 0));
  for (long i = 1; i <= steps; ++i) {
    out.result = strong_dstep_step(out.result, seed + static_cast<std::uint64_t>(i - 1));
    record(static_cast<int>(i));
  }
  return out;
}

}  // namespace hirsch
