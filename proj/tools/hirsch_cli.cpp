// Command-line front end. Exit codes: 0 success, 1 a verification check
// failed (or an unexpected error), 2 unreadable input or bad arguments,
// 3 the requested operation is not possible on this input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hirsch/constructions.hpp"
#include "hirsch/io.hpp"
#include "hirsch/normal_fan.hpp"
#include "hirsch/santos.hpp"
#include "hirsch/torus_plot.hpp"

using namespace hirsch;

namespace {

struct Options {
  std::uint64_t seed = 0;
  int steps = 1;
  std::string format = "poly";
  std::string out;
  int svg_size = 800;

  std::string input, input2;
  std::size_t vertex = 0, vertex2 = 0;
  std::string face, matching;
  long dim = 0, facets = 0, diameter = 0, k = 1, j = 1;
  std::string map = "both";
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.out, text);
  }
}

std::string poly_text(const VPolytope& p) {
  std::ostringstream s;
  write_poly(s, p);
  return s.str();
}

std::vector<std::size_t> index_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (tok.empty() || pos != tok.size() || tok[0] == '-') throw ParseError(std::string("bad ") + what + " '" + text + "'");
    out.push_back(v);
  }
  return out;
}

VPolytope santos_input(const Options& o) { return o.input.empty() ? santos::vertices() : read_poly_file(o.input); }

int cmd_hull(const Options& o) {
  const VPolytope p = read_poly_file(o.input);
  const HullResult h = facet_enumeration(certify_vertices(p));
  if (h.dim != static_cast<int>(p.ambient_dim())) {
    throw InfeasibleError("hull: input spans dimension " + std::to_string(h.dim) + " only");
  }
  std::ostringstream s;
  write_hpoly(s, h);
  emit(o, s.str());
  return 0;
}

int cmd_width(const Options& o) {
  const Prismatoid q = make_prismatoid(read_poly_file(o.input));
  emit(o, std::to_string(width(q)) + "\n");
  return 0;
}

int cmd_diameter(const Options& o) {
  const VPolytope p = certify_vertices(read_poly_file(o.input));
  emit(o, std::to_string(graph_diameter(vertex_graph(facet_enumeration(p)))) + "\n");
  return 0;
}

int cmd_polar(const Options& o) {
  const VPolytope p = polar(read_poly_file(o.input));
  if (o.format == "poly") {
    emit(o, poly_text(p));
    return 0;
  }
  std::ostringstream s;
  write_hpoly(s, facet_enumeration(p));
  emit(o, s.str());
  return 0;
}

int cmd_verify_santos(const Options& o) {
  const Report r = santos::verify_santos(santos_input(o));
  emit(o, r.to_string());
  return r.all_pass() ? 0 : 1;
}

int cmd_ops(const Options& o) {
  emit(o, poly_text(one_point_suspension(read_poly_file(o.input), o.vertex)));
  return 0;
}

int cmd_push(const Options& o) {
  const VPolytope p = read_poly_file(o.input);
  std::vector<std::size_t> face;
  if (o.face.empty()) {
    for (std::size_t i = 0; i < p.size(); ++i) face.push_back(i);
  } else {
    face = index_list(o.face, "face");
  }
  emit(o, poly_text(push_vertex(p, o.vertex, face, o.seed).polytope));
  return 0;
}

int cmd_product(const Options& o) {
  emit(o, poly_text(product(read_poly_file(o.input), read_poly_file(o.input2))));
  return 0;
}

int cmd_blend(const Options& o) {
  const VPolytope p1 = read_poly_file(o.input);
  const VPolytope p2 = read_poly_file(o.input2);
  std::vector<std::size_t> matching;
  if (o.matching.empty()) {
    const int d = facet_enumeration(p1).dim;
    for (int i = 0; i < d; ++i) matching.push_back(i);
  } else {
    matching = index_list(o.matching, "matching");
  }
  const BlendGraph b = blend_graph(p1, o.vertex, p2, o.vertex2, matching);
  emit(o, "dim " + std::to_string(b.dim) + "\nfacets " + std::to_string(b.facet_count) + "\nnodes " +
              std::to_string(b.graph.size()) + "\nedges " + std::to_string(b.graph.edge_count()) + "\ndiameter " +
              std::to_string(graph_diameter(b.graph)) + "\n");
  return 0;
}

int cmd_dstep(const Options& o) {
  if (o.steps < 0) throw std::invalid_argument("--steps must be nonnegative");
  const Prismatoid q = make_prismatoid(read_poly_file(o.input));
  const auto r = strong_dstep_iterate(q, o.steps, o.seed, [](const StepTrace& t) {
    std::cout << t.to_string() << std::endl;
  });
  if (!o.out.empty()) write_text_file(o.out, poly_text(r.result.polytope));
  return 0;
}

int cmd_excess(const Options& o) {
  const ExcessReport e = hirsch_excess(o.dim, o.facets, o.diameter);
  emit(o, to_string(e.excess) + (is_hirsch(o.dim, o.facets, o.diameter) ? " HIRSCH\n" : " NON-HIRSCH\n"));
  return 0;
}

int cmd_family(const Options& o) {
  const FamilyParameters f = family_parameters(o.dim, o.facets, o.diameter, o.k, o.j);
  emit(o, "dim " + std::to_string(f.dim) + "\nfacets " + std::to_string(f.facets) + "\ndiameter>= " +
              std::to_string(f.diameter) + "\nexcess>= " + to_string(f.excess) + "\nepsilon " + to_string(f.epsilon) +
              "\nlimit " + to_string(f.limit) + "\nbound " + to_string(f.bound) + "\nrefined-bound " +
              to_string(f.refined_bound) + "\n");
  return 0;
}

int cmd_plot_torus(const Options& o) {
  const VPolytope q = santos_input(o);
  std::vector<TorusLayer> layers;
  if (o.map == "plus" || o.map == "both") {
    layers.push_back({"G+", "#1f4e9c", torus_plot_data(santos::base_polytope(q, true), "G+")});
  }
  if (o.map == "minus" || o.map == "both") {
    layers.push_back({"G-", "#b3261e", torus_plot_data(santos::base_polytope(q, false), "G-")});
  }
  emit(o, torus_svg(layers, o.svg_size));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on prismatoids, spindles and Hirsch-type constructions"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized constructions")->capture_default_str();
  app.add_option("--steps", o.steps, "Strong d-step iterations")->capture_default_str();
  app.add_option("--format", o.format, "Output format for polar")
      ->check(CLI::IsMember({"poly", "hpoly"}))
      ->capture_default_str();
  app.add_option("--out", o.out, "Write output here instead of standard output");
  app.add_option("--svg-size", o.svg_size, "SVG width and height in pixels")
      ->check(CLI::Range(16, 100000))
      ->capture_default_str();
  app.fallthrough();

  int (*run)(const Options&) = nullptr;
  const auto with_input = [&](CLI::App* sub, int (*fn)(const Options&), bool required = true) {
    auto* opt = sub->add_option("input", o.input, "POLY file");
    if (required) opt->required();
    sub->callback([&run, fn] { run = fn; });
    return sub;
  };

  with_input(app.add_subcommand("hull", "Facets and incidences of a V-polytope, as HPOLY"), cmd_hull);
  with_input(app.add_subcommand("width", "Width of a prismatoid"), cmd_width);
  with_input(app.add_subcommand("diameter", "Diameter of the vertex graph"), cmd_diameter);
  with_input(app.add_subcommand("polar", "Polar about the vertex centroid"), cmd_polar);
  with_input(app.add_subcommand("verify-santos", "Check suite for the 48-vertex prismatoid (embedded data by default)"),
             cmd_verify_santos, false);

  auto* construct = app.add_subcommand("construct", "Build a new polytope");
  construct->require_subcommand(1);
  auto* ops = with_input(construct->add_subcommand("ops", "One-point suspension at a vertex"), cmd_ops);
  ops->add_option("--vertex", o.vertex, "Vertex index")->required();
  auto* push = with_input(construct->add_subcommand("push", "Push a vertex towards a face"), cmd_push);
  push->add_option("--vertex", o.vertex, "Vertex index")->required();
  push->add_option("--face", o.face, "Comma-separated vertex indices spanning the target face (default: all)");
  auto* prod = with_input(construct->add_subcommand("product", "Cartesian product of two polytopes"), cmd_product);
  prod->add_option("input2", o.input2, "Second POLY file")->required();
  auto* blend = with_input(construct->add_subcommand("blend", "Blend the graphs of two simple polytopes"), cmd_blend);
  blend->add_option("input2", o.input2, "Second POLY file")->required();
  blend->add_option("--vertex", o.vertex, "Vertex of the first polytope")->required();
  blend->add_option("--vertex2", o.vertex2, "Vertex of the second polytope")->required();
  blend->add_option("--matching", o.matching, "Facet matching as a comma-separated permutation (default: identity)");
  with_input(construct->add_subcommand("dstep-iterate", "Iterate the strong d-step on a prismatoid"), cmd_dstep);

  for (auto* sub : {app.add_subcommand("excess", "Hirsch excess of (d, n, l)"),
                    app.add_subcommand("family", "Parameters of the product-and-glue family")}) {
    sub->add_option("--dim", o.dim, "Dimension d")->required();
    sub->add_option("--facets", o.facets, "Number of facets n")->required();
    sub->add_option("--diameter", o.diameter, "Diameter l")->required();
    if (sub->get_name() == "family") {
      sub->add_option("--k", o.k, "Power")->capture_default_str();
      sub->add_option("--j", o.j, "Number of glued copies")->capture_default_str();
      sub->callback([&run] { run = cmd_family; });
    } else {
      sub->callback([&run] { run = cmd_excess; });
    }
  }

  auto* plot = with_input(app.add_subcommand("plot-torus", "SVG of the two normal maps on the flat torus"),
                          cmd_plot_torus, false);
  plot->add_option("--map", o.map, "Which map to draw")
      ->check(CLI::IsMember({"plus", "minus", "both"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return run(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 3;
  } catch (const GeometryError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
