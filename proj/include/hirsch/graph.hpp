#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hirsch/polytope.hpp"

namespace hirsch {

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t nodes) : adj_(nodes) {}
  Graph(std::size_t nodes, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
  bool has_edge(std::size_t a, std::size_t b) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;  ///< (a, b) with a < b, sorted

  void add_edge(std::size_t a, std::size_t b);  ///< keeps lists sorted; ignores duplicates
  Graph without(const std::vector<std::size_t>& removed, std::vector<std::size_t>* old_index = nullptr) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<std::size_t>> adj_;
};

using DualGraph = Graph;
using VertexGraph = Graph;

class DisconnectedGraphError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Facets sharing a ridge. Two facets are adjacent when the face they span
/// lies in no third facet and has at least dim-1 vertices.
DualGraph dual_graph(const HullResult& hull);
/// Vertices v, w are adjacent when the smallest face containing both is {v, w}.
VertexGraph vertex_graph(const HullResult& hull);

/// -1 for unreachable nodes.
std::vector<int> bfs_distances(const Graph& g, std::size_t source);
std::vector<int> bfs_distances(const Graph& g, const std::vector<std::size_t>& sources);
int graph_distance(const Graph& g, std::size_t a, std::size_t b);
/// Throws DisconnectedGraphError if some pair is unreachable.
int graph_diameter(const Graph& g);
bool is_connected(const Graph& g);
/// One shortest path from a to b (inclusive), lowest-index parents first.
std::vector<std::size_t> shortest_path(const Graph& g, std::size_t a, std::size_t b);

}  // namespace hirsch
