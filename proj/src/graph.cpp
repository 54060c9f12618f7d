#include "hirsch/graph.hpp"

#include <algorithm>
#include <deque>

namespace hirsch {

Graph::Graph(std::size_t nodes, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : adj_(nodes) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& l : adj_) twice += l.size();
  return twice / 2;
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < adj_.size(); ++a) {
    for (auto b : adj_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) throw std::invalid_argument("Graph: self loop");
  for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
    auto& l = adj_.at(x);
    const auto it = std::lower_bound(l.begin(), l.end(), y);
    if (it == l.end() || *it != y) l.insert(it, y);
  }
}

Graph Graph::without(const std::vector<std::size_t>& removed, std::vector<std::size_t>* old_index) const {
  std::vector<bool> gone(adj_.size(), false);
  for (auto r : removed) gone.at(r) = true;
  std::vector<std::size_t> renum(adj_.size(), 0), back;
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    if (gone[v]) continue;
    renum[v] = back.size();
    back.push_back(v);
  }
  Graph g(back.size());
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    if (gone[v]) continue;
    for (auto w : adj_[v]) {
      if (!gone[w]) g.adj_[renum[v]].push_back(renum[w]);
    }
  }
  if (old_index) *old_index = std::move(back);
  return g;
}

// ------------------------------------------------------------ polytope graphs

DualGraph dual_graph(const HullResult& hull) {
  const auto& inc = hull.incidence;
  const std::size_t m = inc.facets();
  Graph g(m);
  if (hull.dim == 1) {
    // The two endpoints of a segment meet in the empty ridge.
    if (m == 2) g.add_edge(0, 1);
    return g;
  }
  const std::size_t need = static_cast<std::size_t>(hull.dim - 1);
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t h = f + 1; h < m; ++h) {
      const Bitset common = inc.row(f) & inc.row(h);
      if (common.count() < need) continue;
      // Any third facet containing the common face must contain the
      // vertex of that face lying on the fewest facets; scan only those.
      std::size_t pivot = common.find_first();
      for (auto v = common.find_next(pivot); v != Bitset::npos; v = common.find_next(v)) {
        if (inc.column(v).count() < inc.column(pivot).count()) pivot = v;
      }
      const Bitset& candidates = inc.column(pivot);
      bool ridge = true;
      for (auto k = candidates.find_first(); k != Bitset::npos; k = candidates.find_next(k)) {
        if (k == f || k == h) continue;
        if (common.is_subset_of(inc.row(k))) {
          ridge = false;
          break;
        }
      }
      if (ridge) g.add_edge(f, h);
    }
  }
  return g;
}

VertexGraph vertex_graph(const HullResult& hull) {
  const auto& inc = hull.incidence;
  const std::size_t n = inc.vertices();
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = v + 1; w < n; ++w) {
      const Bitset shared = inc.column(v) & inc.column(w);
      if (hull.dim > 1 && shared.count() < static_cast<std::size_t>(hull.dim - 1)) continue;
      Bitset face(n);
      face.set();
      for (auto f = shared.find_first(); f != Bitset::npos; f = shared.find_next(f)) face &= inc.row(f);
      if (face.count() == 2) g.add_edge(v, w);
    }
  }
  return g;
}

// ------------------------------------------------------------------- BFS

std::vector<int> bfs_distances(const Graph& g, const std::vector<std::size_t>& sources) {
  std::vector<int> dist(g.size(), -1);
  std::deque<std::size_t> queue;
  for (auto s : sources) {
    if (dist.at(s) == 0) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (auto w : g.neighbors(v)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, std::size_t source) {
  return bfs_distances(g, std::vector<std::size_t>{source});
}

int graph_distance(const Graph& g, std::size_t a, std::size_t b) {
  const int d = bfs_distances(g, a).at(b);
  if (d < 0) throw DisconnectedGraphError("graph_distance: nodes are not connected");
  return d;
}

int graph_diameter(const Graph& g) {
  int best = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) throw DisconnectedGraphError("graph_diameter: graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::vector<std::size_t> shortest_path(const Graph& g, std::size_t a, std::size_t b) {
  const auto from_b = bfs_distances(g, b);
  if (from_b.at(a) < 0) throw DisconnectedGraphError("shortest_path: nodes are not connected");
  std::vector<std::size_t> path{a};
  std::size_t cur = a;
  while (cur != b) {
    for (auto w : g.neighbors(cur)) {
      if (from_b[w] == from_b[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

}  // namespace hirsch
