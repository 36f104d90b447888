#include "locdeg/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace locdeg {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  n_ = n;
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
  deg_.assign(n, 0);
}

void Graph::check_vertex(int v, const char* what) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument(std::string(what) + ": vertex " +
                                std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u, "add_edge");
  check_vertex(v, "add_edge");
  if (u == v)
    throw std::invalid_argument("add_edge: self-loop at vertex " +
                                std::to_string(u));
  if (adjacent(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ull << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ull << (u & 63);
  ++deg_[u];
  ++deg_[v];
  ++m_;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") out of range for n = " +
                                  std::to_string(n));
    if (u >= v)
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) +
                                  ") violates the u < v convention");
    if (g.adjacent(u, v))
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) +
                                  ", " + std::to_string(v) + ")");
    g.add_edge(u, v);
  }
  return g;
}

int Graph::min_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = (v == 0) ? deg_[v] : std::min(d, deg_[v]);
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, deg_[v]);
  return d;
}

std::vector<int> Graph::neighbours(int v) const {
  check_vertex(v, "neighbours");
  std::vector<int> out;
  out.reserve(deg_[v]);
  for_each_neighbour(v, [&](int w) { out.push_back(w); });
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for_each_neighbour(u, [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

int Graph::common_neighbours(int u, int v) const {
  check_vertex(u, "common_neighbours");
  check_vertex(v, "common_neighbours");
  const std::uint64_t* a = row(u);
  const std::uint64_t* b = row(v);
  int count = 0;
  for (int w = 0; w < words_; ++w) count += __builtin_popcountll(a[w] & b[w]);
  return count;
}

VertexSet open_neighbourhood(const Graph& g, int v) { return g.neighbours(v); }

VertexSet closed_neighbourhood(const Graph& g, int v) {
  VertexSet out = g.neighbours(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  InducedSubgraph result;
  result.old_to_new.assign(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("induced_subgraph: vertex " +
                                  std::to_string(v) + " out of range");
    if (i > 0 && vertices[i - 1] >= v)
      throw std::invalid_argument(
          "induced_subgraph: vertex list must be strictly ascending");
    result.old_to_new[v] = static_cast<int>(i);
  }
  result.vertices = vertices;
  Graph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j]))
        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  result.graph = std::move(sub);
  return result;
}

Graph strong_product(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  Graph p(ng * nh);
  auto id = [nh](int u, int v) { return u * nh + v; };
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) {
      // same g-coordinate, adjacent h-coordinates
      h.for_each_neighbour(v, [&](int y) {
        if (v < y) p.add_edge(id(u, v), id(u, y));
      });
      // adjacent g-coordinates: same or adjacent h-coordinates
      g.for_each_neighbour(u, [&](int x) {
        if (u >= x) return;
        p.add_edge(id(u, v), id(x, v));
        h.for_each_neighbour(v, [&](int y) { p.add_edge(id(u, v), id(x, y)); });
      });
    }
  return p;
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  Graph j(ng + nh);
  for (auto [u, v] : g.edges()) j.add_edge(u, v);
  for (auto [u, v] : h.edges()) j.add_edge(ng + u, ng + v);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) j.add_edge(u, ng + v);
  return j;
}

Graph graph_power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("graph_power: k must be >= 1");
  Graph p(g.order());
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> dist = bfs_distances(g, v);
    for (int u = v + 1; u < g.order(); ++u)
      if (dist[u] != kUnreachable && dist[u] <= k) p.add_edge(v, u);
  }
  return p;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.order())
    throw std::invalid_argument("bfs_distances: source out of range");
  std::vector<int> dist(g.order(), kUnreachable);
  std::vector<int> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    g.for_each_neighbour(u, [&](int w) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<int> dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

}  // namespace locdeg
