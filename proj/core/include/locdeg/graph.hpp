#pragma once

// Dense undirected simple graphs on a fixed vertex set {0, ..., n-1}.
//
// Adjacency is kept as bitset rows so neighbourhood tests, intersections and
// induced-subgraph extraction are word-parallel.  The intended scale is a few
// hundred vertices at most; memory is O(n^2 / 64) words.
//
// Graphs are immutable once fully built: construction code calls add_edge,
// after which a const Graph can be shared freely across threads.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace locdeg {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

// Sentinel for "no path" in distance vectors.
inline constexpr int kUnreachable = -1;

class Graph {
 public:
  Graph() = default;  // the null graph
  explicit Graph(int n);

  // Builds a graph from (u, v) pairs.  Every pair must satisfy
  // 0 <= u < v < n and appear at most once; violations throw
  // std::invalid_argument naming the offending pair.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1u;
  }

  // Adds an edge; throws on out-of-range endpoints or self-loops, ignores
  // edges that are already present.
  void add_edge(int u, int v);

  int degree(int v) const { return deg_[v]; }
  int min_degree() const;
  int max_degree() const;

  std::vector<int> neighbours(int v) const;  // ascending
  std::vector<std::pair<int, int>> edges() const;  // (u, v) with u < v, sorted

  // Number of common neighbours of u and v.
  int common_neighbours(int u, int v) const;

  // Raw bitset row access for word-parallel algorithms.
  int words_per_row() const { return words_; }
  const std::uint64_t* row(int v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  // Calls f(w) for every neighbour w of v in ascending order.
  template <class F>
  void for_each_neighbour(int v, F&& f) const {
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f((w << 6) + b);
        bits &= bits - 1;
      }
    }
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  void check_vertex(int v, const char* what) const;

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;  // n_ rows of words_ words each
  std::vector<int> deg_;
};

// --- neighbourhoods and derived graphs -------------------------------------

VertexSet open_neighbourhood(const Graph& g, int v);
VertexSet closed_neighbourhood(const Graph& g, int v);  // includes v

struct InducedSubgraph {
  Graph graph;
  VertexSet vertices;            // new index -> old id (ascending)
  std::vector<int> old_to_new;   // old id -> new index, -1 when absent
};

// Subgraph induced by `vertices` (must be sorted, duplicate-free, in range;
// throws std::invalid_argument otherwise).
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

// Strong product: (u,v) ~ (x,y) iff  u = x and v ~ y,  or  v = y and u ~ x,
// or  u ~ x and v ~ y.  Vertex (u, v) gets index u * h.order() + v.
Graph strong_product(const Graph& g, const Graph& h);

// Join: disjoint union plus all edges between the two sides.  Vertices of g
// keep their ids, vertices of h are shifted by g.order().
Graph join(const Graph& g, const Graph& h);

// k-th power: u ~ v iff 1 <= dist(u, v) <= k.  Requires k >= 1.
Graph graph_power(const Graph& g, int k);

// BFS distances from source; kUnreachable marks vertices in other components.
std::vector<int> bfs_distances(const Graph& g, int source);

// All-pairs distances via per-vertex BFS.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);  // true for n <= 1

Graph complement(const Graph& g);

}  // namespace locdeg
