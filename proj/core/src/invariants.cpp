#include "locdeg/invariants.hpp"

#include <algorithm>
#include <climits>

namespace locdeg {

namespace {

// --- Dinic max-flow ---------------------------------------------------------

struct Dinic {
  struct Arc {
    int to;
    int cap;
    int rev;  // index of the reverse arc in arcs[to]
  };

  std::vector<std::vector<Arc>> arcs;
  std::vector<int> level;
  std::vector<int> iter;

  explicit Dinic(int nodes) : arcs(nodes), level(nodes), iter(nodes) {}

  void add_arc(int from, int to, int cap) {
    arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
    arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue{s};
    level[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (const Arc& a : arcs[v]) {
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[v] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level[t] >= 0;
  }

  int dfs(int v, int t, int f) {
    if (v == t) return f;
    for (int& i = iter[v]; i < static_cast<int>(arcs[v].size()); ++i) {
      Arc& a = arcs[v][i];
      if (a.cap > 0 && level[v] < level[a.to]) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          arcs[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  // Max flow from s to t, stopping early once `limit` is reached.
  int max_flow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      int f;
      while (flow < limit && (f = dfs(s, t, limit - flow)) > 0) flow += f;
    }
    return flow;
  }

  std::vector<char> residual_reachable(int s) {
    std::vector<char> seen(arcs.size(), 0);
    std::vector<int> queue{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (const Arc& a : arcs[v]) {
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          queue.push_back(a.to);
        }
      }
    }
    return seen;
  }
};

// Vertex-capacitated flow between non-adjacent s and t: every vertex other
// than the terminals is split into an entry and an exit node joined by a
// unit arc; graph edges get unbounded arcs in both directions.
struct SplitFlow {
  const Graph& g;
  Dinic dinic;
  int big;

  SplitFlow(const Graph& graph, int s, int t)
      : g(graph), dinic(2 * graph.order()), big(graph.order()) {
    for (int v = 0; v < g.order(); ++v) {
      if (v != s && v != t) dinic.add_arc(entry(v), exit_of(v), 1);
    }
    for (auto [u, v] : g.edges()) {
      dinic.add_arc(exit_of(u), entry(v), big);
      dinic.add_arc(exit_of(v), entry(u), big);
    }
  }

  static int entry(int v) { return 2 * v; }
  static int exit_of(int v) { return 2 * v + 1; }
};

}  // namespace

VertexConnectivity vertex_connectivity(const Graph& g) {
  const int n = g.order();
  VertexConnectivity best;
  if (n <= 1) return best;
  if (!is_connected(g)) return best;
  if (g.edge_count() == n * (n - 1) / 2) {
    best.value = n - 1;
    return best;
  }

  best.value = n - 1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      SplitFlow net(g, s, t);
      int flow =
          net.dinic.max_flow(SplitFlow::exit_of(s), SplitFlow::entry(t),
                             best.value);
      if (flow < best.value) {
        best.value = flow;
        std::vector<char> side =
            net.dinic.residual_reachable(SplitFlow::exit_of(s));
        best.cut.clear();
        for (int v = 0; v < n; ++v) {
          if (v == s || v == t) continue;
          if (side[SplitFlow::entry(v)] && !side[SplitFlow::exit_of(v)]) {
            best.cut.push_back(v);
          }
        }
      }
    }
  }
  return best;
}

EdgeConnectivity edge_connectivity(const Graph& g) {
  const int n = g.order();
  EdgeConnectivity best;
  if (n <= 1) return best;
  if (!is_connected(g)) return best;

  best.value = INT_MAX;
  for (int t = 1; t < n; ++t) {
    Dinic dinic(n);
    for (auto [u, v] : g.edges()) {
      dinic.add_arc(u, v, 1);
      dinic.add_arc(v, u, 1);
    }
    int flow = dinic.max_flow(0, t, best.value);
    if (flow < best.value) {
      best.value = flow;
      std::vector<char> side = dinic.residual_reachable(0);
      best.cut.clear();
      for (auto [u, v] : g.edges()) {
        if (side[u] != side[v]) best.cut.push_back({u, v});
      }
    }
  }
  return best;
}

namespace {

// Calls f on every k-subset of {0..n-1} (as a sorted index vector) until f
// returns true; returns whether any call did.
template <class F>
bool for_each_subset(int n, int k, F&& f) {
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  if (k > n) return false;
  while (true) {
    if (f(pick)) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

int vertex_connectivity_by_deletion(const Graph& g) {
  const int n = g.order();
  for (int k = 0; k < n; ++k) {
    bool found = for_each_subset(n, k, [&](const std::vector<int>& del) {
      std::vector<char> gone(n, 0);
      for (int v : del) gone[v] = 1;
      VertexSet keep;
      for (int v = 0; v < n; ++v) {
        if (!gone[v]) keep.push_back(v);
      }
      if (keep.size() <= 1) return true;
      return !is_connected(induced_subgraph(g, keep).graph);
    });
    if (found) return k;
  }
  return n == 0 ? 0 : n - 1;
}

int edge_connectivity_by_deletion(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !is_connected(g)) return 0;
  std::vector<std::pair<int, int>> edges = g.edges();
  const int m = static_cast<int>(edges.size());
  for (int k = 1; k <= m; ++k) {
    bool found = for_each_subset(m, k, [&](const std::vector<int>& del) {
      std::vector<char> gone(m, 0);
      for (int e : del) gone[e] = 1;
      Graph h(n);
      for (int e = 0; e < m; ++e) {
        if (!gone[e]) h.add_edge(edges[e].first, edges[e].second);
      }
      return !is_connected(h);
    });
    if (found) return k;
  }
  return m;
}

bool verify_vertex_cut(const Graph& g, const std::vector<int>& cut) {
  const int n = g.order();
  std::vector<char> gone(n, 0);
  for (int v : cut) {
    if (v < 0 || v >= n || gone[v]) return false;
    gone[v] = 1;
  }
  VertexSet keep;
  for (int v = 0; v < n; ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  if (keep.size() <= 1) return true;
  return !is_connected(induced_subgraph(g, keep).graph);
}

bool verify_edge_cut(const Graph& g,
                     const std::vector<std::pair<int, int>>& cut) {
  Graph h(g.order());
  std::vector<std::pair<int, int>> sorted_cut;
  for (auto [u, v] : cut) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= g.order() || u == v || !g.adjacent(u, v)) return false;
    sorted_cut.push_back({u, v});
  }
  std::sort(sorted_cut.begin(), sorted_cut.end());
  if (std::adjacent_find(sorted_cut.begin(), sorted_cut.end()) !=
      sorted_cut.end()) {
    return false;  // duplicate edge listed
  }
  for (auto [u, v] : g.edges()) {
    if (!std::binary_search(sorted_cut.begin(), sorted_cut.end(),
                            std::make_pair(u, v))) {
      h.add_edge(u, v);
    }
  }
  return !is_connected(h);
}

std::optional<int> diameter(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist = bfs_distances(g, s);
    for (int d : dist) {
      if (d == kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = INT_MAX;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<int> parent(n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      g.for_each_neighbour(u, [&](int w) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  if (best == INT_MAX) return std::nullopt;
  return best;
}

}  // namespace locdeg
