#include "locdeg/predicates.hpp"

#include "locdeg/cycles.hpp"

namespace locdeg {

namespace {

// deg_{<N(v)>}(u) for u in N(v) is the number of common neighbours of u and v.
int local_degree(const Graph& g, int v, int u) { return g.common_neighbours(v, u); }

}  // namespace

bool satisfies_dirac(const Graph& g) {
  if (g.order() < 3) return false;
  return 2 * g.min_degree() >= g.order();
}

bool satisfies_ore(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (!g.adjacent(u, w) && g.degree(u) + g.degree(w) < n) return false;
  return true;
}

LocalCheck is_locally_dirac(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    LocalCheck bad;
    bool found = false;
    g.for_each_neighbour(v, [&](int u) {
      if (found) return;
      int ld = local_degree(g, v, u);
      if (2 * ld < d) {
        bad.holds = false;
        bad.witness = LocalWitness{v, u, -1, ld, -1, d};
        found = true;
      }
    });
    if (found) return bad;
  }
  return {};
}

LocalCheck is_locally_ore(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    const std::vector<int> nbrs = g.neighbours(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        int u = nbrs[i], w = nbrs[j];
        if (g.adjacent(u, w)) continue;
        int lu = local_degree(g, v, u);
        int lw = local_degree(g, v, w);
        if (lu + lw < d)
          return {false, LocalWitness{v, u, w, lu, lw, d}};
      }
  }
  return {};
}

LocalCheck is_closed_locally_ore(const Graph& g) {
  // Inside <N[v]> every u in N(v) gains v as a neighbour, so its degree is
  // the open local degree plus one; the order of the subgraph is deg(v) + 1.
  // Pairs involving v itself are always adjacent and never constrain.
  for (int v = 0; v < g.order(); ++v) {
    const int closed_order = g.degree(v) + 1;
    const std::vector<int> nbrs = g.neighbours(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        int u = nbrs[i], w = nbrs[j];
        if (g.adjacent(u, w)) continue;
        int lu = local_degree(g, v, u) + 1;
        int lw = local_degree(g, v, w) + 1;
        if (lu + lw < closed_order)
          return {false, LocalWitness{v, u, w, lu, lw, closed_order}};
      }
  }
  return {};
}

LocalCheck is_closed_locally_dirac(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) continue;
    const int closed_order = g.degree(v) + 1;
    LocalCheck bad;
    bool found = false;
    g.for_each_neighbour(v, [&](int u) {
      if (found) return;
      int lu = local_degree(g, v, u) + 1;
      if (2 * lu < closed_order) {
        bad.holds = false;
        bad.witness = LocalWitness{v, u, -1, lu, -1, closed_order};
        found = true;
      }
    });
    if (found) return bad;
  }
  return {};
}

LocallyDiracProfile locally_dirac_profile(const Graph& g) {
  LocallyDiracProfile p;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    bool violated = false;
    g.for_each_neighbour(v, [&](int u) {
      if (!violated && 2 * local_degree(g, v, u) < d) violated = true;
    });
    if (violated) {
      ++p.violations_literal;
      if (d >= 3) ++p.violations_order3;
    }
  }
  return p;
}

bool is_locally_connected(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) continue;
    if (!is_connected(induced_subgraph(g, g.neighbours(v)).graph)) return false;
  }
  return true;
}

ClawCheck is_claw_free(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const std::vector<int> nbrs = g.neighbours(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.adjacent(nbrs[i], nbrs[j])) continue;
        for (std::size_t k = j + 1; k < nbrs.size(); ++k) {
          if (g.adjacent(nbrs[i], nbrs[k]) || g.adjacent(nbrs[j], nbrs[k]))
            continue;
          return {false, std::array<int, 4>{v, nbrs[i], nbrs[j], nbrs[k]}};
        }
      }
  }
  return {};
}

bool is_locally_isometric(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    const InducedSubgraph sub = induced_subgraph(g, g.neighbours(v));
    const auto local = all_pairs_distances(sub.graph);
    for (std::size_t i = 0; i < sub.vertices.size(); ++i) {
      const std::vector<int> global = bfs_distances(g, sub.vertices[i]);
      for (std::size_t j = i + 1; j < sub.vertices.size(); ++j)
        if (local[i][static_cast<int>(j)] != global[sub.vertices[j]])
          return false;
    }
  }
  return true;
}

std::optional<Rational> clustering_coefficient(const Graph& g, int v) {
  const int d = g.degree(v);
  if (d < 2) return std::nullopt;
  long long edges = 0;
  g.for_each_neighbour(v, [&](int u) { edges += local_degree(g, v, u); });
  edges /= 2;
  return Rational{edges, static_cast<long long>(d) * (d - 1) / 2};
}

std::optional<Rational> min_clustering_coefficient(const Graph& g) {
  std::optional<Rational> best;
  for (int v = 0; v < g.order(); ++v) {
    std::optional<Rational> c = clustering_coefficient(g, v);
    if (!c) return std::nullopt;
    if (!best || *c < *best) best = c;
  }
  return best;
}

LocallyHamiltonianResult is_locally_hamiltonian(const Graph& g,
                                                std::uint64_t node_budget) {
  Budget budget{node_budget};
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) continue;
    HamiltonicityResult r =
        is_hamiltonian(induced_subgraph(g, g.neighbours(v)).graph, budget);
    if (r.budget_exceeded) return {true, false, -1};
    if (!r.hamiltonian) return {false, false, v};
  }
  return {false, true, -1};
}

}  // namespace locdeg
