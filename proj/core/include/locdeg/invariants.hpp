#pragma once

// Global graph invariants: vertex/edge connectivity with certificates,
// diameter and girth.
//
// Connectivity values are computed by max-flow (Dinic) over all relevant
// terminal pairs and come with an explicit minimum cut that callers can
// verify independently.  The *_by_deletion variants recompute the same
// values by exhaustively deleting vertex/edge subsets; they are exponential
// and intended as cross-checks on small graphs.

#include <optional>
#include <utility>
#include <vector>

#include "locdeg/graph.hpp"

namespace locdeg {

struct VertexConnectivity {
  int value = 0;
  // A minimum separating set; empty when the graph is complete (value n-1),
  // disconnected (value 0) or has fewer than two vertices.
  std::vector<int> cut;
};

VertexConnectivity vertex_connectivity(const Graph& g);

struct EdgeConnectivity {
  int value = 0;
  // A minimum disconnecting edge set ((u, v) with u < v); empty when the
  // graph is disconnected or has fewer than two vertices.
  std::vector<std::pair<int, int>> cut;
};

EdgeConnectivity edge_connectivity(const Graph& g);

// Smallest k such that deleting some k vertices leaves a disconnected graph
// or at most one vertex.  Exponential; intended for small n.
int vertex_connectivity_by_deletion(const Graph& g);

// Smallest k such that deleting some k edges disconnects the graph (0 when
// already disconnected or n < 2).  Exponential; intended for small graphs.
int edge_connectivity_by_deletion(const Graph& g);

// True when removing the vertices of `cut` leaves a disconnected graph or at
// most one vertex.
bool verify_vertex_cut(const Graph& g, const std::vector<int>& cut);

// True when removing the listed edges disconnects the graph.
bool verify_edge_cut(const Graph& g,
                     const std::vector<std::pair<int, int>>& cut);

// Largest distance between a vertex pair; std::nullopt when disconnected or
// n == 0.
std::optional<int> diameter(const Graph& g);

// Length of a shortest cycle; std::nullopt for forests.
std::optional<int> girth(const Graph& g);

}  // namespace locdeg
