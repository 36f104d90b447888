#pragma once

// Degree-sum conditions (Dirac, Ore) and their localised variants evaluated
// on vertex neighbourhoods.
//
// All half-degree comparisons are integral (2*d >= bound); no floating point
// anywhere.  Convention: isolated vertices satisfy every local condition
// vacuously.  A vertex of degree 1 fails the locally-Dirac inequality
// literally (its neighbour has local degree 0 against bound 1); see
// locally_dirac_profile for the reading that skips tiny neighbourhoods.

#include <array>
#include <cstdint>
#include <optional>

#include "locdeg/graph.hpp"
#include "locdeg/rational.hpp"

namespace locdeg {

// Violation record for a local degree condition: the centre v whose
// neighbourhood fails, the offending vertex or pair inside it, and the
// numbers that broke the bound (2*local_degree_u >= bound for Dirac-style,
// local_degree_u + local_degree_w >= bound for Ore-style).
struct LocalWitness {
  int v = -1;
  int u = -1;
  int w = -1;  // -1 for Dirac-style conditions
  int local_degree_u = 0;
  int local_degree_w = -1;
  int bound = 0;
};

struct LocalCheck {
  bool holds = true;
  std::optional<LocalWitness> witness;  // lexicographically first violation
};

// n >= 3 and 2*deg(v) >= n for every vertex.
bool satisfies_dirac(const Graph& g);

// n >= 3 and deg(u) + deg(w) >= n for every non-adjacent pair u != w.
bool satisfies_ore(const Graph& g);

// For every v and every u in N(v): 2 * deg_{<N(v)>}(u) >= deg(v).
LocalCheck is_locally_dirac(const Graph& g);

// For every v and every non-adjacent pair u, w in N(v):
// deg_{<N(v)>}(u) + deg_{<N(v)>}(w) >= deg(v).
LocalCheck is_locally_ore(const Graph& g);

// <N[v]> satisfies Ore's pairwise condition with |N[v]| as the order.
LocalCheck is_closed_locally_ore(const Graph& g);

// <N[v]> satisfies Dirac's bound: 2 * deg_{<N[v]>}(u) >= |N[v]| for all u.
LocalCheck is_closed_locally_dirac(const Graph& g);

// Vertices violating the locally-Dirac inequality under the literal reading
// versus the reading that only inspects neighbourhoods of order >= 3.  The
// two differ exactly on vertices of degree 1 or 2.
struct LocallyDiracProfile {
  int violations_literal = 0;
  int violations_order3 = 0;
};
LocallyDiracProfile locally_dirac_profile(const Graph& g);

// <N(v)> connected for every non-isolated v.
bool is_locally_connected(const Graph& g);

struct ClawCheck {
  bool holds = true;
  std::optional<std::array<int, 4>> claw;  // centre, then three independent leaves
};
ClawCheck is_claw_free(const Graph& g);

// Distances inside <N(v)> agree with distances in G for every pair of
// neighbours of every v.
bool is_locally_isometric(const Graph& g);

// Edges among N(v) divided by C(deg v, 2), exact.  nullopt when deg(v) < 2.
std::optional<Rational> clustering_coefficient(const Graph& g, int v);

// Minimum over all vertices; nullopt when some vertex has degree < 2.
std::optional<Rational> min_clustering_coefficient(const Graph& g);

// Every <N(v)> of a non-isolated v has a Hamilton cycle.
struct LocallyHamiltonianResult {
  bool budget_exceeded = false;
  bool holds = false;
  int failing_vertex = -1;
};
LocallyHamiltonianResult is_locally_hamiltonian(
    const Graph& g, std::uint64_t node_budget = 10'000'000);

}  // namespace locdeg
