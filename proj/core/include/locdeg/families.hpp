#pragma once

// Parametric graph generators with fixed vertex labelling, plus a small text
// form ("family-id key=value ...") used by the CLI.
//
// Labelling conventions (stable; tests and fixtures depend on them):
//   * strong products A (x) B: vertex (i, a) of the product gets id
//     i * order(B) + a, i.e. consecutive blocks ("layers") of size order(B).
//   * attachments (extra vertices glued onto a base graph) get the ids
//     following the base graph, in the order they are described.

#include <map>
#include <string>
#include <vector>

#include "locdeg/graph.hpp"

namespace locdeg {

Graph complete(int n);                       // n >= 0
Graph path(int n);                           // n >= 1, edges i -- i+1
Graph cycle(int n);                          // n >= 3
Graph complete_bipartite(int a, int b);      // sides [0,a) and [a,a+b)
Graph complete_multipartite(int parts, int part_size);  // parts >= 3, size >= 1
Graph petersen();  // outer cycle 0..4, inner pentagram 5..9, spokes i -- i+5

// P_m (x) K_3, order 3m; layers of three, (i, a) -> 3i + a.  m >= 2.
Graph path_strong_k3(int m);

// C_m (x) K_3 from the raw product definition (complete or near-complete for
// m = 3, 4).  m >= 3.
Graph cycle_strong_k3(int m);

// P_m (x) K_2, order 2m; planar.  m >= 3.
Graph path_strong_k2(int m);

// G joined to a clique of the same order: vertices of g keep their ids, the
// clique occupies [n, 2n).  Requires g connected with order >= 3.
Graph join_with_clique(const Graph& g);

// Two cliques of order k^2+2 ([0, k^2+2) and [k^2+2, 2k^2+4)) bridged by a
// complete k-by-k bipartite join between the first k vertices of each.
// k >= 3.
Graph lambda_gap_family(int k);

// P_m (x) K_3 plus one vertex (id 3m) joined to the last layer.  m >= 3.
Graph ore_min_degree3(int m);

// Diameter-extremal construction of order n >= 9, split on n mod 3:
//   n = 3k:   P_{k-1} (x) K_3, one vertex joined to the first layer, an edge
//             (two adjacent vertices) joined to the last layer.
//   n = 3k+1: P_{k-1} (x) K_3, an edge joined to each end layer.
//   n = 3k+2: P_k (x) K_3, a single vertex joined to each end layer.
// Attachment ids follow the product block, first-layer attachment first.
Graph ore_diameter_extremal(int n);

Graph balanced_complete_bipartite(int half);  // K_{half,half}, half >= 2

// k-th power of the cycle C_{3k}.  k >= 1.
Graph cycle_power_3k(int k);

// --- text form ---------------------------------------------------------------

struct FamilySpec {
  std::string family;
  std::map<std::string, int> params;

  bool operator==(const FamilySpec&) const = default;
};

// Parses "family-id key=value [key=value ...]"; throws std::invalid_argument
// on malformed input.
FamilySpec parse_family_spec(const std::string& text);

std::string to_string(const FamilySpec& spec);

// Instantiates the named family; throws std::invalid_argument for unknown
// ids, wrong parameter sets, or out-of-range values.
Graph build_family(const FamilySpec& spec);

// All family ids accepted by build_family, ascending.
std::vector<std::string> family_ids();

}  // namespace locdeg
