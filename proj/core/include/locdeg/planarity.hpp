#pragma once

// Planarity testing with certificates in both directions.
//
// A planar graph gets a combinatorial embedding (cyclic neighbour order per
// vertex) that verify_embedding can certify via face tracing and the Euler
// relation.  A non-planar graph gets an explicit subdivision of K5 or K33
// whose structure verify_kuratowski_witness re-checks edge by edge.  The
// exhaustive subdivision search provides an independent (exponential) oracle
// for cross-checking on small graphs.

#include <optional>
#include <vector>

#include "locdeg/cycles.hpp"  // Budget
#include "locdeg/graph.hpp"

namespace locdeg {

struct KuratowskiWitness {
  enum class Kind { K5, K33 };
  Kind kind = Kind::K5;
  // 5 vertices (K5) or 6 (K33); for K33 the classes are recovered from the
  // path structure, so no order is imposed here.
  std::vector<int> branch_vertices;
  // 10 (K5) or 9 (K33) paths; each starts and ends at a branch vertex and
  // its internal vertices are used by no other path.
  std::vector<std::vector<int>> paths;
};

struct PlanarityResult {
  bool planar = false;
  // Cyclic neighbour order per vertex when planar.
  std::vector<std::vector<int>> embedding;
  // Subdivision witness when non-planar (absent only if extraction failed,
  // which would indicate a bug).
  std::optional<KuratowskiWitness> witness;
};

PlanarityResult is_planar(const Graph& g);

// Checks that the witness paths exist in g, meet only at branch vertices,
// and connect the branch vertices in the K5 or K33 pattern.
bool verify_kuratowski_witness(const Graph& g, const KuratowskiWitness& w);

// Face-traces the rotation system and checks n - m + faces == 2.  Defined
// for connected graphs; returns false when g is disconnected.
bool verify_embedding(const Graph& g,
                      const std::vector<std::vector<int>>& embedding);

struct SubdivisionSearch {
  bool budget_exceeded = false;
  std::optional<KuratowskiWitness> witness;
};

// Brute-force search for a K5 or K33 subdivision: all branch-vertex choices,
// then backtracking over internally disjoint connecting paths.  Exponential;
// the budget is charged per search step.
SubdivisionSearch kuratowski_by_exhaustive_search(const Graph& g,
                                                  Budget& budget);

}  // namespace locdeg
